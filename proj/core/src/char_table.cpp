#include "normlat/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace normlat {

namespace {

// ---- arithmetic in F_l for a prime l < 2^16 -----------------------------------

struct Fp {
  uint64_t l;

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= l ? s - l : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + l - b; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % l; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t out = 1;
    a %= l;
    while (e) {
      if (e & 1) out = mul(out, a);
      a = mul(a, a);
      e >>= 1;
    }
    return out;
  }
  uint64_t inv(uint64_t a) const {
    if (a % l == 0) throw InternalInconsistency("division by zero mod l");
    return pow(a, l - 2);
  }
};

using Vec = std::vector<uint64_t>;
using Mat = std::vector<Vec>;  // row-major, square

// Smallest prime l = 1 (mod e) with l > 2*sqrt(n), below 2^16. Such a prime
// never divides n: every prime factor of n divides the exponent e, and l > e.
uint64_t lifting_prime(unsigned group_order, unsigned exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(group_order));
  for (uint64_t l = 1 + exponent; l < (1ull << 16); l += exponent)
    if (static_cast<double>(l) > bound && is_prime(l)) return l;
  throw PrimeSearchFailed("no prime = 1 mod exponent above 2*sqrt(|G|) and below 2^16");
}

uint64_t primitive_root(const Fp& F) {
  const auto factors = factorize(F.l - 1);
  for (uint64_t cand = 2; cand < F.l; ++cand) {
    bool ok = true;
    for (const auto& [p, e] : factors)
      if (F.pow(cand, (F.l - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  throw InternalInconsistency("no primitive root found");
}

// ---- linear algebra over F_l ---------------------------------------------------

// A subspace of F_l^r in reduced column-echelon form: each basis vector is 1
// at its own pivot row and 0 at every other basis pivot; pivots ascending.
struct Subspace {
  std::vector<Vec> basis;
  std::vector<unsigned> pivots;

  unsigned dim() const { return static_cast<unsigned>(basis.size()); }
};

Subspace echelonize(const Fp& F, const std::vector<Vec>& vecs) {
  Subspace s;
  for (Vec v : vecs) {
    for (size_t t = 0; t < s.basis.size(); ++t) {
      const uint64_t c = v[s.pivots[t]];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, s.basis[t][j]));
    }
    size_t piv = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == v.size()) continue;  // dependent
    const uint64_t d = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, d);
    for (size_t t = 0; t < s.basis.size(); ++t) {
      const uint64_t c = s.basis[t][piv];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); ++j)
        s.basis[t][j] = F.sub(s.basis[t][j], F.mul(c, v[j]));
    }
    size_t pos = 0;
    while (pos < s.pivots.size() && s.pivots[pos] < piv) ++pos;
    s.basis.insert(s.basis.begin() + pos, std::move(v));
    s.pivots.insert(s.pivots.begin() + pos, static_cast<unsigned>(piv));
  }
  return s;
}

// Action of the r x r matrix m on the subspace, expressed in its basis.
// The subspace must be invariant (the class matrices commute, so each stage's
// eigenspaces are preserved by the rest).
Mat restrict_action(const Fp& F, const Mat& m, const Subspace& sp) {
  const size_t s = sp.dim();
  const size_t r = m.size();
  Mat out(s, Vec(s, 0));
  for (size_t t = 0; t < s; ++t) {
    Vec w(r, 0);
    for (size_t row = 0; row < r; ++row) {
      uint64_t acc = 0;
      for (size_t col = 0; col < r; ++col)
        if (m[row][col] && sp.basis[t][col]) acc = F.add(acc, F.mul(m[row][col], sp.basis[t][col]));
      w[row] = acc;
    }
    Vec coords(s);
    for (size_t u = 0; u < s; ++u) coords[u] = w[sp.pivots[u]];
    // Verify w really lies in the subspace.
    for (size_t row = 0; row < r; ++row) {
      uint64_t acc = 0;
      for (size_t u = 0; u < s; ++u)
        if (coords[u] && sp.basis[u][row]) acc = F.add(acc, F.mul(coords[u], sp.basis[u][row]));
      if (acc != w[row])
        throw InternalInconsistency("class matrix does not preserve eigenspace");
    }
    for (size_t u = 0; u < s; ++u) out[u][t] = coords[u];
  }
  return out;
}

// Similarity reduction to upper Hessenberg form, in place.
void hessenberg(const Fp& F, Mat& h) {
  const size_t s = h.size();
  for (size_t col = 0; col + 2 < s; ++col) {
    size_t piv = s;
    for (size_t i = col + 1; i < s; ++i)
      if (h[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == s) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (size_t i = 0; i < s; ++i) std::swap(h[i][piv], h[i][col + 1]);
    }
    const uint64_t d = F.inv(h[col + 1][col]);
    for (size_t i = col + 2; i < s; ++i) {
      if (h[i][col] == 0) continue;
      const uint64_t f = F.mul(h[i][col], d);
      for (size_t j = 0; j < s; ++j) h[i][j] = F.sub(h[i][j], F.mul(f, h[col + 1][j]));
      for (size_t j = 0; j < s; ++j) h[j][col + 1] = F.add(h[j][col + 1], F.mul(f, h[j][i]));
    }
  }
}

// Characteristic polynomial (monic, ascending coefficients) via the leading-
// principal-minor recurrence on the Hessenberg form; needs no divisions, so
// it is valid even when l is smaller than the matrix dimension.
Vec char_poly(const Fp& F, Mat h) {
  hessenberg(F, h);
  const size_t s = h.size();
  std::vector<Vec> p(s + 1);
  p[0] = {1};
  for (size_t m = 1; m <= s; ++m) {
    Vec cur(m + 1, 0);
    for (size_t j = 0; j < p[m - 1].size(); ++j) {
      cur[j + 1] = F.add(cur[j + 1], p[m - 1][j]);
      cur[j] = F.sub(cur[j], F.mul(h[m - 1][m - 1], p[m - 1][j]));
    }
    uint64_t subdiag = 1;
    for (size_t i = m - 1; i >= 1; --i) {
      subdiag = F.mul(subdiag, h[i][i - 1]);
      const uint64_t coef = F.mul(h[i - 1][m - 1], subdiag);
      if (coef == 0) continue;
      for (size_t j = 0; j < p[i - 1].size(); ++j)
        cur[j] = F.sub(cur[j], F.mul(coef, p[i - 1][j]));
    }
    p[m] = std::move(cur);
  }
  return p[s];
}

uint64_t poly_eval(const Fp& F, const Vec& poly, uint64_t x) {
  uint64_t acc = 0;
  for (size_t j = poly.size(); j-- > 0;) acc = F.add(F.mul(acc, x), poly[j]);
  return acc;
}

// Basis of the kernel of a square matrix, by reduction to reduced row echelon.
std::vector<Vec> null_space(const Fp& F, Mat a) {
  const size_t s = a.size();
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  for (size_t col = 0; col < s && rank < s; ++col) {
    size_t piv = s;
    for (size_t i = rank; i < s; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == s) continue;
    std::swap(a[rank], a[piv]);
    const uint64_t d = F.inv(a[rank][col]);
    for (size_t j = 0; j < s; ++j) a[rank][j] = F.mul(a[rank][j], d);
    for (size_t i = 0; i < s; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const uint64_t f = a[i][col];
      for (size_t j = 0; j < s; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[rank][j]));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(s, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> out;
  for (size_t c = 0; c < s; ++c) {
    if (is_pivot[c]) continue;
    Vec v(s, 0);
    v[c] = 1;
    for (size_t t = 0; t < rank; ++t) v[pivot_cols[t]] = F.sub(0, a[t][c]);
    out.push_back(std::move(v));
  }
  return out;
}

// Split F_l^r into the common one-dimensional eigenspaces of the commuting
// class matrices.
std::vector<Vec> common_eigenvectors(const Fp& F, const std::vector<Mat>& mats,
                                     unsigned r) {
  std::vector<Subspace> spaces;
  {
    std::vector<Vec> id(r, Vec(r, 0));
    for (unsigned i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(echelonize(F, id));
  }
  for (size_t mi = 1; mi < mats.size(); ++mi) {
    bool split_needed = false;
    for (const Subspace& sp : spaces)
      if (sp.dim() > 1) split_needed = true;
    if (!split_needed) break;
    std::vector<Subspace> next;
    for (Subspace& sp : spaces) {
      if (sp.dim() == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      const Mat restricted = restrict_action(F, mats[mi], sp);
      const Vec poly = char_poly(F, restricted);
      unsigned found = 0;
      for (uint64_t lam = 0; lam < F.l; ++lam) {
        if (poly_eval(F, poly, lam) != 0) continue;
        Mat shifted = restricted;
        for (size_t i = 0; i < shifted.size(); ++i)
          shifted[i][i] = F.sub(shifted[i][i], lam);
        const std::vector<Vec> kern = null_space(F, shifted);
        if (kern.empty())
          throw InternalInconsistency("eigenvalue with empty eigenspace");
        std::vector<Vec> lifted;
        for (const Vec& kv : kern) {
          Vec v(r, 0);
          for (size_t u = 0; u < sp.dim(); ++u) {
            if (kv[u] == 0) continue;
            for (size_t row = 0; row < r; ++row)
              v[row] = F.add(v[row], F.mul(kv[u], sp.basis[u][row]));
          }
          lifted.push_back(std::move(v));
        }
        next.push_back(echelonize(F, lifted));
        found += static_cast<unsigned>(kern.size());
      }
      if (found != sp.dim())
        throw InternalInconsistency("class matrix fails to split an invariant subspace");
    }
    spaces = std::move(next);
  }
  std::vector<Vec> out;
  for (const Subspace& sp : spaces) {
    if (sp.dim() != 1)
      throw InternalInconsistency("common eigenspace of dimension > 1");
    out.push_back(sp.basis[0]);
  }
  return out;
}

}  // namespace

CharacterTable character_table(const Group& g, unsigned cap) {
  if (g.order > cap) throw CapExceeded("group order exceeds the character-table cap");
  CharacterTable ct;
  ct.group = &g;
  ct.classes = conjugacy_classes(g);
  const unsigned r = static_cast<unsigned>(ct.classes.size());

  std::vector<unsigned> class_of(g.order);
  for (unsigned c = 0; c < r; ++c)
    for (unsigned x : bits_of(ct.classes[c].members)) class_of[x] = c;
  std::vector<unsigned> inverse_class(r);
  for (unsigned c = 0; c < r; ++c)
    inverse_class[c] = class_of[g.inv[ct.classes[c].representative]];

  const unsigned e = g.exponent();
  const Fp F{lifting_prime(g.order, e)};

  // Class matrices: mats[i][j][k] = #{x in C_i : x^{-1} * rep(C_k) in C_j},
  // the structure constants of the class algebra acting on itself.
  std::vector<Mat> mats(r, Mat(r, Vec(r, 0)));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned x : bits_of(ct.classes[i].members))
      for (unsigned k = 0; k < r; ++k) {
        const unsigned y = g.mul(g.inv[x], ct.classes[k].representative);
        mats[i][class_of[y]][k] += 1;
      }
  for (auto& m : mats)
    for (auto& row : m)
      for (auto& entry : row) entry %= F.l;

  std::vector<Vec> eigen = common_eigenvectors(F, mats, r);
  // Normalize so the identity-class coordinate is 1 (it equals |C_1|*chi(1)/d = 1).
  for (Vec& w : eigen) {
    if (w[0] == 0) throw InternalInconsistency("eigenvector vanishes at the identity class");
    const uint64_t d = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, d);
  }

  // Degrees: d^2 = |G| / sum_k w_k * w_{k*} / |C_k|  (mod l), with the true
  // degree the unique square root below sqrt(|G|) < l/2.
  const uint64_t zeta = F.pow(primitive_root(F), (F.l - 1) / e);  // order e
  struct RawChar {
    unsigned degree;
    Vec modular;  // chi(g_k) mod l per class
  };
  std::vector<RawChar> raw;
  for (const Vec& w : eigen) {
    uint64_t s = 0;
    for (unsigned k = 0; k < r; ++k)
      s = F.add(s, F.mul(F.mul(w[k], w[inverse_class[k]]),
                         F.inv(ct.classes[k].size() % F.l)));
    const uint64_t d2 = F.mul(g.order % F.l, F.inv(s));
    unsigned degree = 0;
    for (unsigned d = 1; static_cast<unsigned long>(d) * d <= g.order; ++d)
      if (F.mul(d, d) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalInconsistency("no admissible character degree");
    Vec modular(r);
    for (unsigned k = 0; k < r; ++k)
      modular[k] = F.mul(F.mul(degree, w[k]), F.inv(ct.classes[k].size() % F.l));
    raw.push_back({degree, std::move(modular)});
  }
  {
    unsigned long degree_sq = 0;
    for (const RawChar& rc : raw) degree_sq += (unsigned long)rc.degree * rc.degree;
    if (raw.size() != r || degree_sq != g.order)
      throw InternalInconsistency("degrees fail sum-of-squares");
  }

  // Lift each modular value to a complex number: on a class of element order
  // n, chi(g) = sum_j m_j * exp(2*pi*i*j/n) where m_j is the multiplicity of
  // the j-th n-th root of unity among the representation eigenvalues,
  // recovered by a discrete Fourier inversion mod l.
  const double pi = std::acos(-1.0);
  std::vector<Character> chars;
  for (const RawChar& rc : raw) {
    Character ch;
    ch.degree = rc.degree;
    ch.values.resize(r);
    for (unsigned k = 0; k < r; ++k) {
      const unsigned rep = ct.classes[k].representative;
      const unsigned n = g.element_order(rep);
      const uint64_t zn = F.pow(zeta, e / n);       // order exactly n
      const uint64_t zn_inv = F.inv(zn);
      const uint64_t n_inv = F.inv(n % F.l);
      std::complex<double> value = 0.0;
      unsigned long mult_total = 0;
      unsigned elem = 0;  // rep^t
      Vec chi_on_powers(n);
      for (unsigned t = 0; t < n; ++t) {
        chi_on_powers[t] = rc.modular[class_of[elem]];
        elem = g.mul(elem, rep);
      }
      for (unsigned j = 0; j < n; ++j) {
        uint64_t m = 0;
        for (unsigned t = 0; t < n; ++t)
          m = F.add(m, F.mul(chi_on_powers[t], F.pow(zn_inv, (uint64_t)j * t % n)));
        m = F.mul(m, n_inv);
        if (m > rc.degree)
          throw InternalInconsistency("eigenvalue multiplicity exceeds the degree");
        mult_total += m;
        if (m == 0) continue;
        const double angle = 2.0 * pi * j / n;
        value += static_cast<double>(m) *
                 std::complex<double>(std::cos(angle), std::sin(angle));
      }
      if (mult_total != rc.degree)
        throw InternalInconsistency("eigenvalue multiplicities fail to sum to the degree");
      ch.values[k] = value;
    }
    chars.push_back(std::move(ch));
  }

  // Deterministic order: principal character first, then by (degree, value key).
  std::vector<unsigned> order(chars.size());
  for (unsigned i = 0; i < chars.size(); ++i) order[i] = i;
  auto value_key = [&](unsigned i) {
    std::vector<std::pair<long long, long long>> key;
    key.reserve(r);
    for (const auto& v : chars[i].values)
      key.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
    return key;
  };
  std::sort(order.begin(), order.end(), [&](unsigned x, unsigned y) {
    if (chars[x].degree != chars[y].degree) return chars[x].degree < chars[y].degree;
    return value_key(x) < value_key(y);
  });
  auto is_principal = [&](const Character& ch) {
    if (ch.degree != 1) return false;
    for (const auto& v : ch.values)
      if (std::abs(v - std::complex<double>(1.0, 0.0)) > kKernelTolerance) return false;
    return true;
  };
  std::stable_partition(order.begin(), order.end(),
                        [&](unsigned i) { return is_principal(chars[i]); });
  if (!is_principal(chars[order[0]]))
    throw InternalInconsistency("principal character missing");

  for (unsigned i : order) ct.characters.push_back(std::move(chars[i]));
  for (unsigned i = 0; i < ct.characters.size(); ++i)
    ct.characters[i].kernel = character_kernel(ct, i);
  return ct;
}

Subgroup character_kernel(const CharacterTable& ct, unsigned i, double tolerance) {
  if (i >= ct.characters.size()) throw DomainError("character index out of range");
  const Group& g = *ct.group;
  const Character& ch = ct.characters[i];
  Subgroup kernel{&g, Bitset(g.order)};
  const std::complex<double> at_identity(static_cast<double>(ch.degree), 0.0);
  for (unsigned k = 0; k < ct.classes.size(); ++k)
    if (std::abs(ch.values[k] - at_identity) < tolerance)
      kernel.members |= ct.classes[k].members;
  if (!is_subgroup(g, kernel.members) || !is_normal(g, kernel))
    throw KernelNotNormal("character kernel is not a normal subgroup");
  return kernel;
}

unsigned vertical_cut_number(const CharacterTable& ct, double tolerance) {
  const Group& g = *ct.group;
  if (g.order < 2) throw TrivialGroup("vertical cut needs |G| >= 2");
  const unsigned r = static_cast<unsigned>(ct.classes.size());
  // Columns are classes; column 0 is the identity class. A cut of the chosen
  // columns plus column 0 works when every non-principal row varies on it,
  // i.e. some chosen column differs from the degree.
  auto row_varies = [&](unsigned chi, const std::vector<unsigned>& cols) {
    const std::complex<double> at_identity(
        static_cast<double>(ct.characters[chi].degree), 0.0);
    for (unsigned c : cols)
      if (std::abs(ct.characters[chi].values[c] - at_identity) > tolerance) return true;
    return false;
  };
  for (unsigned d = 1; d < r; ++d) {
    std::vector<unsigned> idx(d);
    for (unsigned i = 0; i < d; ++i) idx[i] = i + 1;  // nonidentity columns
    while (true) {
      bool all_vary = true;
      for (unsigned chi = 1; chi < ct.characters.size() && all_vary; ++chi)
        all_vary = row_varies(chi, idx);
      if (all_vary) return d;
      int pos = static_cast<int>(d) - 1;
      while (pos >= 0 && idx[pos] == r - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (unsigned i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw InternalInconsistency("no vertical cut separates the rows");
}

std::complex<double> kernel_restricted_sum(const CharacterTable& ct, unsigned a,
                                           unsigned b, const Subgroup& n) {
  const Group& g = *ct.group;
  if (a >= ct.classes.size() || b >= ct.classes.size())
    throw DomainError("class index out of range");
  if (!is_subgroup(g, n.members) || !is_normal(g, n))
    throw NotInLattice("kernel_restricted_sum needs a normal subgroup");
  std::complex<double> total = 0.0;
  for (const Character& ch : ct.characters)
    if (ch.kernel.members == n.members)
      total += ch.values[a] * std::conj(ch.values[b]);
  return total;
}

std::complex<double> faithful_pair_sum(const CharacterTable& ct, unsigned a,
                                       unsigned b) {
  return kernel_restricted_sum(ct, a, b, trivial_subgroup(*ct.group));
}

mpz_class faithful_degree_square_sum(const CharacterTable& ct) {
  mpz_class total = 0;
  for (const Character& ch : ct.characters)
    if (ch.kernel.order() == 1) total += mpz_class(ch.degree) * ch.degree;
  return total;
}

bool class_extends_socle(const Group& g, const ConjClass& c, const Subgroup& s) {
  const Bitset prod = product_set(g, c.members, s.members);
  return prod.count() == static_cast<size_t>(c.size()) * s.order();
}

mpq_class faithful_sum_closed_form(const Group& g, const SocleDecomposition& dec,
                           const ConjClass& c) {
  if (!class_extends_socle(g, c, dec.socle))
    throw PreconditionViolated("class does not satisfy |CS| = |C||S|");
  mpq_class out(mpz_class(g.order), mpz_class(c.size()));
  out.canonicalize();
  for (const auto& ac : dec.abelian_classes)
    for (unsigned j = 0; j < ac.d; ++j) {
      mpq_class factor(pow_ui(ac.q, j), mpz_class(ac.order));
      factor.canonicalize();
      out *= mpq_class(1) - factor;
    }
  for (const Subgroup& s : dec.non_abelian) {
    mpq_class factor(mpz_class(1), mpz_class(s.order()));
    factor.canonicalize();
    out *= mpq_class(1) - factor;
  }
  out.canonicalize();
  return out;
}

bool has_faithful_irrep_structural(const SocleDecomposition& dec) {
  for (const auto& ac : dec.abelian_classes)
    for (unsigned j = 0; j < ac.d; ++j)
      if (mpz_class(ac.order) == pow_ui(ac.q, j)) return false;
  return true;
}

}  // namespace normlat
