#include "normlat/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "normlat/numeric.hpp"

namespace normlat {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

unsigned long to_number(const std::string& s, const std::string& name) {
  if (!all_digits(s) || s.size() > 7) throw UnknownName("bad catalog name: " + name);
  return std::stoul(s);
}

// Rotation by one on points 0..n-1.
std::vector<unsigned> cycle_perm(unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Group cyclic_group(unsigned n, unsigned cap) {
  if (n < 1) throw UnknownName("cyclic group needs n >= 1");
  if (n > cap) throw ClosureCapExceeded("cyclic group order exceeds cap");
  if (n == 1) return group_from_permutations({}, 1, cap);
  return group_from_permutations({cycle_perm(n)}, n, cap);
}

Group elementary_abelian_group(unsigned long p, unsigned d, unsigned cap) {
  if (!is_prime(p)) throw UnknownName("elementary abelian base must be prime");
  if (d < 1) throw UnknownName("elementary abelian exponent must be >= 1");
  if (pow_ui(p, d) > cap) throw ClosureCapExceeded("elementary abelian order exceeds cap");
  // d disjoint p-cycles, one per block of points.
  const unsigned n_points = static_cast<unsigned>(p) * d;
  std::vector<std::vector<unsigned>> gens;
  for (unsigned b = 0; b < d; ++b) {
    std::vector<unsigned> perm(n_points);
    for (unsigned i = 0; i < n_points; ++i) perm[i] = i;
    const unsigned base = b * static_cast<unsigned>(p);
    for (unsigned i = 0; i < p; ++i) perm[base + i] = base + (i + 1) % p;
    gens.push_back(std::move(perm));
  }
  return group_from_permutations(gens, n_points, cap);
}

// n!/divisor > cap, without overflow.
bool factorial_exceeds(unsigned n, unsigned divisor, unsigned cap) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f / divisor > cap;
}

Group symmetric_group(unsigned n, unsigned cap) {
  if (n < 1) throw UnknownName("symmetric group needs n >= 1");
  if (factorial_exceeds(n, 1, cap)) throw ClosureCapExceeded("symmetric group order exceeds cap");
  if (n == 1) return group_from_permutations({}, 1, cap);
  std::vector<unsigned> transposition(n);
  for (unsigned i = 0; i < n; ++i) transposition[i] = i;
  transposition[0] = 1;
  transposition[1] = 0;
  return group_from_permutations({transposition, cycle_perm(n)}, n, cap);
}

Group alternating_group(unsigned n, unsigned cap) {
  if (n < 1) throw UnknownName("alternating group needs n >= 1");
  if (n < 3) return group_from_permutations({}, 1, cap);
  if (factorial_exceeds(n, 2, cap)) throw ClosureCapExceeded("alternating group order exceeds cap");
  // Generated by the 3-cycles (1 2 i), i = 3..n.
  std::vector<std::vector<unsigned>> gens;
  for (unsigned i = 2; i < n; ++i) {
    std::vector<unsigned> perm(n);
    for (unsigned j = 0; j < n; ++j) perm[j] = j;
    perm[0] = 1;
    perm[1] = i;
    perm[i] = 0;
    gens.push_back(std::move(perm));
  }
  return group_from_permutations(gens, n, cap);
}

Group dihedral_group(unsigned n, unsigned cap) {
  if (n < 1) throw UnknownName("dihedral group needs n >= 1");
  if (2ul * n > cap) throw ClosureCapExceeded("dihedral group order exceeds cap");
  if (n == 1) return cyclic_group(2, cap);
  if (n == 2) return elementary_abelian_group(2, 2, cap);
  std::vector<unsigned> reflection(n);
  for (unsigned i = 0; i < n; ++i) reflection[i] = n - 1 - i;
  return group_from_permutations({cycle_perm(n), reflection}, n, cap);
}

Group quaternion_group() {
  // Elements indexed 2*unit + negbit with units 0=1, 1=i, 2=j, 3=k.
  static const std::array<const char*, 8> kLabels = {"1", "-1", "i", "-i",
                                                     "j", "-j", "k", "-k"};
  // unit_mul[u][v] = (sign, unit) of the quaternion product.
  struct SU {
    int sign;
    unsigned unit;
  };
  static const SU kUnitMul[4][4] = {
      {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
      {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
      {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
      {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
  };
  Group g;
  g.order = 8;
  g.mul_table.assign(64, 0);
  g.inv.resize(8);
  g.labels.assign(kLabels.begin(), kLabels.end());
  for (unsigned x = 0; x < 8; ++x) {
    for (unsigned y = 0; y < 8; ++y) {
      const SU su = kUnitMul[x / 2][y / 2];
      int sign = su.sign * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      g.mul_table[x * 8 + y] = static_cast<uint16_t>(2 * su.unit + (sign < 0 ? 1 : 0));
    }
  }
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y)
      if (g.mul(x, y) == 0) g.inv[x] = static_cast<uint16_t>(y);
  g.name = "Q8";
  return g;
}

Group special_linear_23() {
  // 2x2 matrices over F_3 with determinant 1, multiplied at build time.
  struct Mat {
    unsigned a, b, c, d;
  };
  std::vector<Mat> mats;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d)
          if ((3 + a * d % 3 + 3 - b * c % 3) % 3 == 1) mats.push_back({a, b, c, d});
  // Identity first, others in lexicographic order (already lexicographic).
  std::stable_sort(mats.begin(), mats.end(), [](const Mat& x, const Mat& y) {
    const bool xi = x.a == 1 && x.b == 0 && x.c == 0 && x.d == 1;
    const bool yi = y.a == 1 && y.b == 0 && y.c == 0 && y.d == 1;
    return xi > yi;
  });
  auto key = [](const Mat& m) { return ((m.a * 3 + m.b) * 3 + m.c) * 3 + m.d; };
  std::vector<int> index(81, -1);
  for (unsigned i = 0; i < mats.size(); ++i) index[key(mats[i])] = static_cast<int>(i);

  Group g;
  g.order = static_cast<unsigned>(mats.size());
  g.mul_table.assign((size_t)g.order * g.order, 0);
  g.inv.resize(g.order);
  g.labels.resize(g.order);
  for (unsigned i = 0; i < g.order; ++i) {
    const Mat& m = mats[i];
    std::ostringstream os;
    os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    g.labels[i] = os.str();
    for (unsigned j = 0; j < g.order; ++j) {
      const Mat& n = mats[j];
      const Mat p = {(m.a * n.a + m.b * n.c) % 3, (m.a * n.b + m.b * n.d) % 3,
                     (m.c * n.a + m.d * n.c) % 3, (m.c * n.b + m.d * n.d) % 3};
      const int pi = index[key(p)];
      if (pi < 0) throw InternalInconsistency("SL(2,3) product has determinant != 1");
      g.mul_table[(size_t)i * g.order + j] = static_cast<uint16_t>(pi);
    }
  }
  for (unsigned x = 0; x < g.order; ++x)
    for (unsigned y = 0; y < g.order; ++y)
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) g.inv[x] = static_cast<uint16_t>(y);
  g.name = "SL23";
  return g;
}

Group atom_from_name(const std::string& name, unsigned cap) {
  if (name == "Q8") return quaternion_group();
  if (name == "SL23") return special_linear_23();
  if (name.size() >= 2) {
    const char head = name[0];
    const std::string rest = name.substr(1);
    const size_t caret = rest.find('^');
    if (head == 'C' && caret != std::string::npos) {
      const unsigned long p = to_number(rest.substr(0, caret), name);
      const unsigned long d = to_number(rest.substr(caret + 1), name);
      return elementary_abelian_group(p, static_cast<unsigned>(d), cap);
    }
    if (caret == std::string::npos && all_digits(rest)) {
      const unsigned long n = to_number(rest, name);
      switch (head) {
        case 'C':
          return cyclic_group(static_cast<unsigned>(n), cap);
        case 'S':
          return symmetric_group(static_cast<unsigned>(n), cap);
        case 'A':
          return alternating_group(static_cast<unsigned>(n), cap);
        case 'D':
          return dihedral_group(static_cast<unsigned>(n), cap);
        default:
          break;
      }
    }
  }
  throw UnknownName("unknown catalog name: " + name);
}

}  // namespace

Group group_from_catalog(const std::string& name, unsigned cap) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  for (const std::string& p : parts)
    if (p.empty()) throw UnknownName("empty factor in catalog name: " + name);

  Group g = atom_from_name(parts[0], cap);
  for (size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, atom_from_name(parts[i], cap), cap);
  g.name = name;
  return g;
}

std::vector<std::vector<unsigned>> parse_permutations(const std::string& text,
                                                      unsigned& n_points) {
  // Split generator strings on ';'.
  std::vector<std::string> gen_texts;
  {
    std::string cur;
    for (char c : text) {
      if (c == ';') {
        gen_texts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    gen_texts.push_back(cur);
  }

  // First pass: parse cycles as 1-based point lists and find the max point.
  std::vector<std::vector<std::vector<unsigned long>>> gen_cycles;
  unsigned long max_point = 1;
  for (const std::string& gt : gen_texts) {
    std::vector<std::vector<unsigned long>> cycles;
    std::vector<unsigned long> seen;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < gt.size() && std::isspace((unsigned char)gt[i])) ++i;
    };
    skip_ws();
    while (i < gt.size()) {
      if (gt[i] != '(') throw ParseError("expected '(' in permutation: " + gt);
      ++i;
      std::vector<unsigned long> cycle;
      while (true) {
        skip_ws();
        if (i < gt.size() && gt[i] == ')') {
          ++i;
          break;
        }
        if (i >= gt.size() || !std::isdigit((unsigned char)gt[i]))
          throw ParseError("expected point or ')' in permutation: " + gt);
        unsigned long v = 0;
        while (i < gt.size() && std::isdigit((unsigned char)gt[i])) {
          v = v * 10 + (gt[i] - '0');
          if (v > 100000) throw ParseError("point out of range in permutation");
          ++i;
        }
        if (v == 0) throw ParseError("points are 1-based; 0 is not a point");
        cycle.push_back(v);
        max_point = std::max(max_point, v);
      }
      for (unsigned long v : cycle) {
        if (std::find(seen.begin(), seen.end(), v) != seen.end())
          throw InvalidPermutation("point repeated across cycles of one generator");
        seen.push_back(v);
      }
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    // An all-whitespace generator counts as the identity permutation.
    gen_cycles.push_back(std::move(cycles));
  }

  n_points = static_cast<unsigned>(max_point);
  std::vector<std::vector<unsigned>> gens;
  for (const auto& cycles : gen_cycles) {
    std::vector<unsigned> img(n_points);
    for (unsigned i = 0; i < n_points; ++i) img[i] = i;
    for (const auto& cycle : cycles)
      for (size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i] - 1] = static_cast<unsigned>(cycle[(i + 1) % cycle.size()] - 1);
    gens.push_back(std::move(img));
  }
  return gens;
}

Group group_from_spec(const std::string& spec, unsigned cap) {
  constexpr const char* kPrefix = "perm:";
  if (spec.rfind(kPrefix, 0) == 0) {
    unsigned n_points = 1;
    const auto gens = parse_permutations(spec.substr(5), n_points);
    Group g = group_from_permutations(gens, n_points, cap);
    g.name = spec;
    return g;
  }
  return group_from_catalog(spec, cap);
}

}  // namespace normlat
