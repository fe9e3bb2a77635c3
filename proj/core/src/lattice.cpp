#include "normlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "normlat/numeric.hpp"

namespace normlat {

int NormalLattice::find(const Bitset& members) const {
  for (unsigned i = 0; i < size(); ++i)
    if (nodes[i].members == members) return static_cast<int>(i);
  return -1;
}

unsigned NormalLattice::index_of(const Subgroup& s) const {
  const int i = find(s.members);
  if (i < 0) throw NotInLattice("subgroup is not a node of the lattice");
  return static_cast<unsigned>(i);
}

Bitset product_set(const Group& g, const Bitset& a, const Bitset& b) {
  Bitset out(g.order);
  const std::vector<unsigned> bb = bits_of(b);
  for (size_t x = a.find_first(); x != Bitset::npos; x = a.find_next(x))
    for (unsigned y : bb) out.set(g.mul(static_cast<unsigned>(x), y));
  return out;
}

Subgroup normal_closure(const Group& g, const std::vector<unsigned>& seed) {
  // Conjugation-close the seed, then generate; a subgroup generated by full
  // conjugacy classes is normal.
  Bitset conj_closed(g.order);
  for (unsigned s : seed)
    for (unsigned h = 0; h < g.order; ++h) conj_closed.set(g.conj(s, h));
  return generated_subgroup(g, bits_of(conj_closed));
}

NormalLattice enumerate_normal_subgroups(const Group& g) {
  NormalLattice lat;
  lat.group = &g;
  lat.classes = conjugacy_classes(g);

  std::vector<Bitset> found;
  std::map<Bitset, unsigned> index;
  auto add = [&](const Bitset& b) -> unsigned {
    auto [it, fresh] = index.emplace(b, (unsigned)found.size());
    if (fresh) found.push_back(b);
    return it->second;
  };

  Bitset triv(g.order);
  triv.set(0);
  add(triv);

  std::vector<unsigned> closure_raw(lat.classes.size());
  for (size_t c = 0; c < lat.classes.size(); ++c)
    closure_raw[c] = add(generated_subgroup(g, bits_of(lat.classes[c].members)).members);

  // Close under pairwise join; the product of two normal subgroups is already
  // a subgroup, so the join is the product set. The growing-list scan covers
  // every unordered pair exactly once.
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(product_set(g, found[i], found[j]));

  // Sort by (order, bitset) — a linear extension of inclusion.
  std::vector<unsigned> perm(found.size());
  for (unsigned i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](unsigned x, unsigned y) {
    const size_t cx = found[x].count(), cy = found[y].count();
    if (cx != cy) return cx < cy;
    return found[x] < found[y];
  });
  std::vector<unsigned> rank(found.size());
  for (unsigned i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  const unsigned m = static_cast<unsigned>(found.size());
  lat.nodes.resize(m);
  for (unsigned i = 0; i < m; ++i) lat.nodes[i] = Subgroup{&g, found[perm[i]]};
  lat.class_closure.resize(lat.classes.size());
  for (size_t c = 0; c < lat.classes.size(); ++c)
    lat.class_closure[c] = rank[closure_raw[c]];

  lat.leq.assign(m, Bitset(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      if (lat.nodes[i].members.is_subset_of(lat.nodes[j].members)) lat.leq[i].set(j);

  lat.covers.assign(m, {});
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      if (!lat.less_equal(i, j)) continue;
      bool direct = true;
      for (unsigned k = 0; k < m && direct; ++k)
        if (k != i && k != j && lat.less_equal(i, k) && lat.less_equal(k, j)) direct = false;
      if (direct) lat.covers[i].push_back(j);
    }
  }

  lat.meet_table.assign(m, std::vector<unsigned>(m, 0));
  lat.join_table.assign(m, std::vector<unsigned>(m, 0));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      const int mt = lat.find(lat.nodes[i].members & lat.nodes[j].members);
      const int jn = lat.find(product_set(g, lat.nodes[i].members, lat.nodes[j].members));
      if (mt < 0 || jn < 0) throw InternalInconsistency("lattice not closed under meet/join");
      lat.meet_table[i][j] = lat.meet_table[j][i] = static_cast<unsigned>(mt);
      lat.join_table[i][j] = lat.join_table[j][i] = static_cast<unsigned>(jn);
    }
  }
  return lat;
}

namespace {

std::vector<unsigned> coatom_indices(const NormalLattice& lat) {
  if (lat.group->order < 2) throw TrivialGroup("trivial group has no coatoms");
  std::vector<unsigned> out;
  for (unsigned i = 0; i + 1 < lat.size(); ++i)
    for (unsigned j : lat.covers[i])
      if (j == lat.top()) out.push_back(i);
  return out;
}

std::vector<unsigned> atom_indices(const NormalLattice& lat) {
  if (lat.group->order < 2) throw TrivialGroup("trivial group has no atoms");
  return lat.covers[lat.bottom()];
}

}  // namespace

std::vector<Subgroup> maximal_normal_subgroups(const NormalLattice& lat) {
  std::vector<Subgroup> out;
  for (unsigned i : coatom_indices(lat)) out.push_back(lat.nodes[i]);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const NormalLattice& lat) {
  std::vector<Subgroup> out;
  for (unsigned i : atom_indices(lat)) out.push_back(lat.nodes[i]);
  return out;
}

Subgroup radical(const NormalLattice& lat) {
  Bitset acc = full_subgroup(*lat.group).members;
  for (unsigned i : coatom_indices(lat)) acc &= lat.nodes[i].members;
  return Subgroup{lat.group, acc};
}

Subgroup socle(const NormalLattice& lat) {
  Bitset acc = trivial_subgroup(*lat.group).members;
  for (unsigned i : atom_indices(lat)) acc = product_set(*lat.group, acc, lat.nodes[i].members);
  return Subgroup{lat.group, acc};
}

namespace {

// Basis (minimal generating set) of an elementary abelian subgroup, plus the
// exponent vector of every member with respect to it.
struct EaCoordinates {
  unsigned long p = 0;
  std::vector<unsigned> basis;
  std::map<unsigned, std::vector<unsigned>> coords;  // element -> exponents
};

EaCoordinates ea_coordinates(const Group& g, const Subgroup& h, unsigned long p) {
  EaCoordinates out;
  out.p = p;
  Subgroup span = trivial_subgroup(g);
  for (unsigned x : bits_of(h.members)) {
    if (span.contains(x)) continue;
    out.basis.push_back(x);
    span = generated_subgroup(g, out.basis);
  }
  const unsigned k = static_cast<unsigned>(out.basis.size());
  // Walk all exponent vectors; by the basis property this hits each element once.
  std::vector<unsigned> exps(k, 0);
  while (true) {
    unsigned e = 0;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned t = 0; t < exps[i]; ++t) e = g.mul(e, out.basis[i]);
    if (!out.coords.emplace(e, exps).second)
      throw InternalInconsistency("elementary abelian basis is not a basis");
    unsigned i = 0;
    for (; i < k; ++i) {
      if (++exps[i] < p) break;
      exps[i] = 0;
    }
    if (i == k) break;
  }
  if (out.coords.size() != h.order())
    throw InternalInconsistency("elementary abelian coordinate walk incomplete");
  return out;
}

// Shared engine behind g_hom_count and g_isomorphic: enumerates candidate
// equivariant homomorphisms a -> b by images of a basis of a.
template <typename Visit>
void scan_equivariant_homs(const Group& g, const Subgroup& a, const Subgroup& b,
                           Visit&& visit) {
  unsigned long pa = 0, pb = 0;
  if (!is_elementary_abelian(g, a, pa) || !is_elementary_abelian(g, b, pb) || pa != pb)
    throw NotElementaryAbelian("expected elementary abelian subgroups of equal exponent");
  if (!is_normal(g, a) || !is_normal(g, b)) throw NotNormal("expected normal subgroups");

  const EaCoordinates ca = ea_coordinates(g, a, pa);
  const unsigned k = static_cast<unsigned>(ca.basis.size());
  if (k > 6) throw BudgetExceeded("equivariant scan caps basis rank at 6");

  const std::vector<unsigned> belems = bits_of(b.members);
  double total = 1;
  for (unsigned i = 0; i < k; ++i) total *= static_cast<double>(belems.size());
  if (total > double(1ull << 26)) throw BudgetExceeded("too many candidate maps");

  // Elements of a in a fixed order, for the homomorphism check.
  std::vector<unsigned> aelems;
  for (auto& [e, _] : ca.coords) aelems.push_back(e);
  const bool full_hom_check = total * aelems.size() * aelems.size() <= 1e9;

  std::vector<unsigned> pick(k, 0);  // indices into belems
  while (true) {
    // f(x) = prod images[i]^{coord_i(x)}; evaluate via coordinates.
    auto apply = [&](unsigned x) {
      const auto& cs = ca.coords.at(x);
      unsigned e = 0;
      for (unsigned i = 0; i < k; ++i)
        for (unsigned t = 0; t < cs[i]; ++t) e = g.mul(e, belems[pick[i]]);
      return e;
    };
    // Equivariance on the basis extends to all of a for a homomorphism.
    bool ok = true;
    for (unsigned i = 0; i < k && ok; ++i) {
      const unsigned img = belems[pick[i]];
      for (unsigned h = 0; h < g.order && ok; ++h)
        ok = apply(g.conj(ca.basis[i], h)) == g.conj(img, h);
    }
    if (ok) {
      // The coordinate construction is a homomorphism by design; re-check
      // explicitly (on all pairs when affordable, else on basis pairs).
      if (full_hom_check) {
        for (size_t x = 0; x < aelems.size() && ok; ++x)
          for (size_t y = 0; y < aelems.size() && ok; ++y)
            ok = apply(g.mul(aelems[x], aelems[y])) ==
                 g.mul(apply(aelems[x]), apply(aelems[y]));
      } else {
        for (unsigned i = 0; i < k && ok; ++i)
          for (unsigned j = 0; j < k && ok; ++j)
            ok = apply(g.mul(ca.basis[i], ca.basis[j])) ==
                 g.mul(apply(ca.basis[i]), apply(ca.basis[j]));
      }
    }
    if (ok) {
      if (!visit(pick, belems, ca)) return;
    }
    unsigned i = 0;
    for (; i < k; ++i) {
      if (++pick[i] < belems.size()) break;
      pick[i] = 0;
    }
    if (i == k) break;
  }
}

}  // namespace

unsigned long g_hom_count(const Group& g, const Subgroup& a, const Subgroup& b) {
  unsigned long count = 0;
  scan_equivariant_homs(g, a, b, [&](const auto&, const auto&, const auto&) {
    ++count;
    return true;
  });
  return count;
}

bool g_isomorphic(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  bool found = false;
  scan_equivariant_homs(g, a, b,
                        [&](const std::vector<unsigned>& pick,
                            const std::vector<unsigned>& belems, const EaCoordinates& ca) {
                          // Invertible iff the basis images span b.
                          std::vector<unsigned> imgs;
                          for (unsigned i = 0; i < pick.size(); ++i)
                            imgs.push_back(belems[pick[i]]);
                          if (generated_subgroup(g, imgs).order() == b.order()) {
                            found = true;
                            return false;  // stop the scan
                          }
                          return true;
                        });
  return found;
}

SocleDecomposition socle_decomposition(const Group& g, const NormalLattice& lat) {
  if (g.order < 2) throw TrivialGroup("socle decomposition needs |G| >= 2");
  SocleDecomposition dec;
  const std::vector<Subgroup> atoms = minimal_normal_subgroups(lat);

  std::vector<std::vector<unsigned>> iso_classes;  // indices into atoms
  for (unsigned i = 0; i < atoms.size(); ++i) {
    bool commutes = true;
    const std::vector<unsigned> m = bits_of(atoms[i].members);
    for (size_t x = 0; x < m.size() && commutes; ++x)
      for (size_t y = 0; y < m.size() && commutes; ++y)
        commutes = g.mul(m[x], m[y]) == g.mul(m[y], m[x]);
    if (!commutes) {
      dec.non_abelian.push_back(atoms[i]);
      continue;
    }
    unsigned long p = 0;
    if (!is_elementary_abelian(g, atoms[i], p))
      throw InternalInconsistency("abelian minimal normal subgroup not elementary abelian");
    bool placed = false;
    for (auto& cls : iso_classes) {
      if (g_isomorphic(g, atoms[cls[0]], atoms[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) iso_classes.push_back({i});
  }

  for (const auto& cls : iso_classes) {
    SocleDecomposition::AbelianClass ac;
    ac.representative = atoms[cls[0]];
    ac.order = ac.representative.order();
    ac.q = g_hom_count(g, ac.representative, ac.representative);
    unsigned long p = 0, qp = 0;
    unsigned e = 0;
    is_elementary_abelian(g, ac.representative, p);
    if (!prime_power(ac.q, qp, e) || qp != p)
      throw InternalInconsistency("endomorphism count is not a power of the right prime");
    // Class count must be the projective-point count (q^d - 1)/(q - 1).
    const size_t count = cls.size();
    unsigned long acc = 1, sum = 1;
    unsigned d = 1;
    while (sum < count) {
      acc *= ac.q;
      sum += acc;
      ++d;
    }
    if (sum != count)
      throw InternalInconsistency("minimal normal class count is not (q^d-1)/(q-1)");
    ac.d = d;
    Bitset comp = trivial_subgroup(g).members;
    for (unsigned i : cls) comp = product_set(g, comp, atoms[i].members);
    ac.component = Subgroup{&g, comp};
    if (mpz_class(ac.component.order()) != pow_ui(ac.order, ac.d))
      throw InternalInconsistency("homogeneous component order is not |A|^d");
    dec.abelian_classes.push_back(std::move(ac));
  }

  dec.a = static_cast<unsigned>(dec.abelian_classes.size());
  dec.b = static_cast<unsigned>(dec.non_abelian.size());
  dec.socle = socle(lat);
  mpz_class expected = 1;
  for (const auto& ac : dec.abelian_classes) expected *= pow_ui(ac.order, ac.d);
  for (const auto& s : dec.non_abelian) expected *= s.order();
  if (expected != mpz_class(dec.socle.order()))
    throw InternalInconsistency("socle order does not match decomposition");
  return dec;
}

bool is_product_of_simples(const Group& g, const NormalLattice& lat) {
  if (g.order == 1) return true;
  return radical(lat).order() == 1;
}

std::pair<std::vector<SimpleFactor>, std::vector<AbelianFactor>>
simple_factor_decomposition(const Group& g, const NormalLattice& lat) {
  if (g.order == 1) return {{}, {}};
  if (!is_product_of_simples(g, lat))
    throw NotSemisimple("group has nontrivial radical");

  const SocleDecomposition dec = socle_decomposition(g, lat);
  if (dec.socle.order() != g.order)
    throw InternalInconsistency("semisimple group must equal its socle");

  std::vector<AbelianFactor> abelian;
  for (const auto& ac : dec.abelian_classes) {
    // In a product of simples the elementary abelian part is central, so each
    // abelian minimal normal has prime order and the class has d = exponent.
    if (!is_prime(ac.order) || ac.q != ac.order)
      throw InternalInconsistency("abelian minimal normal of a semisimple group must be C_p");
    abelian.push_back(AbelianFactor{ac.order, ac.d});
  }
  std::sort(abelian.begin(), abelian.end(),
            [](const AbelianFactor& x, const AbelianFactor& y) { return x.prime < y.prime; });

  std::map<std::string, SimpleFactor> by_type;
  for (const Subgroup& s : dec.non_abelian) {
    const Group sg = subgroup_as_group(g, s);
    if (!is_simple(sg))
      throw InternalInconsistency("non-abelian minimal normal of a semisimple group must be simple");
    std::vector<unsigned> sizes;
    for (const ConjClass& c : conjugacy_classes(sg)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    std::ostringstream os;
    os << "simple[" << sg.order << "|";
    for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    os << "]";
    auto [it, fresh] = by_type.emplace(os.str(), SimpleFactor{os.str(), sg.order, 0});
    it->second.multiplicity += 1;
  }
  std::vector<SimpleFactor> simples;
  for (auto& [_, f] : by_type) simples.push_back(f);
  std::sort(simples.begin(), simples.end(), [](const SimpleFactor& x, const SimpleFactor& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.type < y.type;
  });
  return {std::move(simples), std::move(abelian)};
}

}  // namespace normlat
