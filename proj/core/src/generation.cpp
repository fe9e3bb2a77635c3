#include "normlat/generation.hpp"

#include <algorithm>

#include "normlat/moebius.hpp"

namespace normlat {

unsigned class_count_in(const Group& g, const std::vector<ConjClass>& classes,
                        const Subgroup& h) {
  if (!is_subgroup(g, h.members) || !is_normal(g, h))
    throw NotNormal("class_count_in requires a normal subgroup");
  unsigned count = 0;
  for (const ConjClass& c : classes)
    if (h.members.test(c.representative)) ++count;
  return count;
}

unsigned class_count_in(const Group& g, const Subgroup& h) {
  return class_count_in(g, conjugacy_classes(g), h);
}

namespace {

// Walk k-subsets of `pool` in lexicographic order; return true if any subset
// joins (via the lattice join table) to the top node.
bool some_subset_joins_to_top(const NormalLattice& lat,
                              const std::vector<unsigned>& pool, unsigned k) {
  const unsigned n = (unsigned)pool.size();
  if (k > n) return false;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    unsigned node = lat.bottom();
    for (unsigned i = 0; i < k; ++i) node = lat.join(node, pool[idx[i]]);
    if (node == lat.top()) return true;
    // Advance to the next combination.
    int pos = (int)k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

unsigned class_generating_number_bruteforce(const Group& g, const NormalLattice& lat) {
  if (g.order < 2) throw TrivialGroup("class generating number needs |G| >= 2");
  std::vector<unsigned> closures;  // join-table nodes of nonidentity classes
  for (unsigned c = 0; c < lat.classes.size(); ++c)
    if (lat.classes[c].representative != 0) closures.push_back(lat.class_closure[c]);
  for (unsigned k = 1; k <= closures.size(); ++k)
    if (some_subset_joins_to_top(lat, closures, k)) return k;
  throw InternalInconsistency("no class subset closes to the whole group");
}

unsigned class_generating_number_bruteforce(const Group& g) {
  return class_generating_number_bruteforce(g, enumerate_normal_subgroups(g));
}

unsigned class_generating_number_structural(const Group& g, const NormalLattice& lat) {
  if (g.order < 2) throw TrivialGroup("class generating number needs |G| >= 2");
  const Subgroup rad = radical(lat);
  unsigned best = 1;
  if (rad.order() == g.order)
    throw InternalInconsistency("radical cannot be the whole group");
  const auto [q, map] = quotient(g, rad);
  const NormalLattice qlat = enumerate_normal_subgroups(q);
  const auto [simples, abelians] = simple_factor_decomposition(q, qlat);
  (void)simples;
  for (const AbelianFactor& f : abelians) best = std::max(best, f.exponent);
  return best;
}

unsigned class_generating_number_structural(const Group& g) {
  return class_generating_number_structural(g, enumerate_normal_subgroups(g));
}

namespace {

// Per-node polynomials: coefficient j of table[v] counts the j-element
// subsets of the classes processed so far whose joint closure is node v.
// Degrees are truncated at max_k.
std::vector<std::vector<mpz_class>> subset_join_polynomials(const NormalLattice& lat,
                                                            unsigned max_k) {
  const unsigned m = lat.size();
  std::vector<std::vector<mpz_class>> table(m);
  table[lat.bottom()] = {mpz_class(1)};
  for (unsigned c = 0; c < lat.classes.size(); ++c) {
    const unsigned cnode = lat.class_closure[c];
    // Snapshot targets first: updates must not feed back into this round.
    std::vector<std::pair<unsigned, std::vector<mpz_class>>> shifted;
    for (unsigned v = 0; v < m; ++v) {
      if (table[v].empty()) continue;
      shifted.emplace_back(lat.join(v, cnode), table[v]);
    }
    for (auto& [target, poly] : shifted) {
      auto& dst = table[target];
      const size_t want = std::min<size_t>(poly.size() + 1, max_k + 1);
      if (dst.size() < want) dst.resize(want, 0);
      for (size_t j = 0; j + 1 < want; ++j) dst[j + 1] += poly[j];
    }
  }
  return table;
}

mpz_class tuple_count_from_poly(const std::vector<mpz_class>& poly, unsigned k) {
  if (k >= poly.size()) return 0;
  mpz_class out = poly[k];
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

std::vector<mpz_class> f_k_bruteforce_all(const Group& g, const NormalLattice& lat,
                                          unsigned k) {
  (void)g;
  const auto table = subset_join_polynomials(lat, k);
  std::vector<mpz_class> out(lat.size(), 0);
  for (unsigned v = 0; v < lat.size(); ++v) out[v] = tuple_count_from_poly(table[v], k);
  return out;
}

mpz_class f_k_bruteforce(const Group& g, const NormalLattice& lat,
                         const Subgroup& h, unsigned k) {
  const unsigned node = lat.index_of(h);
  if (k > lat.classes.size()) return 0;  // no k distinct classes exist
  (void)g;
  const auto table = subset_join_polynomials(lat, k);
  return tuple_count_from_poly(table[node], k);
}

mpz_class f_k_bruteforce(const Group& g, const Subgroup& h, unsigned k) {
  if (!is_subgroup(g, h.members) || !is_normal(g, h))
    throw NotNormal("f_k requires a normal subgroup");
  return f_k_bruteforce(g, enumerate_normal_subgroups(g), h, k);
}

mpz_class f_k_inversion(const Group& g, const NormalLattice& lat, unsigned k) {
  if (g.order < 2) return (k <= 1) ? 1 : 0;  // single class; [1]_k
  const Subgroup rad = radical(lat);
  const unsigned rad_node = lat.index_of(rad);
  const SocleDecomposition dec = socle_decomposition(g, lat);
  mpz_class total = 0;
  for (unsigned t = 0; t < lat.size(); ++t) {
    if (!lat.less_equal(rad_node, t)) continue;
    const unsigned classes_in_t = class_count_in(g, lat.classes, lat.nodes[t]);
    if (classes_in_t < k) continue;  // falling factorial vanishes
    total += falling_factorial(mpz_class(classes_in_t), k) *
             moebius_closed(g, lat, dec, lat.nodes[t], lat.nodes[lat.top()]);
  }
  return total;
}

mpz_class f_k_inversion(const Group& g, unsigned k) {
  return f_k_inversion(g, enumerate_normal_subgroups(g), k);
}

mpz_class abelian_pgroup_tuple_count(unsigned long p, unsigned n, unsigned d,
                                     unsigned k) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (d < 1 || d > n) throw DomainError("need 1 <= d <= n");
  mpz_class total = 0;
  for (unsigned i = 0; i <= d; ++i) {
    mpz_class term = falling_factorial(pow_ui(p, n - d + i), k);
    term *= gaussian_binomial(d, i, p);
    term *= pow_ui(p, choose2(d - i));
    if ((d - i) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

GenerationReport generation_report(const Group& g, const NormalLattice& lat,
                                   unsigned max_k) {
  GenerationReport rep;
  rep.class_generating_number = class_generating_number_bruteforce(g, lat);
  const auto table = subset_join_polynomials(lat, max_k);
  rep.fk.reserve(max_k + 1);
  for (unsigned k = 0; k <= max_k; ++k)
    rep.fk.push_back(tuple_count_from_poly(table[lat.top()], k));
  const Subgroup rad = radical(lat);
  const unsigned rad_node = lat.index_of(rad);
  for (unsigned t = 0; t < lat.size(); ++t)
    if (lat.less_equal(rad_node, t))
      rep.major_subgroups.emplace_back(t, class_count_in(g, lat.classes, lat.nodes[t]));
  return rep;
}

}  // namespace normlat
