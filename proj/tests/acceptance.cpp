// Acceptance gate: end-to-end checks of the full pipeline against frozen
// expected values and independent oracles. Prints one PASS/FAIL line per
// criterion; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "normlat/catalog.hpp"
#include "normlat/char_table.hpp"
#include "normlat/generation.hpp"
#include "normlat/moebius.hpp"

using namespace normlat;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (") + e.what() + ")";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("[%s] %s  (%.2fs)%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
              note.c_str());
  if (!ok) ++failures;
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names = {
      "C2",     "C3",      "C4",      "C5",      "C6",      "C8",
      "C12",    "C30",     "C2^2",    "C2^3",    "C2^4",    "C3^2",
      "C5^2",   "C2xC4",   "S3",      "D4",      "D5",      "D6",
      "Q8",     "A4",      "SL23",    "S4",      "A5",      "C2xA5",
      "A5xC3",  "S4xC3",   "C2^2xS3", "Q8xC3",   "S3xS3",   "C3xS3",
      "A4xC2",  "C2^3xC3"};
  return names;
}

bool worked_example_sl23() {
  const auto start = std::chrono::steady_clock::now();
  const Group g = group_from_catalog("SL23");
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const SocleDecomposition dec = socle_decomposition(g, lat);
  bool ok = g.order == 24 && lat.size() == 4;
  ok = ok && dec.a == 1 && dec.b == 0 && dec.socle.order() == 2;
  ok = ok && dec.abelian_classes.size() == 1 && dec.abelian_classes[0].d == 1 &&
       dec.abelian_classes[0].q == 2 && dec.abelian_classes[0].order == 2;

  const CharacterTable ct = character_table(g);
  std::vector<unsigned> faithful_degrees;
  for (const auto& chi : ct.characters)
    if (chi.kernel.order() == 1) faithful_degrees.push_back(chi.degree);
  std::sort(faithful_degrees.begin(), faithful_degrees.end());
  ok = ok && faithful_degrees == std::vector<unsigned>{2, 2, 2};
  ok = ok && faithful_degree_square_sum(ct) == 12;
  ok = ok && std::abs(faithful_pair_sum(ct, 0, 0) - 12.0) < 1e-8;

  // The size-4 class of order-3 elements sweeps full socle cosets; its
  // predicted faithful sum is 12/4 = 3 and its size divides 12.
  bool found = false;
  for (unsigned k = 0; k < ct.classes.size(); ++k) {
    if (ct.classes[k].size() != 4 ||
        g.element_order(ct.classes[k].representative) != 3)
      continue;
    found = true;
    ok = ok && class_extends_socle(g, ct.classes[k], dec.socle);
    ok = ok && faithful_sum_closed_form(g, dec, ct.classes[k]) == 3;
    ok = ok && std::abs(faithful_pair_sum(ct, k, k) - 3.0) < 1e-8;
    ok = ok && faithful_degree_square_sum(ct) % ct.classes[k].size() == 0;
    break;
  }
  ok = ok && found;

  // Moebius values along the chain 1 < Z < Q8 < SL(2,3).
  const MoebiusTable mu = moebius_closed_table(g, lat);
  ok = ok && mu.values[0][1] == -1 && mu.values[0][2] == 0 &&
       mu.values[0][3] == 0 && mu.values[1][2] == -1 && mu.values[2][3] == -1;

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return ok && secs < 1.0;
}

bool closed_moebius_everywhere() {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    const MoebiusTable rec = moebius_recursive(lat);
    for (unsigned i = 0; i < lat.size(); ++i)
      for (unsigned j = 0; j < lat.size(); ++j) {
        if (!lat.less_equal(i, j)) continue;
        if (moebius_closed(g, lat, dec, lat.nodes[i], lat.nodes[j]) !=
            rec.values[i][j])
          return false;
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return secs < 60.0;
}

bool tuple_counts_by_inversion() {
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    if (g.order > 48) continue;
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const unsigned r = static_cast<unsigned>(lat.classes.size());
    const unsigned n = class_generating_number_bruteforce(g, lat);
    for (unsigned k = 0; k <= r; ++k) {
      const mpz_class inv = f_k_inversion(g, lat, k);
      if (inv != f_k_bruteforce(g, lat, lat.nodes[lat.top()], k)) return false;
      if (k < n && inv != 0) return false;
      if (k == n && inv == 0) return false;
    }
  }
  return true;
}

bool generating_number_three_ways() {
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const unsigned brute = class_generating_number_bruteforce(g, lat);
    if (class_generating_number_structural(g, lat) != brute) return false;
    if (vertical_cut_number(character_table(g)) != brute) return false;
  }
  return true;
}

bool faithful_sums_match_products() {
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    if (g.order > 120) continue;
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    const CharacterTable ct = character_table(g);
    const mpz_class sum_squares = faithful_degree_square_sum(ct);
    const unsigned r = static_cast<unsigned>(ct.classes.size());
    std::vector<Bitset> coset(r);
    for (unsigned k = 0; k < r; ++k)
      coset[k] = product_set(g, ct.classes[k].members, dec.socle.members);
    for (unsigned a = 0; a < r; ++a) {
      if (class_extends_socle(g, ct.classes[a], dec.socle)) {
        const mpq_class predicted = faithful_sum_closed_form(g, dec, ct.classes[a]);
        if (std::abs(faithful_pair_sum(ct, a, a) - predicted.get_d()) > 1e-8)
          return false;
        if (sum_squares % ct.classes[a].size() != 0) return false;
      }
      for (unsigned b = 0; b < r; ++b)
        if (!(coset[a] == coset[b]) &&
            std::abs(faithful_pair_sum(ct, a, b)) > 1e-8)
          return false;
    }
  }
  // Frozen endpoints: A4 keeps only the degree-3 character, the Klein group
  // keeps nothing.
  {
    const Group g = group_from_catalog("A4");
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    const CharacterTable ct = character_table(g);
    if (faithful_sum_closed_form(g, dec, ct.classes[0]) != 9) return false;
    if (faithful_degree_square_sum(ct) != 9) return false;
  }
  {
    const Group g = group_from_catalog("C2^2");
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    const CharacterTable ct = character_table(g);
    if (faithful_sum_closed_form(g, dec, ct.classes[0]) != 0) return false;
    if (faithful_degree_square_sum(ct) != 0) return false;
  }
  return true;
}

bool faithful_existence_criteria() {
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    const CharacterTable ct = character_table(g);
    bool table_faithful = false;
    for (const auto& chi : ct.characters)
      if (chi.kernel.order() == 1) table_faithful = true;
    if (has_faithful_irrep_structural(dec) != table_faithful) return false;
  }
  // Nilpotent groups admit a faithful irreducible exactly when the center is
  // cyclic.
  for (const char* name : {"C2", "C3", "C4", "C5", "C6", "C8", "C12", "C30",
                           "C2^2", "C2^3", "C2^4", "C3^2", "C5^2", "C2xC4",
                           "D4", "Q8", "Q8xC3", "C2^3xC3"}) {
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    const Group z = subgroup_as_group(g, center(g));
    bool cyclic = false;
    for (unsigned x = 0; x < z.order && !cyclic; ++x)
      if (z.element_order(x) == z.order) cyclic = true;
    if (has_faithful_irrep_structural(dec) != cyclic) return false;
  }
  return true;
}

bool abelian_tuple_closed_form() {
  if (abelian_pgroup_tuple_count(2, 2, 2, 2) != 6) return false;
  if (abelian_pgroup_tuple_count(2, 3, 2, 2) != 24) return false;
  // Element-level brute force in C2 x C2 and C4 x C2: ordered pairs of
  // distinct elements that generate the whole group.
  for (const char* name : {"C2^2", "C2xC4"}) {
    const Group g = group_from_catalog(name);
    mpz_class brute = 0;
    for (unsigned x = 0; x < g.order; ++x)
      for (unsigned y = 0; y < g.order; ++y)
        if (x != y && generated_subgroup(g, {x, y}).order() == g.order) ++brute;
    unsigned long p = 0;
    unsigned n = 0;
    if (!prime_power(g.order, p, n)) return false;
    if (abelian_pgroup_tuple_count(p, n, 2, 2) != brute) return false;
  }
  // Below the minimal generator count everything vanishes.
  for (unsigned long p : {2ul, 3ul})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned d = 1; d <= n; ++d)
        for (unsigned k = 0; k < d; ++k)
          if (abelian_pgroup_tuple_count(p, n, d, k) != 0) return false;
  return true;
}

bool structural_identities() {
  // Direct products with coprime factors: lattice sizes multiply and so do
  // the Moebius values over the full interval.
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"S3", "C5"}, {"C4", "C3"}, {"Q8", "C3"}, {"S4", "C5"}, {"A5", "C3"},
      {"C2^3", "C3^2"}, {"D5", "C3"}};
  for (const auto& [an, bn] : pairs) {
    const Group a = group_from_catalog(an);
    const Group b = group_from_catalog(bn);
    const Group prod = direct_product(a, b);
    const NormalLattice la = enumerate_normal_subgroups(a);
    const NormalLattice lb = enumerate_normal_subgroups(b);
    const NormalLattice lp = enumerate_normal_subgroups(prod);
    if (lp.size() != la.size() * lb.size()) return false;
    const mpz_class mua = moebius_recursive(la).values[0][la.top()];
    const mpz_class mub = moebius_recursive(lb).values[0][lb.top()];
    if (moebius_recursive(lp).values[0][lp.top()] != mua * mub) return false;
  }
  // Radicals of direct products split componentwise (coprime or not).
  const std::vector<std::pair<std::string, std::string>> rad_pairs = {
      {"S3", "C5"}, {"S3", "S3"}, {"A4", "A4"}, {"SL23", "C3"}};
  for (const auto& [an, bn] : rad_pairs) {
    const Group a = group_from_catalog(an);
    const Group b = group_from_catalog(bn);
    const Group prod = direct_product(a, b);
    const Bitset ra = radical(enumerate_normal_subgroups(a)).members;
    const Bitset rb = radical(enumerate_normal_subgroups(b)).members;
    Bitset expected(prod.order);
    for (unsigned x : bits_of(ra))
      for (unsigned y : bits_of(rb)) expected.set(x * b.order + y);
    if (radical(enumerate_normal_subgroups(prod)).members != expected)
      return false;
  }
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const SocleDecomposition dec = socle_decomposition(g, lat);
    // Quotients by the radical are direct products of simples.
    const Subgroup rad = radical(lat);
    const auto [q, map] = quotient(g, rad);
    if (q.order >= 2 &&
        !is_product_of_simples(q, enumerate_normal_subgroups(q)))
      return false;
    // Node count inside the socle: one factor per homogeneous component
    // (subspace counts summed over dimensions), doubled per non-abelian
    // minimal normal subgroup.
    mpz_class expected_nodes = 1;
    for (const auto& ac : dec.abelian_classes) {
      mpz_class sum = 0;
      for (unsigned k = 0; k <= ac.d; ++k)
        sum += gaussian_binomial(ac.d, k, ac.q);
      expected_nodes *= sum;
    }
    for (unsigned j = 0; j < dec.b; ++j) expected_nodes *= 2;
    unsigned in_socle = 0;
    const unsigned soc = lat.index_of(dec.socle);
    for (unsigned i = 0; i < lat.size(); ++i)
      if (lat.less_equal(i, soc)) ++in_socle;
    if (expected_nodes != in_socle) return false;
    // Minimal normal subgroups per component follow the projective count
    // (q^d - 1)/(q - 1).
    const auto minimals = minimal_normal_subgroups(lat);
    for (const auto& ac : dec.abelian_classes) {
      unsigned matching = 0;
      for (const auto& m : minimals) {
        unsigned long p = 0;
        if (m.order() == ac.order && is_elementary_abelian(g, m, p) &&
            g_isomorphic(g, ac.representative, m))
          ++matching;
      }
      const mpz_class expect =
          (pow_ui(ac.q, ac.d) - 1) / mpz_class(ac.q - 1);
      if (expect != matching) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("worked example: SL(2,3) socle, sums, and products", worked_example_sl23);
  criterion("closed Moebius form equals recursion on every comparable pair",
            closed_moebius_everywhere);
  criterion("generating-tuple counts: inversion equals brute force",
            tuple_counts_by_inversion);
  criterion("class generating number: brute force, structure, vertical cut",
            generating_number_three_ways);
  criterion("faithful character sums match the exact product formula",
            faithful_sums_match_products);
  criterion("faithful existence criteria agree with the tables",
            faithful_existence_criteria);
  criterion("abelian p-group tuple counts match element-level search",
            abelian_tuple_closed_form);
  criterion("structural identities: products, radicals, socle node counts",
            structural_identities);
  if (failures == 0)
    std::printf("acceptance: all 8 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
