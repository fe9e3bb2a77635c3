#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "normlat/char_table.hpp"
#include "normlat/generation.hpp"
#include "normlat/moebius.hpp"
#include "test_support.hpp"

using namespace normlat;
using testsupport::all_subgroups;

// Property checks over a reproducible family of random permutation groups.
// A fixed seed keeps every run identical while still exercising group shapes
// nobody picked by hand.

namespace {

struct Sample {
  // Heap slot keeps the group's address stable: the lattice and its
  // subgroups point back into it.
  std::unique_ptr<Group> owner;
  NormalLattice lattice;

  const Group& group() const { return *owner; }
};

const std::vector<Sample>& random_samples() {
  static const std::vector<Sample> samples = [] {
    std::mt19937 rng(20240917u);
    std::vector<Sample> out;
    std::uniform_int_distribution<unsigned> points_dist(3, 7);
    std::uniform_int_distribution<unsigned> gens_dist(1, 3);
    while (out.size() < 25) {
      const unsigned n = points_dist(rng);
      const unsigned n_gens = gens_dist(rng);
      std::vector<std::vector<unsigned>> gens;
      for (unsigned i = 0; i < n_gens; ++i) {
        std::vector<unsigned> perm(n);
        for (unsigned j = 0; j < n; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        gens.push_back(perm);
      }
      try {
        // The cap rejects the (very common) full symmetric/alternating
        // closures cheaply instead of building their whole tables.
        auto g = std::make_unique<Group>(group_from_permutations(gens, n, 600));
        if (g->order < 2) continue;
        NormalLattice lat = enumerate_normal_subgroups(*g);
        out.push_back(Sample{std::move(g), std::move(lat)});
      } catch (const ClosureCapExceeded&) {
        continue;
      }
    }
    return out;
  }();
  return samples;
}

}  // namespace

TEST_CASE("random groups satisfy the group axioms") {
  for (const auto& s : random_samples()) {
    CAPTURE(s.group().name);
    if (s.group().order <= 60) CHECK_NOTHROW(s.group().check_axioms());
    // Classes partition the group and are conjugation-stable.
    Bitset seen(s.group().order);
    for (const auto& c : s.lattice.classes) {
      CHECK((seen & c.members).none());
      seen |= c.members;
      for (unsigned x : bits_of(c.members))
        for (unsigned t = 0; t < s.group().order; ++t)
          CHECK(c.members.test(s.group().conj(x, t)));
    }
    CHECK(seen.count() == s.group().order);
  }
}

TEST_CASE("random lattices hold exactly the normal subgroups") {
  for (const auto& s : random_samples()) {
    CAPTURE(s.group().name);
    CAPTURE(s.group().order);
    for (const auto& node : s.lattice.nodes) {
      CHECK(is_subgroup(s.group(), node.members));
      CHECK(is_normal(s.group(), node));
    }
    if (s.group().order <= 60) {
      unsigned normal_count = 0;
      for (const auto& members : all_subgroups(s.group()))
        if (is_normal(s.group(), Subgroup{&s.group(), members})) {
          ++normal_count;
          CHECK(s.lattice.find(members) >= 0);
        }
      CHECK(normal_count == s.lattice.size());
    }
    // Meet and join agree with set intersection and generated product.
    for (unsigned i = 0; i < s.lattice.size(); ++i)
      for (unsigned j = i + 1; j < s.lattice.size(); ++j) {
        const Bitset meet_set =
            s.lattice.nodes[i].members & s.lattice.nodes[j].members;
        CHECK(s.lattice.nodes[s.lattice.meet(i, j)].members == meet_set);
        const Bitset join_set = product_set(s.group(), s.lattice.nodes[i].members,
                                            s.lattice.nodes[j].members);
        CHECK(s.lattice.nodes[s.lattice.join(i, j)].members == join_set);
      }
  }
}

TEST_CASE("random groups: closed Moebius form equals the recursion") {
  for (const auto& s : random_samples()) {
    CAPTURE(s.group().name);
    CAPTURE(s.group().order);
    const MoebiusTable rec = moebius_recursive(s.lattice);
    // Defining alternating-sum property.
    for (unsigned x = 0; x < s.lattice.size(); ++x)
      for (unsigned y = 0; y < s.lattice.size(); ++y) {
        if (!s.lattice.less_equal(x, y)) continue;
        mpz_class total = 0;
        for (unsigned z = 0; z < s.lattice.size(); ++z)
          if (s.lattice.less_equal(x, z) && s.lattice.less_equal(z, y))
            total += rec.values[x][z];
        CHECK(total == (x == y ? 1 : 0));
      }
    if (s.group().order <= 500) {
      const MoebiusTable clo = moebius_closed_table(s.group(), s.lattice);
      for (unsigned i = 0; i < s.lattice.size(); ++i)
        for (unsigned j = 0; j < s.lattice.size(); ++j)
          if (s.lattice.less_equal(i, j))
            CHECK(rec.values[i][j] == clo.values[i][j]);
    }
  }
}

TEST_CASE("random groups: tuple-count inversion equals the subset walk") {
  for (const auto& s : random_samples()) {
    if (s.group().order > 200) continue;
    CAPTURE(s.group().name);
    CAPTURE(s.group().order);
    const unsigned r = static_cast<unsigned>(s.lattice.classes.size());
    for (unsigned k = 0; k <= std::min(r, 5u); ++k)
      CHECK(f_k_inversion(s.group(), s.lattice, k) ==
            f_k_bruteforce(s.group(), s.lattice,
                           s.lattice.nodes[s.lattice.top()], k));
    const unsigned brute = class_generating_number_bruteforce(s.group(), s.lattice);
    CHECK(class_generating_number_structural(s.group(), s.lattice) == brute);
  }
}

TEST_CASE("random groups: character tables stay orthogonal") {
  for (const auto& s : random_samples()) {
    if (s.group().order > 300) continue;
    CAPTURE(s.group().name);
    CAPTURE(s.group().order);
    const CharacterTable ct = character_table(s.group());
    const unsigned r = static_cast<unsigned>(ct.classes.size());
    unsigned long degree_squares = 0;
    for (const auto& chi : ct.characters)
      degree_squares += static_cast<unsigned long>(chi.degree) * chi.degree;
    CHECK(degree_squares == s.group().order);
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = i; j < r; ++j) {
        std::complex<double> acc = 0;
        for (unsigned k = 0; k < r; ++k)
          acc += static_cast<double>(ct.classes[k].size()) * ct.value(i, k) *
                 std::conj(ct.value(j, k));
        const double expect = i == j ? static_cast<double>(s.group().order) : 0.0;
        CHECK(std::abs(acc - expect) < 1e-8 * s.group().order);
      }
    // Kernels are lattice members and the structural faithfulness criterion
    // agrees with the table.
    bool table_faithful = false;
    for (const auto& chi : ct.characters) {
      CHECK(s.lattice.find(chi.kernel.members) >= 0);
      if (chi.kernel.order() == 1) table_faithful = true;
    }
    const SocleDecomposition dec = socle_decomposition(s.group(), s.lattice);
    CHECK(has_faithful_irrep_structural(dec) == table_faithful);
  }
}

TEST_CASE("random groups: radical and socle bracket the lattice") {
  for (const auto& s : random_samples()) {
    CAPTURE(s.group().name);
    const Subgroup rad = radical(s.lattice);
    const Subgroup soc = socle(s.lattice);
    for (const auto& m : maximal_normal_subgroups(s.lattice))
      CHECK(rad.members.is_subset_of(m.members));
    for (const auto& m : minimal_normal_subgroups(s.lattice))
      CHECK(m.members.is_subset_of(soc.members));
    // The quotient by the radical has trivial radical itself.
    const auto [q, map] = quotient(s.group(), rad);
    if (q.order >= 2) {
      const NormalLattice qlat = enumerate_normal_subgroups(q);
      CHECK(radical(qlat).order() == 1);
      CHECK(is_product_of_simples(q, qlat));
    }
  }
}
