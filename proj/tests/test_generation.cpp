#include <doctest.h>

#include <vector>

#include "normlat/generation.hpp"
#include "normlat/moebius.hpp"
#include "test_support.hpp"

using namespace normlat;
using testsupport::catalog;

namespace {

// Literal oracle for the tuple counts: enumerate all ordered k-tuples of
// distinct conjugacy classes and count those whose normal closures join to
// exactly the given node. O(r^k); only for tiny cases.
mpz_class tuple_count_literal(const NormalLattice& lat, unsigned node, unsigned k) {
  const unsigned r = static_cast<unsigned>(lat.classes.size());
  if (k > r) return 0;
  mpz_class count = 0;
  std::vector<unsigned> idx(k, 0);
  while (true) {
    bool distinct = true;
    for (unsigned i = 0; i < k && distinct; ++i)
      for (unsigned j = i + 1; j < k; ++j)
        if (idx[i] == idx[j]) {
          distinct = false;
          break;
        }
    if (distinct) {
      unsigned join = lat.bottom();
      for (unsigned i = 0; i < k; ++i)
        join = lat.join(join, lat.class_closure[idx[i]]);
      if (join == node) ++count;
    }
    // Odometer over [0,r)^k; k = 0 contributes the single empty tuple.
    unsigned pos = 0;
    while (pos < k && ++idx[pos] == r) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return count;
}

}  // namespace

TEST_CASE("class counts inside normal subgroups") {
  const Group s3 = group_from_catalog("S3");
  const NormalLattice lat = enumerate_normal_subgroups(s3);
  CHECK(class_count_in(s3, lat.classes, lat.nodes[lat.bottom()]) == 1);
  // A3 holds the identity and the rotation class.
  CHECK(class_count_in(s3, lat.classes, lat.nodes[1]) == 2);
  CHECK(class_count_in(s3, lat.classes, lat.nodes[lat.top()]) == 3);

  const Group s4 = group_from_catalog("S4");
  const NormalLattice l4 = enumerate_normal_subgroups(s4);
  // The double-transposition subgroup holds identity + one class.
  CHECK(class_count_in(s4, l4.classes, l4.nodes[1]) == 2);

  // Non-normal subgroups are rejected.
  unsigned t2 = 0;
  for (unsigned x = 1; x < s3.order; ++x)
    if (s3.element_order(x) == 2) {
      t2 = x;
      break;
    }
  CHECK_THROWS_AS(class_count_in(s3, generated_subgroup(s3, {t2})), NotNormal);
}

TEST_CASE("tuple counts match literal enumeration on small groups") {
  for (const char* name : {"S3", "C2^2", "C4", "Q8", "A4", "C6"}) {
    CAPTURE(name);
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const unsigned r = static_cast<unsigned>(lat.classes.size());
    for (unsigned k = 0; k <= std::min(r, 3u); ++k)
      for (unsigned node = 0; node < lat.size(); ++node) {
        CAPTURE(k);
        CAPTURE(node);
        CHECK(f_k_bruteforce(g, lat, lat.nodes[node], k) ==
              tuple_count_literal(lat, node, k));
      }
  }
}

TEST_CASE("tuple count fixed values") {
  const Group s3 = group_from_catalog("S3");
  const NormalLattice l3 = enumerate_normal_subgroups(s3);
  // Exactly one class (the transpositions) closes to all of S3.
  CHECK(f_k_bruteforce(s3, l3, l3.nodes[l3.top()], 1) == 1);
  // Empty tuple generates the trivial subgroup only.
  CHECK(f_k_bruteforce(s3, l3, l3.nodes[l3.bottom()], 0) == 1);
  CHECK(f_k_bruteforce(s3, l3, l3.nodes[l3.top()], 0) == 0);
  // k beyond the class count gives zero.
  CHECK(f_k_bruteforce(s3, l3, l3.nodes[l3.top()], 9) == 0);

  const Group v = group_from_catalog("C2^2");
  const NormalLattice lv = enumerate_normal_subgroups(v);
  // Ordered pairs of distinct nontrivial proper classes: 3*2 = 6.
  CHECK(f_k_bruteforce(v, lv, lv.nodes[lv.top()], 2) == 6);
}

TEST_CASE("inversion formula equals direct count everywhere") {
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    if (g.order > 48) continue;
    CAPTURE(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const unsigned r = static_cast<unsigned>(lat.classes.size());
    for (unsigned k = 0; k <= r; ++k) {
      CAPTURE(k);
      CHECK(f_k_inversion(g, lat, k) ==
            f_k_bruteforce(g, lat, lat.nodes[lat.top()], k));
    }
  }
}

TEST_CASE("tuple counts vanish below the class generating number") {
  for (const auto& name : catalog()) {
    const Group g = group_from_catalog(name);
    if (g.order > 48 || g.order < 2) continue;
    CAPTURE(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const unsigned n = class_generating_number_bruteforce(g, lat);
    for (unsigned k = 0; k < n; ++k)
      CHECK(f_k_inversion(g, lat, k) == 0);
    CHECK(f_k_inversion(g, lat, n) > 0);
  }
}

TEST_CASE("partition identity: tuple counts sum to falling factorials") {
  // Every ordered k-tuple of distinct classes joins to exactly one node, so
  // summing the per-node counts over nodes below H gives [classes(H)]_k.
  for (const char* name : {"S4", "D6", "C2^3", "Q8xC3", "C3xS3"}) {
    CAPTURE(name);
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    const unsigned r = static_cast<unsigned>(lat.classes.size());
    for (unsigned k = 0; k <= std::min(r, 4u); ++k) {
      const std::vector<mpz_class> per_node = f_k_bruteforce_all(g, lat, k);
      for (unsigned h = 0; h < lat.size(); ++h) {
        mpz_class total = 0;
        for (unsigned t = 0; t < lat.size(); ++t)
          if (lat.less_equal(t, h)) total += per_node[t];
        const unsigned classes_in_h = class_count_in(g, lat.classes, lat.nodes[h]);
        CHECK(total == falling_factorial(mpz_class(classes_in_h), k));
      }
    }
  }
}

TEST_CASE("class generating number fixed values") {
  struct Row {
    const char* name;
    unsigned expect;
  };
  for (const Row& row : {Row{"S3", 1}, Row{"C2^2", 2}, Row{"A5", 1},
                         Row{"SL23", 1}, Row{"C2^3xC3", 3}, Row{"A4", 1},
                         Row{"C2^4", 4}, Row{"C30", 1}, Row{"C12", 1},
                         Row{"S3xS3", 2}, Row{"C2xA5", 1}}) {
    CAPTURE(row.name);
    const Group g = group_from_catalog(row.name);
    CHECK(class_generating_number_bruteforce(g) == row.expect);
    CHECK(class_generating_number_structural(g) == row.expect);
  }
  CHECK_THROWS_AS(class_generating_number_bruteforce(group_from_catalog("C1")),
                  TrivialGroup);
  CHECK_THROWS_AS(class_generating_number_structural(group_from_catalog("C1")),
                  TrivialGroup);
}

TEST_CASE("structural route equals brute force on the whole catalog") {
  for (const auto& name : catalog()) {
    CAPTURE(name);
    const Group g = group_from_catalog(name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    CHECK(class_generating_number_structural(g, lat) ==
          class_generating_number_bruteforce(g, lat));
  }
}

TEST_CASE("generating number of semisimple groups is the larger part count") {
  // For G/radical = (simple factors) x (C_p^a parts), the generating number is
  // the largest abelian exponent, or 1 when all factors are non-abelian.
  {
    const Group g = group_from_spec("C2^2xC3^2");
    REQUIRE(g.order == 36);
    CHECK(class_generating_number_structural(g) == 2);
  }
  {
    const Group g = group_from_catalog("C2^3xC3");
    CHECK(class_generating_number_structural(g) == 3);
  }
  {
    const Group g = group_from_spec("A5xC2^2");
    REQUIRE(g.order == 240);
    CHECK(class_generating_number_structural(g) == 2);
    CHECK(class_generating_number_bruteforce(g) == 2);
  }
}

TEST_CASE("abelian p-group tuple count closed form") {
  // C2 x C2, pairs: 6 ordered generating pairs of distinct elements.
  CHECK(abelian_pgroup_tuple_count(2, 2, 2, 2) == 6);
  // C3: the two nonidentity elements each generate.
  CHECK(abelian_pgroup_tuple_count(3, 1, 1, 1) == 2);
  // C4 x C2 (n=3 counts C2-factors of the order: 8 = 2^3, d = 2): 24.
  CHECK(abelian_pgroup_tuple_count(2, 3, 2, 2) == 24);
  // Below the rank the count vanishes.
  for (unsigned long p : {2ul, 3ul})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned d = 1; d <= n; ++d)
        for (unsigned k = 0; k < d; ++k) {
          CAPTURE(p);
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(k);
          CHECK(abelian_pgroup_tuple_count(p, n, d, k) == 0);
        }
  CHECK_THROWS_AS(abelian_pgroup_tuple_count(6, 2, 1, 1), DomainError);
  CHECK_THROWS_AS(abelian_pgroup_tuple_count(2, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(abelian_pgroup_tuple_count(2, 2, 3, 1), DomainError);
}

TEST_CASE("abelian p-group tuple count against element-level search") {
  // In an abelian group classes are single elements, so the class-tuple count
  // equals the number of ordered k-tuples of distinct elements that generate.
  struct Row {
    const char* spec;
    unsigned long p;
    unsigned n, d;
  };
  for (const Row& row : {Row{"C2^2", 2, 2, 2}, Row{"C2xC4", 2, 3, 2},
                         Row{"C3^2", 3, 2, 2}, Row{"C8", 2, 3, 1},
                         Row{"C2^3", 2, 3, 3}}) {
    CAPTURE(row.spec);
    const Group g = group_from_catalog(row.spec);
    const unsigned kmax = std::min(row.d + 1, 3u);
    for (unsigned k = row.d; k <= kmax; ++k) {
      mpz_class brute = 0;
      std::vector<unsigned> idx(k, 0);
      while (true) {
        bool distinct = true;
        for (unsigned i = 0; i < k && distinct; ++i)
          for (unsigned j = i + 1; j < k; ++j)
            if (idx[i] == idx[j]) distinct = false;
        if (distinct &&
            generated_subgroup(g, idx).order() == g.order)
          ++brute;
        unsigned pos = 0;
        while (pos < k && ++idx[pos] == g.order) {
          idx[pos] = 0;
          ++pos;
        }
        if (pos == k) break;
      }
      CAPTURE(k);
      CHECK(abelian_pgroup_tuple_count(row.p, row.n, row.d, k) == brute);
    }
  }
}

TEST_CASE("generation report bundles consistent results") {
  const Group g = group_from_catalog("S4");
  const NormalLattice lat = enumerate_normal_subgroups(g);
  const unsigned r = static_cast<unsigned>(lat.classes.size());
  const GenerationReport rep = generation_report(g, lat, r);
  CHECK(rep.class_generating_number == 1);
  REQUIRE(rep.fk.size() == r + 1);
  for (unsigned k = 0; k <= r; ++k)
    CHECK(rep.fk[k] == f_k_inversion(g, lat, k));
  // Major subgroups contain the radical; S4's radical is A4.
  const unsigned rad = lat.index_of(radical(lat));
  for (const auto& [node, classes] : rep.major_subgroups) {
    CHECK(lat.less_equal(rad, node));
    CHECK(classes == class_count_in(g, lat.classes, lat.nodes[node]));
  }
}
