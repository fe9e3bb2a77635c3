#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "normlat/errors.hpp"

namespace normlat {

using Bitset = boost::dynamic_bitset<>;

// Default cap on closure enumeration (number of elements).
inline constexpr unsigned kDefaultClosureCap = 10000;

// A finite group as a dense element set 0..order-1 with a full multiplication
// table. Element 0 is the identity. Immutable after construction.
struct Group {
  unsigned order = 1;
  std::vector<uint16_t> mul_table;    // row-major: mul_table[x*order + y] = x*y
  std::vector<uint16_t> inv;          // two-sided inverse per element
  std::vector<std::string> labels;    // unique display string per element
  std::string name;                   // display name (catalog spec or description)

  unsigned mul(unsigned x, unsigned y) const { return mul_table[x * order + y]; }
  // g^-1 * x * g
  unsigned conj(unsigned x, unsigned g) const { return mul(mul(inv[g], x), g); }
  unsigned power(unsigned x, unsigned long e) const;
  unsigned element_order(unsigned x) const;
  // lcm of all element orders
  unsigned exponent() const;
  bool is_abelian() const;

  // Exhaustive associativity / identity / inverse / label-uniqueness check;
  // O(order^3), intended for tests and desk-scale construction.
  void check_axioms() const;
};

// Membership bitset over a parent group's element indices.
struct Subgroup {
  const Group* parent = nullptr;
  Bitset members;

  unsigned order() const { return static_cast<unsigned>(members.count()); }
  bool contains(unsigned x) const { return members.test(x); }
  bool operator==(const Subgroup& o) const {
    return parent == o.parent && members == o.members;
  }
};

// One conjugacy class of the parent group.
struct ConjClass {
  const Group* parent = nullptr;
  unsigned representative = 0;
  Bitset members;

  unsigned size() const { return static_cast<unsigned>(members.count()); }
};

// The element map of a quotient construction; preserves multiplication:
// image[x*y] = image[x]*image[y], and the kernel is the defining subgroup.
struct QuotientMap {
  std::vector<uint16_t> element_image;  // source element index -> quotient index
};

// ---- construction ------------------------------------------------------------

// Closure of the given permutations on points 0..n_points-1 under composition.
// Each generator maps i -> gen[i]. Labels are 1-based disjoint-cycle notation.
// Raises InvalidPermutation for non-bijections, ClosureCapExceeded past cap.
Group group_from_permutations(const std::vector<std::vector<unsigned>>& generators,
                              unsigned n_points, unsigned cap = kDefaultClosureCap);

// Componentwise product; element (x,y) has index x*|h| + y; labels "(x,y)".
Group direct_product(const Group& g, const Group& h,
                     unsigned cap = kDefaultClosureCap);

// ---- element-level operations -------------------------------------------------

// Classes partition the elements; ordered by (element order, class size,
// smallest member index), which puts the identity class first.
std::vector<ConjClass> conjugacy_classes(const Group& g);

Subgroup center(const Group& g);

// Quotient by a normal subgroup; quotient elements are cosets ordered by their
// smallest member, so the identity coset is element 0. Raises NotNormal.
std::pair<Group, QuotientMap> quotient(const Group& g, const Subgroup& n);

// True iff the only normal subgroups are trivial and g, decided by scanning
// normal closures of single conjugacy classes. Raises TrivialGroup for |g|=1.
bool is_simple(const Group& g);

// ---- subgroup helpers ----------------------------------------------------------

// Indices of the set bits, ascending.
std::vector<unsigned> bits_of(const Bitset& b);

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);

// Smallest subgroup containing the seed elements.
Subgroup generated_subgroup(const Group& g, const std::vector<unsigned>& seed);

// Membership bitset checks: closed under mul and inv, contains identity.
bool is_subgroup(const Group& g, const Bitset& members);
bool is_normal(const Group& g, const Subgroup& h);

// Is h an elementary abelian p-group (all non-identity elements of order p,
// abelian)? On success sets p to the prime.
bool is_elementary_abelian(const Group& g, const Subgroup& h, unsigned long& p);

// Re-index the elements of subgroup h as a standalone Group (labels inherited).
Group subgroup_as_group(const Group& g, const Subgroup& h);

// Image of a subgroup under a quotient map, as a subgroup of the quotient.
Subgroup image_subgroup(const Subgroup& h, const QuotientMap& map, const Group& target);

}  // namespace normlat
