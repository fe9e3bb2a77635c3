#pragma once

#include <string>
#include <vector>

#include "normlat/group.hpp"

namespace normlat {

// The lattice of normal subgroups of a group, with inclusion order, Hasse
// covers, meet/join tables, and the conjugacy classes used to build it.
// Nodes are sorted by (order, membership bitset), so node 0 is the trivial
// subgroup and the last node is the whole group.
struct NormalLattice {
  const Group* group = nullptr;
  std::vector<Subgroup> nodes;
  std::vector<Bitset> leq;                   // leq[i].test(j) iff nodes[i] <= nodes[j]
  std::vector<std::vector<unsigned>> covers; // covers[i] = nodes covering node i
  std::vector<std::vector<unsigned>> meet_table;
  std::vector<std::vector<unsigned>> join_table;
  std::vector<ConjClass> classes;            // conjugacy classes of the group
  std::vector<unsigned> class_closure;       // node index of each class's normal closure

  unsigned size() const { return static_cast<unsigned>(nodes.size()); }
  unsigned bottom() const { return 0; }
  unsigned top() const { return size() - 1; }
  bool less_equal(unsigned i, unsigned j) const { return leq[i].test(j); }
  unsigned meet(unsigned i, unsigned j) const { return meet_table[i][j]; }
  unsigned join(unsigned i, unsigned j) const { return join_table[i][j]; }

  // Node index of a subgroup given by membership bitset; -1 if absent.
  int find(const Bitset& members) const;
  // Same, but raises NotInLattice when absent.
  unsigned index_of(const Subgroup& s) const;
};

// Invariants a, b, {A_i, d_i, q_i}, {S_j} of the socle: the G-isomorphism
// classes of elementary abelian minimal normal subgroups and the non-abelian
// minimal normal subgroups.
struct SocleDecomposition {
  struct AbelianClass {
    Subgroup representative;  // one minimal normal subgroup A_i of the class
    unsigned long order = 0;  // |A_i|
    unsigned d = 0;           // multiplicity: homogeneous component has order |A_i|^d
    unsigned long q = 0;      // |Hom_G(A_i, A_i)|, a prime power
    Subgroup component;       // join of all minimal normals G-isomorphic to A_i
  };
  unsigned a = 0;  // number of abelian classes
  unsigned b = 0;  // number of non-abelian minimal normal subgroups
  std::vector<AbelianClass> abelian_classes;
  std::vector<Subgroup> non_abelian;
  Subgroup socle;
};

// One non-abelian simple factor type of a semisimple group.
struct SimpleFactor {
  std::string type;          // fingerprint label: order plus sorted class sizes
  unsigned long order = 0;
  unsigned multiplicity = 0; // s_i
};

// The elementary abelian part of a semisimple group, one entry per prime.
struct AbelianFactor {
  unsigned long prime = 0;   // p_j
  unsigned exponent = 0;     // a_j in C_{p_j}^{a_j}
};

// Smallest normal subgroup of g containing the seed elements.
Subgroup normal_closure(const Group& g, const std::vector<unsigned>& seed);

// Complete lattice of normal subgroups: normal closures of single conjugacy
// classes, closed under pairwise join to a fixpoint, plus the trivial
// subgroup. Every normal subgroup is a union of classes and hence the join of
// its single-class closures, so this is exhaustive.
NormalLattice enumerate_normal_subgroups(const Group& g);

// Coatoms / atoms of the lattice. Raise TrivialGroup when |G| = 1.
std::vector<Subgroup> maximal_normal_subgroups(const NormalLattice& lat);
std::vector<Subgroup> minimal_normal_subgroups(const NormalLattice& lat);

// Intersection of all maximal normal subgroups. Raises TrivialGroup.
Subgroup radical(const NormalLattice& lat);

// Join of all minimal normal subgroups. Raises TrivialGroup.
Subgroup socle(const NormalLattice& lat);

// Number of group homomorphisms f: a -> b commuting with conjugation by every
// element of g (f(x^h) = f(x)^h). Both subgroups must be elementary abelian
// normal subgroups of equal prime exponent. Counted by choosing images of a
// minimal generating set of a and filtering by homomorphism and equivariance.
unsigned long g_hom_count(const Group& g, const Subgroup& a, const Subgroup& b);

// Is there an invertible equivariant homomorphism a -> b?
bool g_isomorphic(const Group& g, const Subgroup& a, const Subgroup& b);

// Partition the elementary abelian minimal normals into G-isomorphism classes;
// d_i is recovered from the class count via count = (q^d - 1)/(q - 1) and
// cross-checked against the homogeneous component order |A_i|^{d_i}.
SocleDecomposition socle_decomposition(const Group& g, const NormalLattice& lat);

// True iff the radical is trivial (|G| = 1 counts as true).
bool is_product_of_simples(const Group& g, const NormalLattice& lat);

// For a group with trivial radical: the multiset of non-abelian simple factor
// types and the elementary abelian part as (prime, exponent) pairs.
// Raises NotSemisimple when the radical is nontrivial.
std::pair<std::vector<SimpleFactor>, std::vector<AbelianFactor>>
simple_factor_decomposition(const Group& g, const NormalLattice& lat);

// Product set {x*y : x in a, y in b} as a bitset (a subgroup when both are
// normal subgroups).
Bitset product_set(const Group& g, const Bitset& a, const Bitset& b);

}  // namespace normlat
