#pragma once

#include <utility>
#include <vector>

#include "normlat/lattice.hpp"
#include "normlat/numeric.hpp"

namespace normlat {

// Summary of class-generation data for one group.
struct GenerationReport {
  unsigned class_generating_number = 0;
  // fk[k] = number of ordered k-tuples of distinct conjugacy classes whose
  // joint normal closure is the whole group, for k = 0..max_k.
  std::vector<mpz_class> fk;
  // Normal subgroups containing the radical, as (lattice node, class count).
  std::vector<std::pair<unsigned, unsigned>> major_subgroups;
};

// Number of conjugacy classes of g contained in the normal subgroup h.
unsigned class_count_in(const Group& g, const std::vector<ConjClass>& classes,
                        const Subgroup& h);
unsigned class_count_in(const Group& g, const Subgroup& h);

// Smallest k such that some k nonidentity conjugacy classes have joint
// normal closure equal to g, found by increasing-k subset search.
unsigned class_generating_number_bruteforce(const Group& g, const NormalLattice& lat);
unsigned class_generating_number_bruteforce(const Group& g);

// Same number computed from the simple-product decomposition of g modulo
// its radical: the largest exponent among elementary abelian factors, or 1
// when only non-abelian factors appear.
unsigned class_generating_number_structural(const Group& g, const NormalLattice& lat);
unsigned class_generating_number_structural(const Group& g);

// Count of ordered k-tuples of distinct conjugacy classes of g whose joint
// normal closure is exactly h (the identity class is a legal entry; the
// empty tuple closes to the trivial subgroup).
mpz_class f_k_bruteforce(const Group& g, const NormalLattice& lat,
                         const Subgroup& h, unsigned k);
mpz_class f_k_bruteforce(const Group& g, const Subgroup& h, unsigned k);

// f_k for every lattice node at once (indexed like lat.nodes).
std::vector<mpz_class> f_k_bruteforce_all(const Group& g, const NormalLattice& lat,
                                          unsigned k);

// Count of ordered k-tuples of distinct classes generating g, computed by
// Möbius inversion over the normal subgroups containing the radical.
mpz_class f_k_inversion(const Group& g, const NormalLattice& lat, unsigned k);
mpz_class f_k_inversion(const Group& g, unsigned k);

// Exact value of the alternating sum
//   sum_{i=0}^{d} [p^(n-d+i)]_k * gauss(d,i,p) * (-1)^(d-i) * p^C(d-i,2),
// which counts ordered k-tuples of distinct elements generating a p-group
// of order p^n whose Frattini quotient has rank d.
mpz_class abelian_pgroup_tuple_count(unsigned long p, unsigned n, unsigned d, unsigned k);

// Bundle of the above for reporting: fk for k = 0..max_k.
GenerationReport generation_report(const Group& g, const NormalLattice& lat,
                                   unsigned max_k);

}  // namespace normlat
