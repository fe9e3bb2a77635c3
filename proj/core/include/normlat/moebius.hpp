#pragma once

#include <gmpxx.h>

#include <vector>

#include "normlat/lattice.hpp"
#include "normlat/numeric.hpp"

namespace normlat {

// The Möbius function on a normal-subgroup lattice: values[i][j] = mu(i,j) for
// comparable node pairs i <= j; other entries are unset (zero) and flagged by
// the lattice order itself.
struct MoebiusTable {
  const NormalLattice* lattice = nullptr;
  std::vector<std::vector<mpz_class>> values;

  const mpz_class& mu(unsigned i, unsigned j) const;  // requires i <= j in the order
};

// Full table by the defining recursion mu(X,X) = 1,
// mu(X,Y) = -sum_{X <= Z < Y} mu(X,Z). The oracle for every closed form.
MoebiusTable moebius_recursive(const NormalLattice& lat);

// mu(1,G) for a direct product of simple groups:
// (-1)^{sum s_i} * prod_j (-1)^{a_j} p_j^{binom(a_j,2)}.
// Raises NotSemisimple when the radical is nontrivial.
mpz_class mu_one_semisimple(const Group& g, const NormalLattice& lat);
mpz_class mu_one_semisimple(const Group& g);  // enumerates the lattice itself

// Closed-form mu(h,t): zero unless T/H lies in the socle of G/H; otherwise
// T/H decomposes inside the socle as prod A_i^{alpha_i} x (c non-abelian
// minimal normals) and mu = (-1)^c * prod (-1)^{alpha_i} q_i^{binom(alpha_i,2)}.
// Works in the quotient G/H by explicit construction and re-enumeration; when
// h is the trivial node the provided decomposition `dec` of G itself is used.
// Raises NotInLattice / NotComparable.
mpz_class moebius_closed(const Group& g, const NormalLattice& lat,
                         const SocleDecomposition& dec, const Subgroup& h,
                         const Subgroup& t);

// Full closed-form table; shares the per-h quotient work across all t.
// Must agree with moebius_recursive everywhere.
MoebiusTable moebius_closed_table(const Group& g, const NormalLattice& lat);

}  // namespace normlat
