#pragma once

#include <complex>
#include <vector>

#include "normlat/lattice.hpp"
#include "normlat/numeric.hpp"

namespace normlat {

inline constexpr double kKernelTolerance = 1e-6;
inline constexpr double kOrthogonalityTolerance = 1e-8;
inline constexpr unsigned kCharTableOrderCap = 2000;

// One irreducible complex character: a value per conjugacy class.
struct Character {
  std::vector<std::complex<double>> values;  // indexed like the class list
  unsigned degree = 0;                       // value at the identity class
  Subgroup kernel;                           // classes where the value is the degree
};

struct CharacterTable {
  const Group* group = nullptr;
  std::vector<ConjClass> classes;     // identity class first
  std::vector<Character> characters;  // principal character first

  const std::complex<double>& value(unsigned chi, unsigned cls) const {
    return characters[chi].values[cls];
  }
};

// Full complex irreducible character table, computed by the class-matrix
// method: simultaneous diagonalization over a prime field F_l with
// exponent(G) | l-1 and l > 2*sqrt(|G|), then lifting eigenvalue data to
// complex values through roots of unity.
CharacterTable character_table(const Group& g, unsigned cap = kCharTableOrderCap);

// Union of the classes on which character i attains its degree. Validated
// to be a normal subgroup; a failure signals numeric tolerance breakdown.
Subgroup character_kernel(const CharacterTable& ct, unsigned i,
                          double tolerance = kKernelTolerance);

// Smallest d such that some d nonidentity columns, together with the
// identity column, leave no row except the first constant.
unsigned vertical_cut_number(const CharacterTable& ct,
                             double tolerance = kOrthogonalityTolerance);

// sum chi(a) * conj(chi(b)) over the characters whose kernel is exactly n.
std::complex<double> kernel_restricted_sum(const CharacterTable& ct, unsigned a,
                                           unsigned b, const Subgroup& n);

// The same sum restricted to faithful characters (kernel = trivial subgroup).
std::complex<double> faithful_pair_sum(const CharacterTable& ct, unsigned a,
                                       unsigned b);

// Exact integer sum of squared degrees over the faithful characters.
mpz_class faithful_degree_square_sum(const CharacterTable& ct);

// Whether the element-set product C*s has size |C| * |s|.
bool class_extends_socle(const Group& g, const ConjClass& c, const Subgroup& s);

// Exact rational value of
//   (|G|/|C|) * prod_i prod_{j<d_i} (1 - q_i^j/|A_i|) * prod_k (1 - 1/|S_k|),
// the predicted faithful-character sum for a class with |CS| = |C||S|.
mpq_class faithful_sum_closed_form(const Group& g, const SocleDecomposition& dec,
                           const ConjClass& c);

// False exactly when some homogeneous component has |A_i| = q_i^j for some
// j in [0, d_i-1]; equivalent to the existence of a faithful irreducible
// character.
bool has_faithful_irrep_structural(const SocleDecomposition& dec);

}  // namespace normlat
