#pragma once

#include <string>
#include <vector>

#include "normlat/group.hpp"

namespace normlat {

// Build a group from a catalog name. Grammar: `Cn` (cyclic), `Cp^d`
// (elementary abelian, p prime), `Sn`, `An`, `Dn` (dihedral of order 2n),
// `Q8`, `SL23`, and `x`-separated direct products such as `C2^2xS3`.
// Raises UnknownName for anything else, ClosureCapExceeded past cap.
Group group_from_catalog(const std::string& name, unsigned cap = kDefaultClosureCap);

// Parse the permutation grammar `(1 2 3)(4 5);(1 2)` (generators separated by
// `;`, 1-based points, disjoint cycles). Returns 0-based image vectors over
// points 0..n_points-1 where n_points is the largest point mentioned.
std::vector<std::vector<unsigned>> parse_permutations(const std::string& text,
                                                      unsigned& n_points);

// Build a group from a CLI group spec: either a catalog name or
// `perm:<generators>` in the permutation grammar.
Group group_from_spec(const std::string& spec, unsigned cap = kDefaultClosureCap);

}  // namespace normlat
