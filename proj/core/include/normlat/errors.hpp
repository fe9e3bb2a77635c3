#pragma once

#include <stdexcept>
#include <string>

namespace normlat {

// Base type for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- input / construction errors -------------------------------------------

// A generator handed to group_from_permutations is not a bijection.
struct InvalidPermutation : Error {
  using Error::Error;
};

// A catalog name does not match the grammar or names no known group.
struct UnknownName : Error {
  using Error::Error;
};

// Malformed textual input (permutation syntax, CLI arguments, JSON).
struct ParseError : Error {
  using Error::Error;
};

// ---- computation errors -----------------------------------------------------

// Closure enumeration grew past the configured element cap.
struct ClosureCapExceeded : Error {
  using Error::Error;
};

// Group order exceeds the analysis cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A subgroup that must be normal is not conjugation-stable.
struct NotNormal : Error {
  using Error::Error;
};

// An operation that needs |G| >= 2 was applied to the trivial group.
struct TrivialGroup : Error {
  using Error::Error;
};

// A subgroup that must be elementary abelian is not.
struct NotElementaryAbelian : Error {
  using Error::Error;
};

// The group is not a direct product of simple groups (radical nontrivial).
struct NotSemisimple : Error {
  using Error::Error;
};

// Two lattice nodes are not comparable where comparability is required.
struct NotComparable : Error {
  using Error::Error;
};

// A subgroup passed as a lattice node is not a node of the lattice.
struct NotInLattice : Error {
  using Error::Error;
};

// Parameters outside the mathematical domain of a function.
struct DomainError : Error {
  using Error::Error;
};

// A brute-force search would exceed its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// No suitable prime found below the search bound for the character-table lift.
struct PrimeSearchFailed : Error {
  using Error::Error;
};

// A character kernel read off within tolerance is not a normal subgroup;
// signals a numeric-tolerance failure rather than silently accepting it.
struct KernelNotNormal : Error {
  using Error::Error;
};

// A documented precondition was violated by the caller.
struct PreconditionViolated : Error {
  using Error::Error;
};

// An internal cross-check failed; indicates a bug, never expected at runtime.
struct InternalInconsistency : Error {
  using Error::Error;
};

// A --verify cross-check found a mismatch between two independent routes.
struct VerifyMismatch : Error {
  using Error::Error;
};

}  // namespace normlat
