#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "normlat/errors.hpp"

namespace normlat {

// x(x-1)...(x-m+1); the count of injective ordered m-selections from x items.
// m = 0 gives 1.
mpz_class falling_factorial(const mpz_class& x, unsigned m);

// base^exp as an exact integer.
mpz_class pow_ui(unsigned long base, unsigned long exp);

// a*(a-1)/2, the exponent binom(a,2) used throughout the closed forms.
inline unsigned long choose2(unsigned long a) { return a * (a - 1) / 2; }

// Deterministic primality test for word-sized n.
bool is_prime(unsigned long n);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);

// If n is a prime power p^e (e >= 1) sets p,e and returns true.
bool prime_power(unsigned long n, unsigned long& p, unsigned& e);

// Number of k-dimensional subspaces of a d-dimensional vector space over the
// field with q elements, by the exact product formula.
// Requires 0 <= k <= d and q >= 2; raises DomainError otherwise.
mpz_class gaussian_binomial(unsigned d, unsigned k, unsigned long q);

}  // namespace normlat
