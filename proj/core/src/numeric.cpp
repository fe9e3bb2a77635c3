#include "normlat/numeric.hpp"

namespace normlat {

mpz_class falling_factorial(const mpz_class& x, unsigned m) {
  mpz_class out = 1;
  for (unsigned i = 0; i < m; ++i) out *= x - i;
  return out;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) n /= d, ++e;
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool prime_power(unsigned long n, unsigned long& p, unsigned& e) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  p = f[0].first;
  e = f[0].second;
  return true;
}

mpz_class gaussian_binomial(unsigned d, unsigned k, unsigned long q) {
  if (k > d || q < 2) throw DomainError("gaussian_binomial: need 0 <= k <= d and q >= 2");
  // prod_{i=0}^{k-1} (q^{d-i} - 1) / (q^{i+1} - 1); numerator and denominator
  // computed in full, the quotient is exact.
  mpz_class num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= pow_ui(q, d - i) - 1;
    den *= pow_ui(q, i + 1) - 1;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace normlat
