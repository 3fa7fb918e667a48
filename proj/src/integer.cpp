#include "sporadic/integer.hpp"

#include "sporadic/errors.hpp"

namespace sporadic {

Integer binomial(long a, long b) {
  Integer r;
  if (b < 0 || a < b) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer multinomial(long n, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw DomainError("multinomial: negative part " + std::to_string(p));
    sum += p;
  }
  if (sum != n) {
    throw DomainError("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(n));
  }
  // Product of binomials avoids the big factorial quotient.
  Integer r = 1;
  long remaining = n;
  for (long p : parts) {
    r *= binomial(remaining, p);
    remaining -= p;
  }
  return r;
}

Integer ipow(long base, unsigned long exponent) {
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

unsigned long vp(const Integer& n, unsigned long p) {
  if (p < 2) throw DomainError("vp: p must be at least 2");
  if (n == 0) throw DomainError("vp: valuation of 0 is undefined");
  Integer pp = p;
  return mpz_remove(Integer().get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
}

std::vector<unsigned long> base_p_digits(unsigned long n, unsigned long p) {
  if (p < 2) throw DomainError("base_p_digits: p must be at least 2");
  std::vector<unsigned long> digits;
  while (n > 0) {
    digits.push_back(n % p);
    n /= p;
  }
  return digits;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace sporadic
