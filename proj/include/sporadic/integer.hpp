#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sporadic {

using Integer = mpz_class;

// C(a, b) with the zero convention: 0 whenever b < 0 or a < b (this covers a < 0).
Integer binomial(long a, long b);

Integer factorial(unsigned long n);

// n! / prod(parts_i!). Throws DomainError if a part is negative or the parts do not sum to n.
Integer multinomial(long n, std::span<const long> parts);

Integer ipow(long base, unsigned long exponent);

// p-adic valuation of a nonzero integer. Throws DomainError for n == 0 or p < 2.
unsigned long vp(const Integer& n, unsigned long p);

// Little-endian base-p digits; 0 has the empty digit list.
std::vector<unsigned long> base_p_digits(unsigned long n, unsigned long p);

// Non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

bool is_prime(unsigned long n);

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

}  // namespace sporadic
