#include <array>
#include <string>

#include "sporadic/catalog.hpp"
#include "sporadic/errors.hpp"

// Power-free multinomial sums. Each index set is walked by fixing the free
// compositions and deriving the remaining coordinates from the linear
// constraints, so only feasible tuples are visited.
namespace sporadic::catalog {

namespace {

// multinomial(n; i, j, n-i-j) for all i + j <= n.
class CompositionTable {
 public:
  explicit CompositionTable(long n) : n_(n), values_(static_cast<std::size_t>((n + 1) * (n + 1))) {
    for (long i = 0; i <= n; ++i)
      for (long j = 0; i + j <= n; ++j) {
        const std::array<long, 3> parts{i, j, n - i - j};
        values_[index(i, j)] = multinomial(n, parts);
      }
  }
  const Integer& operator()(long i, long j) const { return values_[index(i, j)]; }

 private:
  std::size_t index(long i, long j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  long n_;
  std::vector<Integer> values_;
};

// S(n): 3x3 non-negative matrices (rows a, b, c) with all row and column sums n
// and 3 | b2 + 2 b3 + 2 c2 + c3. Returns 3 * sum - (3n)!/(n!)^3 = 2 (-1)^n B_n.
Integer b_twice_signed(long n) {
  const CompositionTable m(n);
  Integer sum = 0;
  Integer ab;
  for (long a1 = 0; a1 <= n; ++a1)
    for (long a2 = 0; a1 + a2 <= n; ++a2) {
      const long a3 = n - a1 - a2;
      for (long b1 = 0; b1 <= n - a1; ++b1)
        for (long b2 = 0; b1 + b2 <= n && b2 <= n - a2; ++b2) {
          const long b3 = n - b1 - b2;
          if (b3 > n - a3) continue;
          const long c1 = n - a1 - b1, c2 = n - a2 - b2, c3 = n - a3 - b3;
          if ((b2 + 2 * b3 + 2 * c2 + c3) % 3 != 0) continue;
          ab = m(a1, a2) * m(b1, b2);
          mpz_addmul(sum.get_mpz_t(), ab.get_mpz_t(), m(c1, c2).get_mpz_t());
        }
    }
  const std::array<long, 3> thirds{n, n, n};
  return 3 * sum - multinomial(3 * n, thirds);
}

// T(n): five compositions a..e of n with a_i + b_i + c_i + d_i + 2 e_i = 2n, sign (-1)^{a1+b2+c3}.
Integer f_term(long n) {
  const CompositionTable m(n);
  Integer sum = 0;
  Integer abc, abce;
  for (long a1 = 0; a1 <= n; ++a1)
    for (long a2 = 0; a1 + a2 <= n; ++a2)
      for (long b1 = 0; b1 <= n; ++b1)
        for (long b2 = 0; b1 + b2 <= n; ++b2) {
          const Integer ab = m(a1, a2) * m(b1, b2);
          for (long c1 = 0; c1 <= n; ++c1)
            for (long c2 = 0; c1 + c2 <= n; ++c2) {
              const long s1 = a1 + b1 + c1;
              const long s2 = a2 + b2 + c2;
              const long s3 = 3 * n - s1 - s2;
              // d_i = 2n - s_i - 2 e_i >= 0
              const long r1 = 2 * n - s1, r2 = 2 * n - s2, r3 = 2 * n - s3;
              if (r1 < 0 || r2 < 0 || r3 < 0) continue;
              abc = ab * m(c1, c2);
              const long c3 = n - c1 - c2;
              const bool negative = ((a1 + b2 + c3) % 2) != 0;
              for (long e1 = 0; 2 * e1 <= r1 && e1 <= n; ++e1)
                for (long e2 = 0; 2 * e2 <= r2 && e1 + e2 <= n; ++e2) {
                  const long e3 = n - e1 - e2;
                  if (2 * e3 > r3) continue;
                  const long d1 = r1 - 2 * e1, d2 = r2 - 2 * e2;
                  if (d1 + d2 > n) continue;
                  abce = abc * m(e1, e2);
                  if (negative) mpz_submul(sum.get_mpz_t(), abce.get_mpz_t(), m(d1, d2).get_mpz_t());
                  else mpz_addmul(sum.get_mpz_t(), abce.get_mpz_t(), m(d1, d2).get_mpz_t());
                }
            }
        }
  return sum;
}

// U(n): four compositions a..d of n with b1 + c1 + d1 = n, a1 + b2 + d2 = n,
// a2 + b3 + c2 = n, sign (-1)^{a2+b1+d3}.
Integer delta_term(long n) {
  const CompositionTable m(n);
  Integer sum = 0;
  Integer abc;
  for (long a1 = 0; a1 <= n; ++a1)
    for (long a2 = 0; a1 + a2 <= n; ++a2)
      for (long b1 = 0; b1 <= n; ++b1)
        for (long b2 = 0; b1 + b2 <= n; ++b2) {
          const long b3 = n - b1 - b2;
          const long c2 = n - a2 - b3;
          const long d2 = n - a1 - b2;
          if (c2 < 0 || d2 < 0) continue;
          const Integer ab = m(a1, a2) * m(b1, b2);
          for (long c1 = 0; c1 + c2 <= n; ++c1) {
            const long d1 = n - b1 - c1;
            if (d1 < 0) break;
            const long d3 = n - d1 - d2;
            if (d3 < 0) continue;
            abc = ab * m(c1, c2);
            if ((a2 + b1 + d3) % 2 != 0) mpz_submul(sum.get_mpz_t(), abc.get_mpz_t(), m(d1, d2).get_mpz_t());
            else mpz_addmul(sum.get_mpz_t(), abc.get_mpz_t(), m(d1, d2).get_mpz_t());
          }
        }
  return sum;
}

}  // namespace

bool has_prop12(std::string_view name) { return name == "B" || name == "F" || name == "delta"; }

Integer prop12_term(std::string_view name, unsigned n_u) {
  const long n = static_cast<long>(n_u);
  if (name == "B") {
    const Integer twice = b_twice_signed(n);
    if (!mpz_divisible_ui_p(twice.get_mpz_t(), 2)) throw NonIntegral(n, twice, Integer(2));
    Integer b = twice / 2;
    return (n % 2 == 0) ? b : Integer(-b);
  }
  if (name == "F") return f_term(n);
  if (name == "delta") return delta_term(n);
  throw UnknownName(std::string(name));
}

std::vector<Integer> prop12_terms(std::string_view name, unsigned N) {
  if (!has_prop12(name)) throw UnknownName(std::string(name));
  std::vector<Integer> out;
  out.reserve(N + 1);
  for (unsigned n = 0; n <= N; ++n) out.push_back(prop12_term(name, n));
  return out;
}

}  // namespace sporadic::catalog
