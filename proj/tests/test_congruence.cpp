#include <doctest.h>

#include <random>

#include "sporadic/catalog.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"

using namespace sporadic;
using namespace sporadic::congruence;

namespace {

Integer pow_int(long b, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

bool congruent(const Integer& a, const Integer& b, const Integer& m) {
  Integer d = a - b;
  return d % m == 0;
}

// Pascal's triangle, independent of the library's binomial.
struct Pascal {
  std::vector<std::vector<Integer>> rows;
  explicit Pascal(long n) {
    for (long i = 0; i <= n; ++i) {
      std::vector<Integer> row(static_cast<std::size_t>(i) + 1, 1);
      for (long j = 1; j < i; ++j) row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
      rows.push_back(std::move(row));
    }
  }
  const Integer& operator()(long n, long m) const { return rows[n][m]; }
};

long val(Integer n, long p) {
  long v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

// First (p, k, n) violating the Gauss congruence, by direct enumeration.
std::optional<std::array<long, 3>> naive_gauss(const std::vector<Integer>& u, int r, const std::vector<long>& primes,
                                               long k_max, long n_max) {
  for (long p : primes)
    for (long k = 1; k <= k_max; ++k)
      for (long n = 1; n <= n_max; ++n) {
        const long lo = n * static_cast<long>(pow_int(p, k - 1).get_si()), hi = lo * p;
        if (!congruent(u[hi], u[lo], pow_int(p, r * k))) return std::array<long, 3>{p, k, n};
      }
  return std::nullopt;
}

SequenceSource fixed(std::vector<Integer> v) {
  return SequenceSource("fixed", [v](unsigned N) { return std::vector<Integer>(v.begin(), v.begin() + N + 1); });
}

}  // namespace

TEST_CASE("gauss examples") {
  auto two = SequenceSource::from_function("2^n", [](unsigned n) { return pow_int(2, n); });
  CHECK(gauss_check(two, 1, {5}, 2, 3).pass);
  auto central = SequenceSource::from_function("C(2n,n)", [](unsigned n) { return binomial(2 * n, n); });
  CHECK(gauss_check(central, 3, {5}, 2, 2).pass);
  auto ident = SequenceSource::from_function("n", [](unsigned n) { return Integer(n); });
  const auto r = gauss_check(ident, 1, {3}, 1, 1);
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->at == std::vector<std::pair<std::string, long>>{{"p", 3}, {"k", 1}, {"n", 1}});
  CHECK(r.counterexample->lhs == 3);
  CHECK(r.counterexample->rhs == 1);
  CHECK(r.counterexample->modulus == 3);
  CHECK(to_json(r)["counterexample"]["modulus"] == "3");
  CHECK_THROWS_AS(gauss_check(two, 2, {2}, 1, 1), DomainError);
  CHECK_THROWS_AS(gauss_check(two, 1, {4}, 1, 1), DomainError);
}

TEST_CASE("gauss agrees with a direct enumeration on random sequences") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    // Start from a^n, which satisfies order 1, and perturb one entry.
    const long a = std::uniform_int_distribution<long>(-5, 5)(rng);
    std::vector<Integer> v;
    for (unsigned n = 0; n <= 81; ++n) v.push_back(pow_int(a, n));
    if (trial % 2) v[std::uniform_int_distribution<std::size_t>(1, 81)(rng)] += std::uniform_int_distribution<long>(1, 40)(rng);
    auto src = fixed(v);
    const auto want = naive_gauss(v, 1, {2, 3}, 2, 9);
    const auto got = gauss_check(src, 1, {2, 3}, 2, 9);
    CHECK(got.pass == !want.has_value());
    if (want) {
      REQUIRE(got.counterexample);
      CHECK(got.counterexample->at[0].second == (*want)[0]);
      CHECK(got.counterexample->at[1].second == (*want)[1]);
      CHECK(got.counterexample->at[2].second == (*want)[2]);
    }
  }
}

TEST_CASE("gauss on catalog sequences") {
  auto b = SequenceSource::entry("B");
  CHECK(gauss_check(b, 2, {3, 5, 7}, 2, 2).pass);
  for (const char* name : {"gamma", "D"}) {
    auto s = SequenceSource::entry(name);
    CHECK(gauss_check(s, 3, {5, 7}, 2, 2).pass);
  }
  // A perturbed B breaks order 2 at the first index it touches.
  auto tampered = SequenceSource("B'", [](unsigned N) {
    auto t = catalog::recurrence_terms(catalog::get("B").recurrence, N);
    if (N >= 9) t[9] += 3;
    return t;
  });
  const auto r = gauss_check(tampered, 2, {3}, 2, 3);
  CHECK_FALSE(r.pass);
}

TEST_CASE("lucas") {
  auto a = SequenceSource::entry("A");
  CHECK(lucas_check(a, 3, 4).pass);
  CHECK(catalog::recurrence_terms(catalog::get("A").recurrence, 4)[4] % 3 == 1);
  auto any = SequenceSource::from_function("n^2+7", [](unsigned n) { return Integer(n * n + 7); });
  CHECK(lucas_check(any, 11, 10).pass);
  auto succ = SequenceSource::from_function("n+1", [](unsigned n) { return Integer(n + 1); });
  const auto r = lucas_check(succ, 2, 10);
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample);
  // u_2 = 3 against u_0 u_1 = 2.
  CHECK(r.counterexample->at == std::vector<std::pair<std::string, long>>{{"n", 2}});
  CHECK(r.counterexample->lhs == 3);
  CHECK(r.counterexample->rhs == 2);
  auto gamma = SequenceSource::entry("gamma");
  CHECK(lucas_check(gamma, 2, 100).pass);
}

TEST_CASE("d3") {
  auto succ = SequenceSource::from_function("n+1", [](unsigned n) { return Integer(n + 1); });
  CHECK(d3_check(succ, 2, 0, 5, 5).pass);
  auto d = SequenceSource::entry("D");
  CHECK(d3_check(d, 3, 2, 3, 9).pass);
  const auto r = d3_check(succ, 2, 1, 1, 1);
  CHECK(r.checks > 0);
}

TEST_CASE("d3 agrees with a direct enumeration") {
  const auto u = catalog::recurrence_terms(catalog::get("eta").recurrence, 80);
  for (long p : {2L, 3L, 5L}) {
    bool want = true;
    for (long s = 0; s <= 2 && want; ++s)
      for (long m = 0; m <= 2 && want; ++m)
        for (long n = 0; n <= 8 && want; ++n) {
          const long big = n + m * pow_int(p, s).get_si();
          const auto at = [&](long i) { return i == 0 ? Integer(1) : u[i]; };
          want = congruent(at(big) * at(n / p), at(n) * at(big / p), pow_int(p, s));
        }
    auto src = SequenceSource::entry("eta");
    CAPTURE(p);
    CHECK(d3_check(src, p, 2, 2, 8).pass == want);
  }
}

TEST_CASE("valuation bound") {
  auto b = SequenceSource::entry("B");
  const auto r = valuation_bound_check(b, 3, 1);
  CHECK(r.pass);
  CHECK(r.tested_range["Z_p"] == nlohmann::json::array({1, 2}));
  auto d = SequenceSource::entry("D");
  CHECK(valuation_bound_check(d, 5, 50).pass);
  auto ones = SequenceSource::from_function("1", [](unsigned) { return Integer(1); });
  CHECK(valuation_bound_check(ones, 7, 30).pass);
  auto zero = SequenceSource::from_function("n", [](unsigned n) { return Integer(n); });
  CHECK_THROWS_AS(valuation_bound_check(zero, 3, 5), DomainError);
  // v_3(n!) grows slower than the digit count of n for n = 2: Z_3 = {2} breaks it.
  auto bad = fixed({1, 1, 3, 1, 1, 1, 1, 1, 1, 1});
  CHECK_FALSE(valuation_bound_check(bad, 3, 8).pass);
}

TEST_CASE("lemmas") {
  CHECK(jacobsthal_check(2, 1, 5));
  CHECK(jacobsthal_check(3, 1, 3));
  CHECK(jacobsthal_check(7, 7, 5));
  CHECK(jacobsthal_check(7, 0, 5));
  CHECK_THROWS_AS(jacobsthal_check(3, 1, 2), DomainError);
  CHECK_THROWS_AS(jacobsthal_check(1, 3, 3), DomainError);
  CHECK(lower_binom_check(8, 2, 2));
  CHECK(lower_binom_check(9, 3, 3));
  CHECK(lower_binom_check(10, 5, 5));
  CHECK_THROWS_AS(lower_binom_check(3, 0, 3), DomainError);
  CHECK_THROWS_AS(lower_binom_check(3, 9, 3), DomainError);
  CHECK_THROWS_AS(lower_binom_check(6, 4, 2), DomainError);
}

TEST_CASE("lemmas agree with Pascal's triangle") {
  const Pascal C(420);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const long p = std::array<long, 3>{3, 5, 7}[trial % 3];
    const long n = std::uniform_int_distribution<long>(1, 60)(rng);
    const long m = std::uniform_int_distribution<long>(1, n)(rng);
    if (m < n) {
      // The ratio is rational; ratio - 1 in lowest terms must have p^e in its numerator.
      mpq_class excess(C(p * n, p * m), C(n, m));
      excess.canonicalize();
      excess -= 1;
      const long e = val(Integer(n * m * (n - m)), p) + 3 - (p == 3 ? 1 : 0);
      CHECK(jacobsthal_check(n, m, p) == (excess.get_num() % pow_int(p, e) == 0));
    }
    const long vn = val(Integer(n), p), vm = val(Integer(m), p);
    if (vn >= vm) CHECK(lower_binom_check(n, m, p) == (C(n, m) % pow_int(p, vn - vm) == 0));
  }
  const auto j = jacobsthal_grid(60, {3, 5, 7});
  CHECK(j.pass);
  CHECK(j.checks == 3 * 61 * 62 / 2);
  CHECK(lower_binom_grid(60, {3, 5, 7}).pass);
}

TEST_CASE("shifted gauss") {
  const auto lambda = parse_poly("x + x^-1", 1);
  const auto r = shifted_gauss_check(lambda, ExponentVector{0}, 1, {3}, 1, 1);
  CHECK(r.pass);
  CHECK(r.exploratory);
  // Zero shift is the plain Gauss check on CT(lambda^n).
  for (unsigned n = 1; n <= 3; ++n) {
    auto src = SequenceSource::constant_term(lambda, "ct");
    CHECK(shifted_gauss_check(lambda, ExponentVector{0}, n, {3, 5}, 2, 1).pass ==
          gauss_check(src, 1, {3, 5}, 2, n).pass);
  }
  const auto d = shifted_gauss_check(catalog::get("D").ct_polys[0].poly, ExponentVector{1, 0}, 1, {3}, 1, 2);
  CHECK(d.exploratory);
  CHECK(d.checks == 1);
  CHECK_THROWS_AS(shifted_gauss_check(lambda, ExponentVector{0, 0}, 1, {3}, 1, 1), DimensionMismatch);
}

TEST_CASE("sources") {
  auto ct = SequenceSource::constant_term(catalog::get("D").ct_polys[0].poly, "D:ct");
  auto bin = SequenceSource::binomial("D");
  auto rec = SequenceSource::entry("D");
  CHECK(ct.prefix(8) == rec.prefix(8));
  CHECK(bin.prefix(20) == rec.prefix(20));
  CHECK(rec.prefix(3).size() >= 4);
  CHECK_THROWS_AS(SequenceSource::entry("nope"), UnknownName);
}
