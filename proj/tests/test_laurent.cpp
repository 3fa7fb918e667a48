#include <doctest.h>

#include <omp.h>

#include <random>

#include "oracle.hpp"
#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"
#include "sporadic/kernels.hpp"
#include "sporadic/laurent.hpp"

using namespace sporadic;

namespace {

LaurentPoly P(const char* text, int dim) { return parse_poly(text, dim); }

const char* const kA = "(x+1)*(y+1)*(x+y) * x^-1 * y^-1";
const char* const kD = "(x+1)*(y+1)*(x+y+1) * x^-1 * y^-1";

}  // namespace

TEST_CASE("packed keys order lexicographically") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-300, 300);
  for (int trial = 0; trial < 500; ++trial) {
    ExponentVector a(3), b(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
    }
    CHECK((detail::pack(a) < detail::pack(b)) == (a < b));
    CHECK(detail::unpack(detail::pack(a), 3) == a);
    CHECK(detail::pack(a + b) == detail::pack(a) + detail::pack(b) - detail::kBias);
  }
}

TEST_CASE("parse examples") {
  const auto a = P(kA, 2);
  CHECK(a.size() == 7);
  CHECK(a.constant_term() == 2);
  CHECK(P("1", 3) == LaurentPoly::constant(3, 1));
  CHECK(P("x^2*y - y^2*x", 2).size() == 2);
  CHECK(P("x1*x2 - y*x", 2).is_zero());
  CHECK(P("x^(-2) + x^-2", 1) == LaurentPoly::monomial({-2}, 2));
  CHECK(P("-(x - 1)^3", 1) == P("-x^3 + 3*x^2 - 3*x + 1", 1));
  CHECK(P("(-x*y)^-1", 2) == LaurentPoly::monomial({-1, -1}, -1));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x +* y", 2), ParseError);
  CHECK_THROWS_AS(P("z", 2), ParseError);
  CHECK_THROWS_AS(P("(x+1)^-1", 2), ParseError);
  CHECK_THROWS_AS(P("(x", 2), ParseError);
  CHECK_THROWS_AS(P("x^99999", 1), ParseError);
  try {
    P("x + ?", 1);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("format is canonical and round-trips") {
  std::mt19937 rng(11);
  for (int dim = 1; dim <= 4; ++dim)
    for (int trial = 0; trial < 40; ++trial) {
      const auto p = oracle::random_poly(rng, dim, 12, 4, 50);
      CHECK(parse_poly(format_poly(p), dim) == p);
      CHECK(poly_from_json(poly_to_json(p)) == p);
    }
  CHECK(format_poly(LaurentPoly(2)) == "0");
  CHECK(format_poly(P("x^-1*y + 2*x^2", 2)) == "x^-1*y + 2*x^2");
  const auto j = poly_to_json(P("3 - x", 1));
  CHECK(j.dump() == R"({"dim":1,"terms":[{"c":"3","e":[0]},{"c":"-1","e":[1]}]})");
}

TEST_CASE("multiplication examples") {
  const auto s = P("x + x^-1", 1);
  CHECK(s * s == P("x^2 + 2 + x^-2", 1));
  CHECK(P("x - y", 2) * P("x + y", 2) == P("x^2 - y^2", 2));
  const auto a = P(kA, 2);
  CHECK(a * LaurentPoly::constant(2, 1) == a);
  CHECK((a * LaurentPoly(2)).is_zero());
  CHECK_THROWS_AS(poly_mul(P("x", 1), P("x", 2)), DimensionMismatch);
}

TEST_CASE("serial and parallel kernels agree with the naive product") {
  std::mt19937 rng(2024);
  omp_set_num_threads(4);
  for (int dim = 1; dim <= 4; ++dim)
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = oracle::random_poly(rng, dim, 40, 6, 1000);
      const auto b = oracle::random_poly(rng, dim, 40, 6, 1000);
      const auto want = oracle::multiply(oracle::to_naive(a), oracle::to_naive(b));
      const auto serial = kernels::multiply_serial(a, b);
      const auto parallel = kernels::multiply_parallel(a, b);
      CHECK(oracle::to_naive(serial) == want);
      CHECK(parallel == serial);
      CHECK(oracle::to_naive(serial).size() <= a.size() * b.size());
    }
}

TEST_CASE("cancellation leaves no zero coefficients") {
  omp_set_num_threads(4);
  // (x - 1)(x + 1) + the big products below cancel heavily.
  const auto a = P("(x - y)^6", 2);
  const auto b = P("(x + y)^6", 2);
  const auto serial = kernels::multiply_serial(a, b);
  const auto parallel = kernels::multiply_parallel(a, b);
  CHECK(serial == P("(x^2 - y^2)^6", 2));
  CHECK(parallel == serial);
  for (const auto& [k, c] : parallel.raw()) CHECK(c != 0);
}

TEST_CASE("windowed multiply drops exactly the terms outside the box") {
  std::mt19937 rng(5);
  omp_set_num_threads(4);
  const auto a = oracle::random_poly(rng, 2, 60, 8, 9);
  const auto b = oracle::random_poly(rng, 2, 60, 8, 9);
  ExponentBox box{2, {-3, -2, 0, 0}, {4, 1, 0, 0}};
  const kernels::MultiplyOptions opt{.window = &box};
  auto want = oracle::multiply(oracle::to_naive(a), oracle::to_naive(b));
  std::erase_if(want, [](const auto& kv) {
    return kv.first[0] < -3 || kv.first[0] > 4 || kv.first[1] < -2 || kv.first[1] > 1;
  });
  CHECK(oracle::to_naive(kernels::multiply_serial(a, b, opt)) == want);
  CHECK(oracle::to_naive(kernels::multiply_parallel(a, b, opt)) == want);
}

TEST_CASE("resource limits are structured errors") {
  const auto a = P("(x+1)*(y+1)*(z+1)", 3);
  CHECK_THROWS_AS(poly_mul(a, a, 10), ResourceError);
  CHECK_THROWS_AS(kernels::multiply_parallel(a, a, {.term_cap = 10}), ResourceError);
  const auto big = LaurentPoly::monomial({30000});
  CHECK_THROWS_AS(poly_mul(big, big), ResourceError);
  CHECK_THROWS_AS(poly_pow(P("x + x^-1", 1), 40, 20), ResourceError);
}

TEST_CASE("powers") {
  const auto a = P(kA, 2);
  CHECK(poly_pow(a, 0) == LaurentPoly::constant(2, 1));
  CHECK(poly_pow(P("x + x^-1", 1), 2) == P("x^2 + 2 + x^-2", 1));
  CHECK(poly_pow(a, 2).constant_term() == 10);
  std::mt19937 rng(3);
  for (int dim = 1; dim <= 3; ++dim) {
    const auto p = oracle::random_poly(rng, dim, 5, 2, 3);
    for (unsigned n = 0; n <= 6; ++n) {
      const auto bin = poly_pow(p, n);
      CHECK(bin == poly_pow_iterative(p, n));
      CHECK(oracle::to_naive(bin) == oracle::power(oracle::to_naive(p), n, dim));
    }
  }
}

TEST_CASE("constant terms") {
  CHECK(constant_term(LaurentPoly::constant(1, 1)) == 1);
  CHECK(constant_term(P(kA, 2)) == 2);
  CHECK(constant_term(P(kD, 2)) == 3);
  CHECK(constant_term(LaurentPoly(2)) == 0);
}

TEST_CASE("ct_sequence examples and pruning equivalence") {
  CHECK(ct_sequence(P("1", 2), 3) == std::vector<Integer>{1, 1, 1, 1});
  CHECK(ct_sequence(P(kD, 2), 3) == std::vector<Integer>{1, 3, 19, 147});
  CHECK(ct_sequence(P("(-x*y)^-1*(x+y+1)*(x^2+y^2-x*y-x-y+1)", 2), 2) == std::vector<Integer>{1, 3, 9});
  std::mt19937 rng(99);
  for (int dim = 1; dim <= 3; ++dim)
    for (int trial = 0; trial < 6; ++trial) {
      const auto p = oracle::random_poly(rng, dim, 6, 2, 2);
      const unsigned N = dim == 3 ? 5 : 7;
      const auto plain = ct_sequence(p, N);
      CHECK(ct_sequence(p, N, {.prune = true}) == plain);
      const auto naive = oracle::to_naive(p);
      for (unsigned n = 0; n <= N; ++n) CHECK(plain[n] == oracle::constant_term(oracle::power(naive, n, dim), dim));
    }
}

TEST_CASE("CtStream emits one term per step") {
  CtStream s(P(kD, 2), 4, {.prune = true});
  std::vector<Integer> got;
  while (!s.done()) got.push_back(s.next());
  CHECK(got == std::vector<Integer>{1, 3, 19, 147, 1251});
}

TEST_CASE("ct_shifted") {
  const auto d = P(kD, 2);
  CHECK(ct_shifted(d, 1, ExponentVector{0, 0}) == 3);
  CHECK(ct_shifted(d, 0, ExponentVector{1, 0}) == 0);
  CHECK(ct_shifted(d, 0, ExponentVector{0, 0}) == 1);
  // CT(D * x) is the coefficient of x^-1 in D.
  CHECK(ct_shifted(d, 1, ExponentVector{1, 0}) == d.coefficient(ExponentVector{-1, 0}));
  for (unsigned n = 0; n <= 5; ++n) CHECK(ct_shifted(d, n, ExponentVector{0, 0}) == poly_pow(d, n).constant_term());
}

TEST_CASE("monomial maps") {
  const auto s = P("x + x^-1", 1);
  CHECK(monomial_substitute(s, MonomialMap::identity(1)) == s);
  CHECK(monomial_substitute(s, MonomialMap::inversion(1, 0)) == s);
  CHECK_THROWS_AS(MonomialMap(2, {1, 2, 2, 4}), DomainError);
  CHECK_THROWS_AS(MonomialMap::unimodular(2, {2, 0, 0, 1}), DomainError);
  CHECK(MonomialMap::scaling(2, 2).kind() == MapKind::Injective);
  CHECK(MonomialMap(2, {1, 1, 0, 1}).kind() == MapKind::Unimodular);

  // P(x, y) = Q(x^2, y^2) for the F polynomials; CT of powers agrees.
  const auto p = P("(x*y)^-2*(-x+y+1)*(x-y+1)*(x+y-1)*(x+y+1)*(x^2+y^2+1)", 2);
  const auto q = P("(-x*y)^-1*(x+y+1)*(x^2+y^2-2*x*y-2*x-2*y+1)", 2);
  CHECK(monomial_substitute(q, MonomialMap::scaling(2, 2)) == p);
  CHECK(ct_sequence(p, 8) == ct_sequence(q, 8));
}

TEST_CASE("unimodular substitution preserves constant terms of powers") {
  std::mt19937 rng(17);
  const std::vector<std::vector<long>> maps = {{0, 1, 1, 0}, {1, 1, 0, 1}, {2, 1, 1, 1}, {-1, 0, 3, 1}};
  for (const auto& m : maps) {
    const auto u = MonomialMap::unimodular(2, m);
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = oracle::random_poly(rng, 2, 6, 2, 3);
      CHECK(ct_sequence(monomial_substitute(a, u), 6) == ct_sequence(a, 6));
    }
  }
  // The substitution g = f(1/xyz, 1/yz, 1/z) in three variables.
  const auto g = MonomialMap::unimodular(3, {-1, 0, 0, -1, -1, 0, -1, -1, -1});
  const auto f = P("(x*y*z)^-1*(x+1)*(y+1)*(z+1)*(x+y+z+1)", 3);
  CHECK(ct_sequence(monomial_substitute(f, g), 5, {.prune = true}) == ct_sequence(f, 5, {.prune = true}));
}

TEST_CASE("constant term of a product is symmetric") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_poly(rng, 2, 8, 3, 5);
    const auto b = oracle::random_poly(rng, 2, 8, 3, 5);
    CHECK(constant_term(poly_mul(a, b)) == constant_term(poly_mul(b, a)));
  }
}

TEST_CASE("embed keeps the polynomial") {
  const auto a = P(kA, 2);
  const auto e = embed(a, 4);
  CHECK(e.dim() == 4);
  CHECK(e.size() == a.size());
  CHECK(e.coefficient(ExponentVector{-1, 1, 0, 0}) == a.coefficient(ExponentVector{-1, 1}));
  CHECK(ct_sequence(e, 5) == ct_sequence(a, 5));
}
