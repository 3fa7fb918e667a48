// One PASS/FAIL line per acceptance criterion. Every comparison is exact; the
// only tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sporadic/catalog.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/diagonal.hpp"
#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"
#include "sporadic/polytope.hpp"
#include "sporadic/search.hpp"
#include "sporadic/verify.hpp"

using namespace sporadic;
using namespace sporadic::congruence;

namespace {

constexpr double kAgreementBudgetSeconds = 300;
constexpr double kDiagonalBudgetSeconds = 600;
constexpr double kSearchBudgetSeconds = 600;
constexpr double kDefaultBudgetSeconds = 120;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::vector<Integer> rec(const std::string& name, unsigned N) {
  return catalog::recurrence_terms(catalog::get(name).recurrence, N);
}

std::vector<std::string> origin_only_sporadic() {
  std::vector<std::string> out;
  for (const auto& e : catalog::entries())
    if (e.sporadic && e.polytope_origin_only) out.push_back(e.name);
  return out;
}

void expect_report(Outcome& o, const CongruenceReport& r) {
  if (r.pass) return;
  std::string at;
  if (r.counterexample)
    for (const auto& [k, v] : r.counterexample->at) at += " " + k + "=" + std::to_string(v);
  fail(o, std::string(family_name(r.family)) + " " + r.sequence + " fails at" + at);
}

Outcome c1_agreement() {
  Outcome o;
  const auto rep = verify::verify_all(catalog::entries(), 12, 10);
  std::size_t rows = 0;
  for (const auto& a : rep.agreements) {
    ++rows;
    if (!a.agree) fail(o, a.entry + " " + a.representation + (a.error.empty() ? " mismatch" : " " + a.error));
  }
  if (rec("gamma", 1)[1] != 5) fail(o, "a_1 != 5");
  if (rec("D", 1)[1] != 3) fail(o, "b_1 != 3");
  if (o.pass) o.detail = std::to_string(rows) + " representation rows, depth 12 (2 vars) / 10 (3+ vars)";
  return o;
}

Outcome c2_prop12() {
  Outcome o;
  for (const char* name : {"B", "F", "delta"})
    if (catalog::prop12_terms(name, 8) != rec(name, 8)) fail(o, std::string(name) + " differs");
  if (o.pass) o.detail = "B, F, delta through n = 8";
  return o;
}

Outcome c3_gauss_b() {
  Outcome o;
  auto b = SequenceSource::entry("B");
  const auto r = gauss_check(b, 2, {3, 5, 7}, 2, 2);
  expect_report(o, r);
  if (o.pass) o.detail = std::to_string(r.checks) + " checks, largest index 98";
  return o;
}

Outcome c4_gauss_order3() {
  Outcome o;
  std::size_t checks = 0;
  for (const char* name : {"gamma", "D"}) {
    auto s = SequenceSource::entry(name);
    const auto r = gauss_check(s, 3, {5, 7}, 2, 2);
    checks += r.checks;
    expect_report(o, r);
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks on gamma and D";
  return o;
}

Outcome c5_gauss_order1() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : catalog::entries()) {
    auto s = SequenceSource::entry(e.name);
    const auto r = gauss_check(s, 1, {2, 3, 5}, 2, 3);
    checks += r.checks;
    expect_report(o, r);
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks over 18 sequences";
  return o;
}

Outcome c6_lucas() {
  Outcome o;
  int n = 0;
  for (const auto& e : catalog::entries()) {
    if (!e.sporadic) continue;
    ++n;
    auto s = SequenceSource::entry(e.name);
    for (unsigned long p : {2UL, 3UL, 5UL}) expect_report(o, lucas_check(s, p, 200));
  }
  if (o.pass && n != 15) fail(o, std::to_string(n) + " sporadic entries, expected 15");
  if (o.pass) o.detail = "15 sequences, p in {2,3,5}, n <= 200";
  return o;
}

Outcome c7_d3() {
  Outcome o;
  const auto names = origin_only_sporadic();
  for (const auto& name : names) {
    auto s = SequenceSource::entry(name);
    for (unsigned long p : {2UL, 3UL}) expect_report(o, d3_check(s, p, 2, 2, 8));
  }
  if (o.pass && names.size() != 14) fail(o, std::to_string(names.size()) + " origin-only entries, expected 14");
  if (o.pass) o.detail = "14 sequences, p in {2,3}, s,m <= 2, n <= 8";
  return o;
}

Outcome c8_valuation() {
  Outcome o;
  for (const auto& name : origin_only_sporadic()) {
    auto s = SequenceSource::entry(name);
    for (unsigned long p : {3UL, 5UL}) {
      try {
        expect_report(o, valuation_bound_check(s, p, 60));
      } catch (const DomainError& ex) {
        fail(o, name + ": " + ex.what());
      }
    }
  }
  if (o.pass) o.detail = "14 sequences, p in {3,5}, n <= 60";
  return o;
}

Outcome c9_polytopes() {
  Outcome o;
  int sporadic_pass = 0;
  for (const auto& e : catalog::entries()) {
    const auto v = polytope::origin_only_interior(e.polytope_poly());
    if (e.sporadic && v.pass) ++sporadic_pass;
    if (e.name == "L3" && !v.pass) fail(o, "L3 fails");
    if (e.name == "eta") {
      const std::vector<ExponentVector> want = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};
      if (v.pass) fail(o, "eta passes");
      else if (v.witnesses != want) fail(o, "eta witnesses differ");
    } else if (e.sporadic && !v.pass) {
      fail(o, e.name + " fails");
    }
  }
  if (o.pass && sporadic_pass != 14) fail(o, std::to_string(sporadic_pass) + " sporadic passes, expected 14");
  if (o.pass) o.detail = "14 sporadic + L3 pass; eta fails with its 6 witnesses";
  return o;
}

Outcome c10_diagonals() {
  Outcome o;
  const auto diag = [](const char* denominator, int dim) {
    return diagonal_prefix(LaurentPoly::constant(dim, 1) - parse_poly(denominator, dim), 5);
  };
  const std::vector<std::tuple<const char*, const char*, int>> rational = {
      {"gamma", "(1-x-y)*(1-z-w) - x*y*z*w", 4},
      {"D", "(1-x-y)*(1-z) - x*y*z", 3},
      {"A", "(1-x)*(1-y)*(1-z) - x*y*z", 3},
      {"A", "1 - x - y - z + 4*x*y*z", 3},
      {"delta", "1 - (x + y + z - w) - 27*x*y*z*w", 4},
  };
  for (const auto& [name, den, dim] : rational)
    if (diag(den, dim) != rec(name, 5)) fail(o, std::string(name) + " diagonal of 1/(" + den + ")");
  const std::vector<std::pair<const char*, std::vector<long>>> matrices = {
      {"gamma", {1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1}},
      {"D", {1, 1, 0, 1, 1, 1, 1, 0, 1}},
      {"A", {1, 1, 0, 0, 1, 1, 1, 0, 1}},
      {"A", {1, 1, 1, 1, 1, -1, 1, -1, 1}},
      {"A", {0, 1, 1, 1, 0, 1, 1, 1, 0}},
      {"A", {-1, 1, 1, -1, -1, 1, -1, -1, -1}},
      {"delta", {0, 1, -1, 1, -1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, -1}},
  };
  for (const auto& [name, m] : matrices) {
    const int d = m.size() == 9 ? 3 : 4;
    const auto q = LaurentPoly::constant(d, 1) - macmahon_determinant(d, m);
    if (diagonal_prefix(q, 5) != rec(name, 5)) fail(o, std::string(name) + " determinant diagonal");
    if (ct_sequence(matrix_to_ct_poly(d, m), 5, {.prune = true}) != rec(name, 5))
      fail(o, std::string(name) + " matrix constant terms");
  }
  if (o.pass) o.detail = "5 rational functions, 7 matrices, n <= 5";
  return o;
}

Outcome c11_lemmas() {
  Outcome o;
  const auto j = jacobsthal_grid(60, {3, 5, 7});
  const auto l = lower_binom_grid(60, {3, 5, 7});
  expect_report(o, j);
  expect_report(o, l);
  if (o.pass) o.detail = std::to_string(j.checks + l.checks) + " checks, n,m <= 60, p in {3,5,7}";
  return o;
}

Outcome c12_search() {
  Outcome o;
  auto c = search::preset("linear");
  c.prefix_len = 8;
  for (const char* n : {"A", "D"}) c.targets.push_back(search::catalog_target(n, c.prefix_len));
  const auto r = search::search_matches(c);
  for (const char* n : {"A", "D"}) {
    const auto key = search::canonical_form(catalog::get(n).ct_polys[0].poly).key;
    bool found = false;
    for (const auto& m : r.matches) found |= m.canonical_key == key && m.matched_target == n;
    if (!found) fail(o, std::string(n) + " not rediscovered");
  }
  if (r.partial) fail(o, "search ran over budget");
  if (o.pass)
    o.detail = std::to_string(r.enumerated) + " classes, " + std::to_string(r.matches.size()) + " matches at depth 8";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria = {
      {1, "three-way representation agreement", kAgreementBudgetSeconds, c1_agreement},
      {2, "multinomial-sum identities for B, F, delta", kDefaultBudgetSeconds, c2_prop12},
      {3, "order-2 Gauss congruences for B", kDefaultBudgetSeconds, c3_gauss_b},
      {4, "order-3 Gauss congruences for gamma and D", kDefaultBudgetSeconds, c4_gauss_order3},
      {5, "order-1 Gauss congruences for all 18", kDefaultBudgetSeconds, c5_gauss_order1},
      {6, "Lucas congruences for the 15 sporadic sequences", kDefaultBudgetSeconds, c6_lucas},
      {7, "D3 congruences for the 14 origin-only sequences", kDefaultBudgetSeconds, c7_d3},
      {8, "valuation lower bound", kDefaultBudgetSeconds, c8_valuation},
      {9, "Newton polytope verdicts", kDefaultBudgetSeconds, c9_polytopes},
      {10, "diagonal representations", kDiagonalBudgetSeconds, c10_diagonals},
      {11, "binomial lemmas on the full grid", kDefaultBudgetSeconds, c11_lemmas},
      {12, "search rediscovers D and A", kSearchBudgetSeconds, c12_search},
  };
  int failures = 0;
  for (const auto& [id, title, budget, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("threw: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget) fail(o, "exceeded " + std::to_string(static_cast<int>(budget)) + " s budget");
    failures += o.pass ? 0 : 1;
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
