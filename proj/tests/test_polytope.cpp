#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "sporadic/catalog.hpp"
#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"
#include "sporadic/polytope.hpp"

using namespace sporadic;
using polytope::origin_only_interior;

namespace {

std::vector<ExponentVector> support(const LaurentPoly& a) {
  std::vector<ExponentVector> s;
  for (const auto& [e, c] : a.terms()) s.push_back(e);
  return s;
}

long dot(const std::vector<int>& n, const ExponentVector& p) {
  long s = 0;
  for (int i = 0; i < p.dim(); ++i) s += static_cast<long>(n[static_cast<std::size_t>(i)]) * p[i];
  return s;
}

struct Direction {
  std::vector<int> n;
  long support_max;
};

// p is strictly inside conv(S) iff n.p < max_S n.s for every direction n. Taking
// every n in [-B, B]^d is exact once B bounds the facet normals. Lower-dimensional
// hulls fail on a normal direction.
std::vector<Direction> directions(const std::vector<ExponentVector>& S, int B) {
  const int d = S.front().dim();
  std::vector<Direction> out;
  std::vector<int> n(static_cast<std::size_t>(d), -B);
  for (;;) {
    if (std::any_of(n.begin(), n.end(), [](int v) { return v != 0; })) {
      long best = dot(n, S.front());
      for (const auto& s : S) best = std::max(best, dot(n, s));
      out.push_back({n, best});
    }
    int i = 0;
    while (i < d && n[static_cast<std::size_t>(i)] == B) n[static_cast<std::size_t>(i++)] = -B;
    if (i == d) return out;
    ++n[static_cast<std::size_t>(i)];
  }
}

bool interior_oracle(const std::vector<Direction>& dirs, const ExponentVector& p) {
  return std::all_of(dirs.begin(), dirs.end(), [&](const Direction& d) { return dot(d.n, p) < d.support_max; });
}

std::vector<ExponentVector> box_points(const ExponentVector& lo, const ExponentVector& hi) {
  std::vector<ExponentVector> out;
  ExponentVector e = lo;
  const int d = lo.dim();
  for (;;) {
    out.push_back(e);
    int i = d - 1;
    while (i >= 0 && e[i] == hi[i]) {
      e[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentVector> box_points(int d, int lo, int hi) {
  ExponentVector a(d), b(d);
  for (int i = 0; i < d; ++i) a[i] = lo, b[i] = hi;
  return box_points(a, b);
}

// Scans the support's bounding box. Facet normals are cofactors of d-1 difference
// vectors with entries below the box width W, so |n_i| <= (d-1)! W^(d-1).
std::vector<ExponentVector> oracle_interior(const LaurentPoly& a) {
  const auto S = support(a);
  const int d = a.dim();
  ExponentVector lo = S.front(), hi = S.front();
  for (const auto& s : S)
    for (int i = 0; i < d; ++i) lo[i] = std::min(lo[i], s[i]), hi[i] = std::max(hi[i], s[i]);
  int W = 0;
  for (int i = 0; i < d; ++i) W = std::max(W, hi[i] - lo[i]);
  int B = 1;
  for (int k = 1; k < d; ++k) B *= k * W;
  const auto dirs = directions(S, std::max(B, 1));
  std::vector<ExponentVector> out;
  for (const auto& p : box_points(lo, hi))
    if (interior_oracle(dirs, p)) out.push_back(p);
  return out;
}

const LaurentPoly& catalog_poly(const char* name) { return catalog::get(name).polytope_poly(); }

}  // namespace

TEST_CASE("hull basics") {
  CHECK_THROWS_AS(polytope::convex_hull({}), DomainError);
  CHECK_THROWS_AS(polytope::newton_polytope(LaurentPoly(2)), DomainError);
  const auto sq = polytope::convex_hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
  CHECK(sq.vertices == std::vector<ExponentVector>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  CHECK(sq.facets.size() == 4);
  CHECK(polytope::interior_integral_points(sq) == std::vector<ExponentVector>{{1, 1}});
  const auto cube = polytope::convex_hull(box_points(3, -1, 1));
  CHECK(cube.vertices.size() == 8);
  CHECK(cube.facets.size() == 6);
  CHECK(polytope::interior_integral_points(cube) == std::vector<ExponentVector>{{0, 0, 0}});
  const auto tess = polytope::convex_hull(box_points(4, 0, 2));
  CHECK(tess.vertices.size() == 16);
  CHECK(tess.facets.size() == 8);
  CHECK(polytope::interior_integral_points(tess) == std::vector<ExponentVector>{{1, 1, 1, 1}});
}

TEST_CASE("interior examples") {
  const std::vector<ExponentVector> origin{ExponentVector{0, 0}};
  CHECK(polytope::interior_integral_points(polytope::newton_polytope(catalog_poly("A"))) == origin);
  CHECK(polytope::newton_polytope(catalog_poly("A")).vertices.size() == 6);
  CHECK(polytope::interior_integral_points(polytope::newton_polytope(catalog::get("F").ct_polys[1].poly)) == origin);
  const auto eta = polytope::interior_integral_points(polytope::newton_polytope(catalog_poly("eta")));
  CHECK(eta == std::vector<ExponentVector>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                           {1, 0, 0}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("verdicts") {
  const auto d = origin_only_interior(catalog_poly("D"));
  CHECK(d.pass);
  CHECK(d.origin_interior);
  CHECK(d.witnesses.empty());
  const auto eta = origin_only_interior(catalog_poly("eta"));
  CHECK_FALSE(eta.pass);
  CHECK(std::find(eta.witnesses.begin(), eta.witnesses.end(), ExponentVector{1, 0, 0}) != eta.witnesses.end());
  const auto flat = origin_only_interior(parse_poly("x + x^-1", 2));
  CHECK_FALSE(flat.pass);
  CHECK_FALSE(flat.origin_interior);
  CHECK(flat.polytope.affine_dim == 1);
  CHECK(flat.polytope.contains({0, 0}));
  CHECK_FALSE(flat.polytope.contains({0, 1}));
  CHECK_FALSE(flat.polytope.contains({2, 0}));
  // Origin interior but not alone.
  CHECK_FALSE(origin_only_interior(parse_poly("x^2 + y^2 + x^-2*y^-2", 2)).pass);
  // Origin on the boundary.
  const auto edge = origin_only_interior(parse_poly("1 + x + y", 2));
  CHECK_FALSE(edge.pass);
  CHECK_FALSE(edge.origin_interior);
  CHECK(polytope::to_json(flat)["verdict"] == "fail");
}

TEST_CASE("catalog verdicts: only eta fails") {
  std::vector<std::string> failing;
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    const auto v = origin_only_interior(e.polytope_poly());
    CHECK(v.pass == e.polytope_origin_only);
    if (!v.pass) failing.push_back(e.name);
    // The oracle sees the same interior.
    if (e.ct_dim() <= 3) CHECK(polytope::interior_integral_points(v.polytope) == oracle_interior(e.polytope_poly()));
  }
  CHECK(failing == std::vector<std::string>{"eta"});
}

TEST_CASE("random supports: membership, idempotence, oracle interior") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = trial < 30 ? 2 : 3;
    const int span = dim == 2 ? 2 : 1;
    const auto a = oracle::random_poly(rng, dim, dim == 2 ? 6 : 8, span, 3);
    if (a.is_zero()) continue;
    CAPTURE(format_poly(a));
    const auto P = polytope::newton_polytope(a);
    for (const auto& s : support(a)) CHECK(P.contains(s));
    const auto Q = polytope::convex_hull(P.vertices);
    CHECK(Q.vertices == P.vertices);
    CHECK(Q.facets == P.facets);
    CHECK(polytope::interior_integral_points(P) == oracle_interior(a));
  }
}

TEST_CASE("unimodular maps preserve the verdict and the interior count") {
  const std::vector<std::vector<long>> maps2 = {{1, 1, 0, 1}, {0, 1, 1, 0}, {2, 1, 1, 1}, {-1, 0, 3, 1}};
  const std::vector<std::vector<long>> maps3 = {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1, 1, 0, 0},
                                                {1, 0, 1, 1, 1, 1, 0, 1, 1}};
  for (const auto& e : catalog::entries()) {
    if (e.ct_dim() > 3) continue;
    CAPTURE(e.name);
    const auto base = origin_only_interior(e.polytope_poly());
    const auto n = polytope::interior_integral_points(base.polytope).size();
    for (const auto& m : e.ct_dim() == 2 ? maps2 : maps3) {
      const auto U = MonomialMap::unimodular(e.ct_dim(), m);
      const auto v = origin_only_interior(monomial_substitute(e.polytope_poly(), U));
      CHECK(v.pass == base.pass);
      CHECK(polytope::interior_integral_points(v.polytope).size() == n);
      std::set<ExponentVector> mapped;
      for (const auto& w : base.witnesses) mapped.insert(U.apply(w));
      CHECK(std::set<ExponentVector>(v.witnesses.begin(), v.witnesses.end()) == mapped);
    }
  }
}
