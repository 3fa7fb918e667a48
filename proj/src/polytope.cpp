#include "sporadic/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "sporadic/errors.hpp"

namespace sporadic::polytope {

namespace {

long dot(const std::vector<long>& n, const ExponentVector& p) {
  long s = 0;
  for (int i = 0; i < p.dim(); ++i) s += n[static_cast<std::size_t>(i)] * p[i];
  return s;
}

// Exact rank of the rows (p_i - p_0) by fraction-free elimination.
int affine_rank(const std::vector<ExponentVector>& pts) {
  const int d = pts.front().dim();
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Integer> r(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    const auto c = static_cast<std::size_t>(col);
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Integer f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = rows[i][j] * pr[c] - pr[j] * f;
    }
    ++rank;
  }
  return rank;
}

std::vector<long> primitive(std::vector<long> n) {
  long g = 0;
  for (long v : n) g = std::gcd(g, v);
  if (g > 1)
    for (long& v : n) v /= g;
  return n;
}

long cross2(const ExponentVector& o, const ExponentVector& a, const ExponentVector& b) {
  return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; vertices counter-clockwise, collinear points dropped.
std::vector<Facet> hull2(std::vector<ExponentVector> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<ExponentVector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    // Interior lies to the left of a->b, so (dy, -dx) points outward.
    auto n = primitive({b[1] - a[1], a[0] - b[0]});
    facets.push_back({n, dot(n, a)});
  }
  return facets;
}

// Normal of the hyperplane through d points in dimension d, by cofactors.
std::vector<long> hyperplane_normal(const std::vector<const ExponentVector*>& pts, int d) {
  std::vector<long> n(static_cast<std::size_t>(d));
  std::vector<long> minor;
  for (int j = 0; j < d; ++j) {
    minor.clear();
    for (int r = 1; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (c != j) minor.push_back((*pts[static_cast<std::size_t>(r)])[c] - (*pts[0])[c]);
    const long m = d == 1 ? 1 : integer_determinant(d - 1, minor);
    n[static_cast<std::size_t>(j)] = (j % 2 == 0) ? m : -m;
  }
  return n;
}

// Every d-subset spanning a hyperplane with all points weakly on one side yields a facet.
std::vector<Facet> hull_brute(const std::vector<ExponentVector>& pts, int d) {
  std::set<Facet> found;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = pts.size();
  std::vector<const ExponentVector*> chosen(static_cast<std::size_t>(d));
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) chosen[i] = &pts[idx[i]];
    auto normal = hyperplane_normal(chosen, d);
    if (std::any_of(normal.begin(), normal.end(), [](long v) { return v != 0; })) {
      normal = primitive(std::move(normal));
      const long off = dot(normal, *chosen[0]);
      bool below = true, above = true;
      for (const auto& p : pts) {
        const long v = dot(normal, p);
        below = below && v <= off;
        above = above && v >= off;
      }
      if (below) found.insert({normal, off});
      if (above) {
        for (long& v : normal) v = -v;
        found.insert({normal, -off});
      }
    }
    // Next combination.
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(d - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {found.begin(), found.end()};
}

std::vector<Facet> full_dim_facets(const std::vector<ExponentVector>& pts, int d) {
  if (d == 2) {
    auto f = hull2(pts);
    std::sort(f.begin(), f.end());
    return f;
  }
  return hull_brute(pts, d);
}

// Points whose tight facet normals span R^d.
std::vector<ExponentVector> vertices_of(const std::vector<ExponentVector>& pts, const std::vector<Facet>& facets,
                                        int d) {
  std::vector<ExponentVector> out;
  for (const auto& p : pts) {
    std::vector<ExponentVector> normals{ExponentVector(d)};  // origin anchor for affine_rank
    for (const auto& f : facets)
      if (dot(f.normal, p) == f.offset) {
        ExponentVector v(d);
        for (int i = 0; i < d; ++i) v[i] = static_cast<int>(f.normal[static_cast<std::size_t>(i)]);
        normals.push_back(v);
      }
    if (affine_rank(normals) == d) out.push_back(p);
  }
  return out;
}

// Coordinates on which the projection of pts keeps the full affine rank r.
std::vector<int> spanning_coordinates(const std::vector<ExponentVector>& pts, int r) {
  const int d = pts.front().dim();
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<int> coords;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) coords.push_back(i);
    std::vector<ExponentVector> proj;
    for (const auto& p : pts) {
      ExponentVector q(r);
      for (int i = 0; i < r; ++i) q[i] = p[coords[static_cast<std::size_t>(i)]];
      proj.push_back(q);
    }
    if (affine_rank(proj) == r) return coords;
  }
  throw Error("no spanning coordinate set");  // unreachable for rank r
}

ExponentVector project(const ExponentVector& p, const std::vector<int>& coords) {
  ExponentVector q(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) q[static_cast<int>(i)] = p[coords[i]];
  return q;
}

}  // namespace

bool Polytope::contains(const ExponentVector& p) const {
  if (p.dim() != dim) throw DimensionMismatch("point and polytope of different dimension");
  if (full_dimensional())
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return dot(f.normal, p) <= f.offset; });
  if (vertices.empty()) return false;
  auto pts = vertices;
  pts.push_back(p);
  if (affine_rank(pts) != affine_dim) return false;
  if (affine_dim == 0) return true;
  const ExponentVector q = project(p, chart);
  return std::all_of(chart_facets.begin(), chart_facets.end(),
                     [&](const Facet& f) { return dot(f.normal, q) <= f.offset; });
}

bool Polytope::strictly_inside(const ExponentVector& p) const {
  if (!full_dimensional()) return false;
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return dot(f.normal, p) < f.offset; });
}

Polytope convex_hull(std::vector<ExponentVector> points) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  const int d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw DimensionMismatch("hull points of different dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope P;
  P.dim = d;
  P.affine_dim = affine_rank(points);
  if (P.affine_dim == d) {
    P.facets = full_dim_facets(points, d);
    P.vertices = vertices_of(points, P.facets, d);
    return P;
  }
  if (P.affine_dim == 0) {
    P.vertices = points;
    return P;
  }
  // Lower-dimensional: the projection onto spanning coordinates is injective on the
  // affine hull, so extreme points and membership carry over. Facets stay empty.
  const int r = P.affine_dim;
  P.chart = spanning_coordinates(points, r);
  std::vector<ExponentVector> proj;
  for (const auto& p : points) proj.push_back(project(p, P.chart));
  P.chart_facets = r == 1 ? hull_brute(proj, 1) : full_dim_facets(proj, r);
  const auto pv = vertices_of(proj, P.chart_facets, r);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::find(pv.begin(), pv.end(), proj[i]) != pv.end()) P.vertices.push_back(points[i]);
  return P;
}

Polytope newton_polytope(const LaurentPoly& a) {
  if (a.is_zero()) throw DomainError("Newton polytope of the zero polynomial");
  return convex_hull(a.support());
}

std::vector<ExponentVector> interior_integral_points(const Polytope& P) {
  std::vector<ExponentVector> out;
  if (!P.full_dimensional() || P.vertices.empty()) return out;
  const int d = P.dim;
  ExponentVector lo = P.vertices.front(), hi = P.vertices.front();
  for (const auto& v : P.vertices)
    for (int i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  // Odometer over the box, last coordinate fastest: lexicographic order.
  ExponentVector p = lo;
  while (true) {
    if (P.strictly_inside(p)) out.push_back(p);
    int i = d - 1;
    while (i >= 0 && p[i] == hi[i]) {
      p[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

Verdict origin_only_interior(const LaurentPoly& a) {
  Verdict v;
  v.polytope = newton_polytope(a);
  for (const auto& p : interior_integral_points(v.polytope)) {
    if (p.is_zero()) v.origin_interior = true;
    else v.witnesses.push_back(p);
  }
  v.pass = v.origin_interior && v.witnesses.empty();
  return v;
}

nlohmann::json to_json(const ExponentVector& e) {
  auto j = nlohmann::json::array();
  for (int x : e.entries()) j.push_back(x);
  return j;
}

nlohmann::json to_json(const Polytope& P) {
  auto verts = nlohmann::json::array();
  for (const auto& v : P.vertices) verts.push_back(to_json(v));
  auto facets = nlohmann::json::array();
  for (const auto& f : P.facets) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  return {{"dim", P.dim}, {"affine_dim", P.affine_dim}, {"vertices", verts}, {"facets", facets}};
}

nlohmann::json to_json(const Verdict& v) {
  auto w = nlohmann::json::array();
  for (const auto& p : v.witnesses) w.push_back(to_json(p));
  return {{"verdict", v.pass ? "pass" : "fail"},
          {"origin_interior", v.origin_interior},
          {"witnesses", w},
          {"polytope", to_json(v.polytope)}};
}

}  // namespace sporadic::polytope
