#pragma once

#include <vector>

#include <json.hpp>

#include "sporadic/laurent.hpp"

namespace sporadic::polytope {

// normal . p <= offset, with a primitive normal.
struct Facet {
  std::vector<long> normal;
  long offset = 0;

  bool operator==(const Facet&) const = default;
  auto operator<=>(const Facet&) const = default;
};

struct Polytope {
  int dim = 0;
  // Dimension of the affine hull of the support; facets are only produced when it equals dim.
  int affine_dim = 0;
  std::vector<ExponentVector> vertices;  // sorted lexicographically
  std::vector<Facet> facets;             // sorted, deduplicated
  // Lower-dimensional case: coordinates onto which the hull projects injectively,
  // and the facets of that projection.
  std::vector<int> chart;
  std::vector<Facet> chart_facets;

  bool full_dimensional() const { return affine_dim == dim; }
  bool contains(const ExponentVector& p) const;
  bool strictly_inside(const ExponentVector& p) const;
};

// Convex hull of a point set (all of one dimension, 1..4). Throws DomainError when empty.
Polytope convex_hull(std::vector<ExponentVector> points);

// Hull of the support. Throws DomainError for the zero polynomial.
Polytope newton_polytope(const LaurentPoly& a);

// Integer points strictly inside P, lexicographic. Empty for lower-dimensional P.
std::vector<ExponentVector> interior_integral_points(const Polytope& P);

struct Verdict {
  bool pass = false;
  bool origin_interior = false;
  // Interior integral points other than the origin.
  std::vector<ExponentVector> witnesses;
  Polytope polytope;
};

// pass iff the origin is the unique interior integral point of the Newton polytope.
Verdict origin_only_interior(const LaurentPoly& a);

nlohmann::json to_json(const Polytope& P);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ExponentVector& e);

}  // namespace sporadic::polytope
