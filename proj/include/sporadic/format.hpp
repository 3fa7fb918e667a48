#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sporadic/laurent.hpp"

namespace sporadic {

struct ParseOptions {
  // Largest |exponent| accepted after a '^'.
  int max_exponent = 4096;
};

// Grammar: integers, variables x y z w (or x1..x4), + - * ^, parentheses,
// signed integer exponents (x^-1, x^(-1)). Negative powers are only allowed on
// monomials. Whitespace is ignored.
LaurentPoly parse_poly(std::string_view text, int dim, const ParseOptions& options = {});

// Canonical text, e.g. "x^-1*y + 2 - 3*x^2". parse_poly(format_poly(p)) == p.
std::string format_poly(const LaurentPoly& p);

// {"dim": d, "terms": [{"e": [...], "c": "<decimal>"}, ...]} in canonical order.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json integers_to_json(const std::vector<Integer>& values);

}  // namespace sporadic
