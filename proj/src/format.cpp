#include "sporadic/format.hpp"

#include <cctype>
#include <cstdlib>

#include "sporadic/errors.hpp"

namespace sporadic {

namespace {

constexpr const char* kVarNames[kMaxDim] = {"x", "y", "z", "w"};

// Recursive-descent parser over the grammar documented in the header.
class Parser {
 public:
  Parser(std::string_view text, int dim, const ParseOptions& options)
      : text_(text), dim_(dim), options_(options) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (accept('*')) acc = poly_mul(acc, unary());
    return acc;
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    const long e = exponent();
    if (e >= 0) return poly_pow(base, static_cast<unsigned>(e));
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto [mono, coeff] = base.terms().front();
    if (coeff != 1 && coeff != -1) fail("negative power of a monomial with coefficient other than +-1");
    ExponentVector scaled(dim_);
    for (int i = 0; i < dim_; ++i) scaled[i] = static_cast<int>(mono[i] * e);
    const bool odd = (-e) % 2 == 1;
    return LaurentPoly::monomial(scaled, (coeff == -1 && odd) ? Integer(-1) : Integer(1));
  }

  long exponent() {
    skip_ws();
    const bool paren = accept('(');
    skip_ws();
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long v = std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    if (v > options_.max_exponent) fail("exponent magnitude exceeds bound " + std::to_string(options_.max_exponent));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -v : v;
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(dim_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    int index = -1;
    switch (c) {
      case 'x': index = 0; break;
      case 'y': index = 1; break;
      case 'z': index = 2; break;
      case 'w': index = 3; break;
      default: fail("unexpected character '" + std::string(1, c) + "'");
    }
    const std::size_t var_pos = pos_;
    ++pos_;
    // x1..x4 aliases
    if (c == 'x' && pos_ < text_.size() && text_[pos_] >= '1' && text_[pos_] <= '4') {
      index = text_[pos_] - '1';
      ++pos_;
    }
    if (index >= dim_) {
      pos_ = var_pos;
      fail("variable outside dimension " + std::to_string(dim_));
    }
    return LaurentPoly::variable(dim_, index);
  }

  std::string_view text_;
  int dim_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, int dim, const ParseOptions& options) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("dimension must be in [1, 4]");
  return Parser(text, dim, options).parse();
}

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < e.dim(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json ev = nlohmann::json::array();
    for (int v : e.entries()) ev.push_back(v);
    terms.push_back({{"e", ev}, {"c", c.get_str()}});
  }
  return {{"dim", p.dim()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    LaurentPoly p(dim);
    for (const auto& t : j.at("terms")) {
      const auto entries = t.at("e").get<std::vector<int>>();
      if (static_cast<int>(entries.size()) != dim) throw DimensionMismatch("term exponent length != dim");
      p.add_term(ExponentVector(std::span<const int>(entries)), Integer(t.at("c").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed decimal coefficient", 0);
  }
}

nlohmann::json integers_to_json(const std::vector<Integer>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

}  // namespace sporadic
