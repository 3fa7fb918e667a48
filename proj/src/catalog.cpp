#include "sporadic/catalog.hpp"

#include <cstdint>
#include <cstdio>

#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"

namespace sporadic::catalog {

std::string_view status_name(Status s) { return s == Status::Proven ? "PROVEN" : "EMPIRICAL"; }

std::string_view order_status_name(OrderStatus s) { return s == OrderStatus::Proven ? "PROVEN" : "EXPECTED"; }

namespace {

CtRepresentation rep(std::string label, std::string text, int dim, Status status = Status::Proven) {
  LaurentPoly p = parse_poly(text, dim);
  return CtRepresentation{std::move(label), std::move(text), std::move(p), status};
}

struct Builder {
  SequenceEntry e;

  Builder(std::string name, std::string display, Family f, std::vector<long> params)
      : e{.name = std::move(name), .display = std::move(display), .recurrence = RecurrenceSpec(f, std::move(params))} {}

  Builder& also(std::string other) {
    e.other_names = std::move(other);
    return *this;
  }
  Builder& formula(std::string id) {
    e.binomial_formulas.push_back(std::move(id));
    return *this;
  }
  Builder& ct(CtRepresentation r) {
    e.ct_polys.push_back(std::move(r));
    return *this;
  }
  Builder& gauss(int order, OrderStatus status) {
    e.expected_gauss_order = order;
    e.gauss_order_status = status;
    return *this;
  }
  Builder& polytope(std::size_t index, bool origin_only) {
    e.polytope_index = index;
    e.polytope_origin_only = origin_only;
    return *this;
  }
  Builder& witnesses(std::vector<ExponentVector> w) {
    e.expected_witnesses = std::move(w);
    return *this;
  }
  Builder& non_sporadic() {
    e.sporadic = false;
    return *this;
  }
  SequenceEntry build() { return std::move(e); }
};

std::vector<SequenceEntry> build_catalog() {
  using F = Family;
  using OS = OrderStatus;
  std::vector<SequenceEntry> v;

  // Zagier's second-order sporadic sequences.
  v.push_back(Builder("A", "A", F::Zagier2, {7, -8, 2})
                  .also("Franel numbers")
                  .formula("A:franel")
                  .ct(rep("prop", "(x*y)^-1*(x+1)*(y+1)*(x+y)", 2))
                  .gauss(3, OS::Proven)
                  .build());
  v.push_back(Builder("B", "B", F::Zagier2, {9, 27, 3})
                  .formula("B:zagier")
                  .ct(rep("prop", "(-x*y)^-1*(x+y+1)*(x^2+y^2-x*y-x-y+1)", 2))
                  .ct(rep("zagier-3var", "(-x*y*z)^-1*(x^3+y^3+z^3-3*x*y*z)", 3))
                  .ct(rep("zagier-2var", "(-x*y)^-1*(x^3+y^3+1-3*x*y)", 2))
                  .gauss(2, OS::Proven)
                  .build());
  v.push_back(Builder("C", "C", F::Zagier2, {10, 9, 3})
                  .formula("C:zagier")
                  .ct(rep("prop", "(x*y)^-1*(x+y+1)*(x*y+x+y)", 2))
                  .ct(rep("P3", "(x+y+z)*(x^-1+y^-1+z^-1)", 3))
                  .gauss(2, OS::Expected)
                  .build());
  v.push_back(Builder("D", "D", F::Zagier2, {11, -1, 3})
                  .also("Apery numbers b_n")
                  .formula("D:apery")
                  .ct(rep("prop", "(x*y)^-1*(x+1)*(y+1)*(x+y+1)", 2))
                  .gauss(3, OS::Proven)
                  .build());
  v.push_back(Builder("E", "E", F::Zagier2, {12, 32, 4})
                  .formula("E:zagier")
                  .formula("E:power_free")
                  .ct(rep("prop", "(-x*y)^-1*(x*y+x+y-1)*(x*y-x-y-1)", 2))
                  .gauss(2, OS::Expected)
                  .build());
  // P(x, y) = Q(x^2, y^2); the interior-point claim is made for Q.
  v.push_back(Builder("F", "F", F::Zagier2, {17, 72, 6})
                  .formula("F:zagier")
                  .ct(rep("prop", "(x*y)^-2*(-x+y+1)*(x-y+1)*(x+y-1)*(x+y+1)*(x^2+y^2+1)", 2))
                  .ct(rep("Q", "(-x*y)^-1*(x+y+1)*(x^2+y^2-2*x*y-2*x-2*y+1)", 2))
                  .ct(rep("zagier", "(-x*y)^-1*(x^2*y+y^2*x+x^2+y^2+x+y-6*x*y)", 2))
                  .gauss(2, OS::Expected)
                  .polytope(1, true)
                  .build());

  // Almkvist-Zudilin third-order sporadic sequences.
  v.push_back(Builder("delta", "(delta)", F::AlmkvistZudilin3, {7, 3, 81})
                  .also("Almkvist-Zudilin numbers")
                  .formula("delta:az")
                  .ct(rep("prop-1", "(x*y*z)^-1*(y-z+1)*(-x+y+z)*(x+z+1)*(x+y-1)", 3))
                  .ct(rep("prop-2", "(x*y*z)^-1*(x*y+y*z+z*x)*(x^2+y^2+z^2-x*y-y*z-z*x+x+y+z+1)", 3))
                  .gauss(3, OS::Expected)
                  .build());
  v.push_back(Builder("eta", "(eta)", F::AlmkvistZudilin3, {11, 5, 125})
                  .formula("eta:az")
                  .ct(rep("prop", "(x*y*z)^-1*(z*x+x*y-y*z-x-1)*(x*y+y*z-z*x-y-1)*(y*z+z*x-x*y-z-1)", 3))
                  .gauss(3, OS::Expected)
                  .polytope(0, false)
                  .witnesses({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}})
                  .build());
  v.push_back(Builder("alpha", "(alpha)", F::AlmkvistZudilin3, {10, 4, 64})
                  .also("Domb numbers")
                  .formula("alpha:domb")
                  .ct(rep("prop-1", "(x*y*z)^-1*(-x-y-z+1)*(x-y)*(x-y+z+1)*(x+y-z+1)", 3))
                  .ct(rep("prop-2", "(x*y*z)^-1*(x+y+z+1)*(x*y*z+x*y+y*z+z*x)", 3))
                  .ct(rep("P4", "(x+y+z+w)*(x^-1+y^-1+z^-1+w^-1)", 4))
                  .gauss(3, OS::Proven)
                  .build());
  v.push_back(Builder("epsilon", "(epsilon)", F::AlmkvistZudilin3, {12, 4, 16})
                  .formula("epsilon:az")
                  .ct(rep("prop", "(x*y*z)^-1*(x+1)*(y+1)*(z+1)*(x+y+z+1)", 3))
                  .gauss(3, OS::Proven)
                  .build());
  v.push_back(Builder("zeta", "(zeta)", F::AlmkvistZudilin3, {9, 3, -27})
                  .formula("zeta:az")
                  .ct(rep("prop", "(x*y*z)^-1*(x+y+z)*(x+y+z+x*y+y*z+z*x+x*y*z)", 3))
                  .gauss(3, OS::Proven)
                  .build());
  v.push_back(Builder("gamma", "(gamma)", F::AlmkvistZudilin3, {17, 5, 1})
                  .also("Apery numbers a_n")
                  .formula("gamma:apery")
                  .ct(rep("prop", "(x*y*z)^-1*(y+z)*(x+1)*(x+y+1)*(x+y+z)", 3))
                  .ct(rep("symmetric",
                          "(x*y*z)^-1*(x+y+z+1)*(x^2*y+x*y^2+y^2*z+y*z^2+z^2*x+z*x^2+x*y+y*z+z*x+2*x*y*z)", 3,
                          Status::Empirical))
                  .gauss(3, OS::Proven)
                  .build());

  // Cooper's sequences.
  v.push_back(Builder("s7", "s7", F::Cooper3, {13, 4, -27, 3})
                  .formula("s7:zudilin")
                  .ct(rep("prop", "(x*y*z)^-1*(x-1)*(y+1)*(x+z)*(y-x-z+1)", 3))
                  .gauss(3, OS::Proven)
                  .build());
  v.push_back(Builder("s10", "s10", F::Cooper3, {6, 2, -64, 4})
                  .also("Yang-Zudilin numbers")
                  .formula("s10:yang_zudilin")
                  .ct(rep("prop", "(x*y*z)^-1*(x+1)*(y+1)*(z+1)*(x*y*z+1)", 3))
                  .gauss(3, OS::Proven)
                  .build());
  // The printed (xyz)^-1 for the symmetric candidate gives (-1)^n s18_n; -xyz matches.
  v.push_back(Builder("s18", "s18", F::Cooper3, {14, 6, 192, -12})
                  .formula("s18:zudilin")
                  .ct(rep("prop", "(-x*y*z)^-1*(x^2+y^2+z^2-x*y-y*z-z*x-x+y-z)*(x^2+y^2+z^2+x*y+y*z-z*x+x+y+z)", 3))
                  .ct(rep("symmetric", "(-x*y*z)^-1*(x*y+y*z+z*x+x+y+z)*(x^2+y^2+z^2-x*y-y*z-z*x-x-y-z+1)", 3,
                          Status::Empirical))
                  .gauss(2, OS::Expected)
                  .build());

  // Apery's own sequences and the third-order Legendrian one.
  v.push_back(Builder("apery_a", "a_n", F::AlmkvistZudilin3, {17, 5, 1})
                  .also("Apery numbers for zeta(3)")
                  .formula("apery_a:apery")
                  .ct(rep("straub", "(x*y*z)^-1*(x+y)*(z+1)*(x+y+z)*(y+z+1)", 3))
                  .gauss(3, OS::Proven)
                  .non_sporadic()
                  .build());
  v.push_back(Builder("apery_b", "b_n", F::Zagier2, {11, -1, 3})
                  .also("Apery numbers for zeta(2)")
                  .formula("apery_b:apery")
                  .ct(rep("mellit-vlasenko", "(x*y)^-1*(1+x)*(1+y)*(1+x+y)", 2))
                  .gauss(3, OS::Proven)
                  .non_sporadic()
                  .build());
  v.push_back(Builder("L3", "L3", F::AlmkvistZudilin3, {16, 8, 256})
                  .also("third-order Legendrian sequence")
                  .formula("L3:legendre")
                  .ct(rep("legendrian", "(x*y*z)^-1*(-x+y+z+1)*(x-y+z+1)*(x+y-z+1)*(x+y+z-1)", 3, Status::Empirical))
                  .gauss(3, OS::Expected)
                  .non_sporadic()
                  .build());
  return v;
}

}  // namespace

const std::vector<SequenceEntry>& entries() {
  static const std::vector<SequenceEntry> catalog = build_catalog();
  return catalog;
}

const SequenceEntry& get(std::string_view name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw UnknownName(std::string(name));
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

nlohmann::json entry_to_json(const SequenceEntry& e) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& r : e.ct_polys) {
    polys.push_back({{"label", r.label},
                     {"text", r.text},
                     {"status", status_name(r.status)},
                     {"poly", poly_to_json(r.poly)}});
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : e.expected_witnesses) {
    nlohmann::json v = nlohmann::json::array();
    for (int x : w.entries()) v.push_back(x);
    witnesses.push_back(v);
  }
  return {
      {"name", e.name},
      {"display", e.display},
      {"other_names", e.other_names},
      {"recurrence", {{"family", family_name(e.recurrence.family)}, {"params", e.recurrence.params}}},
      {"binomial_formulas", e.binomial_formulas},
      {"ct_polys", polys},
      {"polytope_index", e.polytope_index},
      {"expected_gauss_order", e.expected_gauss_order},
      {"gauss_order_status", order_status_name(e.gauss_order_status)},
      {"polytope_origin_only", e.polytope_origin_only},
      {"expected_witnesses", witnesses},
      {"verified_status", status_name(e.verified_status)},
      {"sporadic", e.sporadic},
  };
}

nlohmann::json export_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries()) arr.push_back(entry_to_json(e));
  return {{"entries", arr}};
}

std::string checksum() {
  const std::string text = export_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sporadic::catalog
