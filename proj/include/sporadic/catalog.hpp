#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sporadic/integer.hpp"
#include "sporadic/laurent.hpp"

namespace sporadic::catalog {

// ZAGIER2:  (n+1)^2 u_{n+1} = (A n^2 + A n + lambda) u_n - B n^2 u_{n-1}          params (A, B, lambda)
// AZ3:      (n+1)^3 u_{n+1} = (2n+1)(a n^2 + a n + b) u_n - c n^3 u_{n-1}          params (a, b, c)
// COOPER3:  (n+1)^3 u_{n+1} = (2n+1)(a n^2 + a n + b) u_n - n (c n^2 + d) u_{n-1}  params (a, b, c, d)
// All with u_{-1} = 0, u_0 = 1.
enum class Family { Zagier2, AlmkvistZudilin3, Cooper3 };

struct RecurrenceSpec {
  Family family;
  std::vector<long> params;

  // Throws DomainError when the tuple arity does not match the family.
  RecurrenceSpec(Family f, std::vector<long> p);
};

std::string_view family_name(Family f);

// Exact u_0..u_N. Throws NonIntegral at the first step whose division fails.
std::vector<Integer> recurrence_terms(const RecurrenceSpec& spec, unsigned N);

enum class Status { Proven, Empirical };
std::string_view status_name(Status s);

// Whether a Gauss order is established in the literature or only observed.
enum class OrderStatus { Proven, Expected };
std::string_view order_status_name(OrderStatus s);

struct CtRepresentation {
  std::string label;
  std::string text;  // expression in the parse_poly grammar
  LaurentPoly poly;
  Status status;
};

struct SequenceEntry {
  std::string name{};
  std::string display{};
  std::string other_names{};
  RecurrenceSpec recurrence;
  // Binomial-sum formula ids; the first is the one binomial_terms evaluates.
  std::vector<std::string> binomial_formulas{};
  std::vector<CtRepresentation> ct_polys{};
  // ct_polys entry whose Newton polytope carries the interior-point claim.
  std::size_t polytope_index = 0;
  int expected_gauss_order = 1;
  OrderStatus gauss_order_status = OrderStatus::Expected;
  bool polytope_origin_only = true;
  // Non-origin interior points of the polytope when polytope_origin_only is false.
  std::vector<ExponentVector> expected_witnesses{};
  Status verified_status = Status::Proven;
  // One of the 15 sporadic sequences (false for apery_a, apery_b, L3).
  bool sporadic = true;

  const LaurentPoly& polytope_poly() const { return ct_polys.at(polytope_index).poly; }
  int ct_dim() const { return ct_polys.front().poly.dim(); }
};

// All 18 entries in a fixed order: the 15 sporadic sequences, then apery_a, apery_b, L3.
const std::vector<SequenceEntry>& entries();
const SequenceEntry& get(std::string_view name);
std::vector<std::string> list();

// u_0..u_N of the entry's primary binomial formula.
std::vector<Integer> binomial_terms(std::string_view name, unsigned N);
// u_0..u_N of a specific registered formula id.
std::vector<Integer> binomial_formula_terms(std::string_view formula_id, unsigned N);
std::vector<std::string> formula_ids();

// Power-free multinomial-sum formulas over S(n), T(n), U(n); name is B, F or delta.
Integer prop12_term(std::string_view name, unsigned n);
std::vector<Integer> prop12_terms(std::string_view name, unsigned N);
bool has_prop12(std::string_view name);

using sporadic::multinomial;

nlohmann::json entry_to_json(const SequenceEntry& e);
nlohmann::json export_json();
// FNV-1a 64 over the dumped export, as 16 hex digits.
std::string checksum();

}  // namespace sporadic::catalog
