#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sporadic/catalog.hpp"
#include "sporadic/integer.hpp"
#include "sporadic/laurent.hpp"

namespace sporadic::congruence {

using sporadic::base_p_digits;
using sporadic::vp;

// Prefix generator behind a checker. The checkers never look at how terms are
// produced; they only compare exact residues.
class SequenceSource {
 public:
  using Generator = std::function<std::vector<Integer>(unsigned N)>;

  SequenceSource(std::string label, Generator generate);

  static SequenceSource recurrence(const catalog::RecurrenceSpec& spec, std::string label);
  // Catalog entry evaluated through its recurrence.
  static SequenceSource entry(std::string_view name);
  static SequenceSource binomial(std::string_view name);
  // CT(a^n), pruned; capped by the term cap.
  static SequenceSource constant_term(const LaurentPoly& a, std::string label);
  static SequenceSource from_function(std::string label, std::function<Integer(unsigned)> u);

  const std::string& label() const { return label_; }
  // u_0..u_N. Cached, regenerated only when a longer prefix is requested.
  const std::vector<Integer>& prefix(unsigned N);

 private:
  std::string label_;
  Generator generate_;
  std::vector<Integer> cache_;
};

enum class Family { Gauss, Lucas, D3, Valuation, Jacobsthal, LowerBinom, ShiftedGauss };
std::string_view family_name(Family f);

struct Counterexample {
  // Grid coordinates in checking order, e.g. {{"p",3},{"k",1},{"n",1}}.
  std::vector<std::pair<std::string, long>> at;
  Integer lhs;
  Integer rhs;
  Integer modulus;
};

struct CongruenceReport {
  Family family = Family::Gauss;
  int order = 0;  // r for GAUSS, k for SHIFTED_GAUSS
  std::string sequence;
  nlohmann::json tested_range;
  bool pass = true;
  bool exploratory = false;
  std::size_t checks = 0;
  std::optional<Counterexample> counterexample;
};

nlohmann::json to_json(const CongruenceReport& r);

// u_{np^k} = u_{np^{k-1}} mod p^{rk}. Primes below r+1 or composite moduli throw DomainError.
CongruenceReport gauss_check(SequenceSource& u, int r, const std::vector<unsigned long>& primes, unsigned k_max,
                             unsigned n_max);

// u_n = prod u_{n_i} mod p over base-p digits, with u_0 := 1.
CongruenceReport lucas_check(SequenceSource& u, unsigned long p, unsigned n_max);

// u_{n+mp^s} u_{n/p} = u_n u_{(n+mp^s)/p} mod p^s for 0 <= s <= s_max, 0 <= m <= m_max, 0 <= n <= n_max.
CongruenceReport d3_check(SequenceSource& u, unsigned long p, unsigned s_max, unsigned m_max, unsigned n_max);

// v_p(u_n) >= #{digits of n in Z_p}, Z_p = {i < p : p | u_i}. A zero term throws DomainError.
CongruenceReport valuation_bound_check(SequenceSource& u, unsigned long p, unsigned n_max);

// C(pn, pm) / C(n, m) = 1 mod p^{v_p(nm(n-m)) + 3 - [p = 3]}. p = 2 throws DomainError.
bool jacobsthal_check(long n, long m, unsigned long p);

// p^{v_p(n) - v_p(m)} | C(n, m); requires n >= m >= 1 and v_p(n) >= v_p(m).
bool lower_binom_check(long n, long m, unsigned long p);

// Both lemmas over 0 <= m <= n <= n_max (lower_binom where its precondition holds).
CongruenceReport jacobsthal_grid(long n_max, const std::vector<unsigned long>& primes);
CongruenceReport lower_binom_grid(long n_max, const std::vector<unsigned long>& primes);

// CT(L^{p^r n} x^{p^r v}) = CT(L^{p^{r-1} n} x^{p^{r-1} v}) mod p^{kr} for 1 <= r <= r_max.
// Always marked exploratory.
CongruenceReport shifted_gauss_check(const LaurentPoly& lambda, const ExponentVector& shift, unsigned n,
                                     const std::vector<unsigned long>& primes, unsigned r_max, int k);

}  // namespace sporadic::congruence
