#include <string>

#include "sporadic/catalog.hpp"
#include "sporadic/errors.hpp"

namespace sporadic::catalog {

RecurrenceSpec::RecurrenceSpec(Family f, std::vector<long> p) : family(f), params(std::move(p)) {
  const std::size_t want = (f == Family::Cooper3) ? 4 : 3;
  if (params.size() != want)
    throw DomainError(std::string(family_name(f)) + " takes " + std::to_string(want) + " parameters");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Zagier2: return "ZAGIER2";
    case Family::AlmkvistZudilin3: return "AZ3";
    case Family::Cooper3: return "COOPER3";
  }
  return "?";
}

std::vector<Integer> recurrence_terms(const RecurrenceSpec& spec, unsigned N) {
  std::vector<Integer> u;
  u.reserve(N + 1);
  u.emplace_back(1);
  const auto& p = spec.params;
  Integer prev = 0;  // u_{n-1}
  for (unsigned step = 0; step < N; ++step) {
    const Integer n = step;
    const Integer n1 = n + 1;
    Integer numerator;
    Integer divisor;
    switch (spec.family) {
      case Family::Zagier2:
        numerator = (p[0] * n * n + p[0] * n + p[2]) * u[step] - p[1] * n * n * prev;
        divisor = n1 * n1;
        break;
      case Family::AlmkvistZudilin3:
        numerator = (2 * n + 1) * (p[0] * n * n + p[0] * n + p[1]) * u[step] - p[2] * n * n * n * prev;
        divisor = n1 * n1 * n1;
        break;
      case Family::Cooper3:
        numerator = (2 * n + 1) * (p[0] * n * n + p[0] * n + p[1]) * u[step] - n * (p[2] * n * n + p[3]) * prev;
        divisor = n1 * n1 * n1;
        break;
    }
    if (!mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t()))
      throw NonIntegral(static_cast<long>(step), numerator, divisor);
    Integer next;
    mpz_divexact(next.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
    prev = u[step];
    u.push_back(std::move(next));
  }
  return u;
}

}  // namespace sporadic::catalog
