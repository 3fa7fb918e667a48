#include "sporadic/congruence.hpp"

#include <algorithm>
#include <string>

#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"

namespace sporadic::congruence {

SequenceSource::SequenceSource(std::string label, Generator generate)
    : label_(std::move(label)), generate_(std::move(generate)) {}

SequenceSource SequenceSource::recurrence(const catalog::RecurrenceSpec& spec, std::string label) {
  return SequenceSource(std::move(label), [spec](unsigned N) { return catalog::recurrence_terms(spec, N); });
}

SequenceSource SequenceSource::entry(std::string_view name) {
  const auto& e = catalog::get(name);
  return recurrence(e.recurrence, e.name);
}

SequenceSource SequenceSource::binomial(std::string_view name) {
  const std::string n(catalog::get(name).name);
  return SequenceSource(n + ":binomial", [n](unsigned N) { return catalog::binomial_terms(n, N); });
}

SequenceSource SequenceSource::constant_term(const LaurentPoly& a, std::string label) {
  return SequenceSource(std::move(label), [a](unsigned N) { return ct_sequence(a, N, CtOptions{.prune = true}); });
}

SequenceSource SequenceSource::from_function(std::string label, std::function<Integer(unsigned)> u) {
  return SequenceSource(std::move(label), [u = std::move(u)](unsigned N) {
    std::vector<Integer> out;
    out.reserve(N + 1);
    for (unsigned n = 0; n <= N; ++n) out.push_back(u(n));
    return out;
  });
}

const std::vector<Integer>& SequenceSource::prefix(unsigned N) {
  if (cache_.size() < static_cast<std::size_t>(N) + 1) {
    cache_ = generate_(N);
    if (cache_.size() < static_cast<std::size_t>(N) + 1) throw Error("sequence source returned a short prefix");
  }
  return cache_;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Gauss: return "GAUSS";
    case Family::Lucas: return "LUCAS";
    case Family::D3: return "D3";
    case Family::Valuation: return "VALUATION";
    case Family::Jacobsthal: return "JACOBSTHAL";
    case Family::LowerBinom: return "LOWER_BINOM";
    case Family::ShiftedGauss: return "SHIFTED_GAUSS";
  }
  return "?";
}

nlohmann::json to_json(const CongruenceReport& r) {
  nlohmann::json j = {{"family", family_name(r.family)},
                      {"sequence", r.sequence},
                      {"tested_range", r.tested_range},
                      {"checks", r.checks},
                      {"verdict", r.pass ? "pass" : "fail"},
                      {"exploratory", r.exploratory}};
  if (r.family == Family::Gauss || r.family == Family::ShiftedGauss) j["order"] = r.order;
  if (r.counterexample) {
    nlohmann::json at = nlohmann::json::object();
    for (const auto& [key, v] : r.counterexample->at) at[key] = v;
    j["counterexample"] = {{"at", at},
                           {"lhs", to_decimal(r.counterexample->lhs)},
                           {"rhs", to_decimal(r.counterexample->rhs)},
                           {"modulus", to_decimal(r.counterexample->modulus)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

unsigned long upow(unsigned long p, unsigned e) {
  unsigned long r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

// Records the first failure with both sides unreduced; later ones are ignored so the
// report is grid-order deterministic.
void record(CongruenceReport& rep, std::vector<std::pair<std::string, long>> at, const Integer& lhs,
            const Integer& rhs, const Integer& modulus) {
  ++rep.checks;
  if (mod_floor(lhs - rhs, modulus) == 0 || rep.counterexample) return;
  rep.pass = false;
  rep.counterexample = Counterexample{std::move(at), lhs, rhs, modulus};
}

}  // namespace

CongruenceReport gauss_check(SequenceSource& u, int r, const std::vector<unsigned long>& primes, unsigned k_max,
                             unsigned n_max) {
  if (r < 1) throw DomainError("Gauss order must be at least 1");
  unsigned long top = 0;
  for (unsigned long p : primes) {
    require_prime(p);
    if (p < static_cast<unsigned long>(r) + 1)
      throw DomainError("Gauss congruences of order " + std::to_string(r) + " are only defined for p >= " +
                        std::to_string(r + 1) + ", got p = " + std::to_string(p));
    top = std::max(top, n_max * upow(p, k_max));
  }
  CongruenceReport rep;
  rep.family = Family::Gauss;
  rep.order = r;
  rep.sequence = u.label();
  rep.tested_range = {{"p", primes}, {"k_max", k_max}, {"n_max", n_max}};
  if (primes.empty() || n_max == 0 || k_max == 0) return rep;
  const auto& t = u.prefix(static_cast<unsigned>(top));
  for (unsigned long p : primes)
    for (unsigned k = 1; k <= k_max; ++k) {
      const Integer modulus = ipow(static_cast<long>(p), static_cast<unsigned long>(r) * k);
      for (unsigned n = 1; n <= n_max; ++n) {
        const unsigned long hi = n * upow(p, k), lo = n * upow(p, k - 1);
        record(rep, {{"p", static_cast<long>(p)}, {"k", k}, {"n", n}}, t[hi], t[lo], modulus);
      }
    }
  return rep;
}

CongruenceReport lucas_check(SequenceSource& u, unsigned long p, unsigned n_max) {
  require_prime(p);
  CongruenceReport rep;
  rep.family = Family::Lucas;
  rep.sequence = u.label();
  rep.tested_range = {{"p", p}, {"n_max", n_max}};
  const auto& t = u.prefix(n_max);
  const Integer modulus(static_cast<unsigned long>(p));
  for (unsigned n = 0; n <= n_max; ++n) {
    Integer product = 1;
    for (unsigned long d : base_p_digits(n, p))
      if (d != 0) product *= t[d];
    record(rep, {{"n", n}}, n == 0 ? Integer(1) : t[n], product, modulus);
  }
  return rep;
}

CongruenceReport d3_check(SequenceSource& u, unsigned long p, unsigned s_max, unsigned m_max, unsigned n_max) {
  require_prime(p);
  CongruenceReport rep;
  rep.family = Family::D3;
  rep.sequence = u.label();
  rep.tested_range = {{"p", p}, {"s_max", s_max}, {"m_max", m_max}, {"n_max", n_max}};
  const auto& t = u.prefix(static_cast<unsigned>(n_max + m_max * upow(p, s_max)));
  auto at = [&](unsigned long i) -> Integer { return i == 0 ? Integer(1) : t[i]; };
  for (unsigned s = 0; s <= s_max; ++s) {
    const Integer modulus = ipow(static_cast<long>(p), s);
    for (unsigned m = 0; m <= m_max; ++m)
      for (unsigned n = 0; n <= n_max; ++n) {
        const unsigned long big = n + m * upow(p, s);
        record(rep, {{"s", s}, {"m", m}, {"n", n}}, at(big) * at(n / p), at(n) * at(big / p), modulus);
      }
  }
  return rep;
}

CongruenceReport valuation_bound_check(SequenceSource& u, unsigned long p, unsigned n_max) {
  require_prime(p);
  CongruenceReport rep;
  rep.family = Family::Valuation;
  rep.sequence = u.label();
  const auto& t = u.prefix(std::max<unsigned>(n_max, static_cast<unsigned>(p - 1)));
  std::vector<bool> in_z(p, false);
  nlohmann::json z = nlohmann::json::array();
  for (unsigned long i = 0; i < p; ++i)
    if (mpz_divisible_ui_p(t[i].get_mpz_t(), p)) {
      in_z[i] = true;
      z.push_back(i);
    }
  rep.tested_range = {{"p", p}, {"n_max", n_max}, {"Z_p", z}};
  const Integer pz(static_cast<unsigned long>(p));
  for (unsigned n = 0; n <= n_max; ++n) {
    if (t[n] == 0) throw DomainError("u_" + std::to_string(n) + " = 0 has no valuation");
    long alpha = 0;
    for (unsigned long d : base_p_digits(n, p)) alpha += in_z[d] ? 1 : 0;
    ++rep.checks;
    const long v = static_cast<long>(vp(t[n], p));
    if (v < alpha && !rep.counterexample) {
      rep.pass = false;
      rep.counterexample = Counterexample{{{"n", n}}, Integer(v), Integer(alpha), pz};
    }
  }
  return rep;
}

bool jacobsthal_check(long n, long m, unsigned long p) {
  require_prime(p);
  if (p == 2) throw DomainError("the Jacobsthal congruence is stated for odd primes");
  if (m < 0 || n < m) throw DomainError("need n >= m >= 0");
  if (m == 0 || n == m) return true;
  const long pl = static_cast<long>(p);
  const Integer small = binomial(n, m);
  const Integer diff = binomial(pl * n, pl * m) - small;
  if (diff == 0) return true;
  const long target = static_cast<long>(vp(Integer(n) * m * (n - m), p)) + 3 - (p == 3 ? 1 : 0);
  return static_cast<long>(vp(diff, p)) - static_cast<long>(vp(small, p)) >= target;
}

bool lower_binom_check(long n, long m, unsigned long p) {
  require_prime(p);
  if (m < 1 || n < m) throw DomainError("need n >= m >= 1");
  const long vn = static_cast<long>(vp(Integer(n), p)), vm = static_cast<long>(vp(Integer(m), p));
  if (vn < vm) throw DomainError("need v_p(n) >= v_p(m)");
  const Integer c = binomial(n, m);
  return mpz_divisible_p(c.get_mpz_t(), ipow(static_cast<long>(p), static_cast<unsigned long>(vn - vm)).get_mpz_t());
}

namespace {

template <class Check>
CongruenceReport lemma_grid(Family f, long n_max, const std::vector<unsigned long>& primes, long m_min, Check check) {
  CongruenceReport rep;
  rep.family = f;
  rep.sequence = "binomial";
  rep.tested_range = {{"p", primes}, {"n_max", n_max}};
  for (unsigned long p : primes)
    for (long n = 0; n <= n_max; ++n)
      for (long m = m_min; m <= n; ++m) {
        const int outcome = check(n, m, p);  // -1 skipped, 0 fail, 1 pass
        if (outcome < 0) continue;
        ++rep.checks;
        if (outcome == 0 && !rep.counterexample) {
          rep.pass = false;
          rep.counterexample = Counterexample{{{"p", static_cast<long>(p)}, {"n", n}, {"m", m}}, 0, 0, 0};
        }
      }
  return rep;
}

}  // namespace

CongruenceReport jacobsthal_grid(long n_max, const std::vector<unsigned long>& primes) {
  return lemma_grid(Family::Jacobsthal, n_max, primes, 0,
                    [](long n, long m, unsigned long p) { return jacobsthal_check(n, m, p) ? 1 : 0; });
}

CongruenceReport lower_binom_grid(long n_max, const std::vector<unsigned long>& primes) {
  return lemma_grid(Family::LowerBinom, n_max, primes, 1, [](long n, long m, unsigned long p) {
    if (vp(Integer(n), p) < vp(Integer(m), p)) return -1;
    return lower_binom_check(n, m, p) ? 1 : 0;
  });
}

CongruenceReport shifted_gauss_check(const LaurentPoly& lambda, const ExponentVector& shift, unsigned n,
                                     const std::vector<unsigned long>& primes, unsigned r_max, int k) {
  if (shift.dim() != lambda.dim()) throw DimensionMismatch("shift vector and polynomial differ in dimension");
  if (k < 1) throw DomainError("order must be at least 1");
  CongruenceReport rep;
  rep.family = Family::ShiftedGauss;
  rep.sequence = format_poly(lambda);
  rep.order = k;
  rep.exploratory = true;
  nlohmann::json sv = nlohmann::json::array();
  for (int e : shift.entries()) sv.push_back(e);
  rep.tested_range = {{"p", primes}, {"r_max", r_max}, {"n", n}, {"shift", sv}};
  auto scaled = [&](unsigned long f) {
    ExponentVector s = shift;
    for (int i = 0; i < s.dim(); ++i) s[i] = static_cast<int>(static_cast<long>(s[i]) * static_cast<long>(f));
    return s;
  };
  for (unsigned long p : primes) {
    require_prime(p);
    for (unsigned r = 1; r <= r_max; ++r) {
      const unsigned long hi = upow(p, r), lo = upow(p, r - 1);
      const Integer lhs = ct_shifted(lambda, static_cast<unsigned>(hi * n), scaled(hi));
      const Integer rhs = ct_shifted(lambda, static_cast<unsigned>(lo * n), scaled(lo));
      record(rep, {{"p", static_cast<long>(p)}, {"r", r}}, lhs, rhs,
             ipow(static_cast<long>(p), static_cast<unsigned long>(k) * r));
    }
  }
  return rep;
}

}  // namespace sporadic::congruence
