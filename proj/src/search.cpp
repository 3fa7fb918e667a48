#include "sporadic/search.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "sporadic/catalog.hpp"
#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"
#include "sporadic/kernels.hpp"

namespace sporadic::search {

void SearchConfig::validate() const {
  if (dim < 2 || dim > 3) throw DomainError("search dimension must be 2 or 3");
  if (max_factors < 1) throw DomainError("max_factors must be at least 1");
  if (prefix_len < 4) throw DomainError("prefix_len must be at least 4");
  if (shard_size == 0) throw DomainError("shard_size must be positive");
  for (const auto& e : factor_support)
    if (e.dim() != dim) throw DimensionMismatch("factor support point of wrong dimension");
  for (const auto& t : targets)
    if (t.terms.size() < prefix_len + 2)
      throw DomainError("target " + t.name + " has fewer than prefix_len + 2 terms");
}

unsigned default_prefix_len(int dim) { return dim == 2 ? 8 : 6; }

SearchConfig preset(const std::string& name) {
  SearchConfig c;
  c.preset = name;
  if (name == "linear") {
    c.dim = 2;
    c.factor_support = {{0, 0}, {1, 0}, {0, 1}};
    c.max_factors = 3;
  } else if (name == "linear3") {
    c.dim = 3;
    c.factor_support = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    c.max_factors = 4;
  } else if (name == "eta") {
    // Quadratic factors in the shape of the eta polynomial's factors.
    c.dim = 3;
    c.factor_support = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    c.max_factors = 3;
  } else {
    throw UnknownName(name);
  }
  c.denominator_power = 1;
  c.prefix_len = default_prefix_len(c.dim);
  return c;
}

std::vector<std::string> preset_names() { return {"linear", "linear3", "eta"}; }

Target catalog_target(const std::string& name, unsigned prefix_len) {
  const auto& e = catalog::get(name);
  return Target{e.name, catalog::recurrence_terms(e.recurrence, prefix_len + 1)};
}

std::vector<MonomialMap> symmetry_group(int dim) {
  std::vector<MonomialMap> group;
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const auto p = MonomialMap::permutation(perm);
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      std::vector<long> diag(static_cast<std::size_t>(dim * dim), 0);
      for (int i = 0; i < dim; ++i) diag[static_cast<std::size_t>(i * dim + i)] = (mask >> i) & 1u ? -1 : 1;
      group.push_back(p.compose(MonomialMap(dim, std::move(diag))));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

namespace {

using TermList = std::vector<std::pair<ExponentVector, Integer>>;

bool term_less(const TermList& a, const TermList& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

}  // namespace

CanonicalForm canonical_form(const LaurentPoly& a, const std::vector<MonomialMap>& group) {
  LaurentPoly best = a;
  TermList best_terms = a.terms();
  for (const auto& g : group) {
    LaurentPoly q = monomial_substitute(a, g);
    TermList t = q.terms();
    if (term_less(t, best_terms)) {
      best = std::move(q);
      best_terms = std::move(t);
    }
  }
  std::string key = format_poly(best);
  return {std::move(best), std::move(key)};
}

CanonicalForm canonical_form(const LaurentPoly& a) { return canonical_form(a, symmetry_group(a.dim())); }

namespace {

// Nonzero {-1,0,1} combinations of the support with positive leading coefficient.
std::vector<LaurentPoly> factor_list(const SearchConfig& c) {
  std::vector<LaurentPoly> out;
  const std::size_t s = c.factor_support.size();
  std::vector<int> digits(s, -1);
  while (true) {
    const auto lead = std::find_if(digits.begin(), digits.end(), [](int v) { return v != 0; });
    if (lead != digits.end() && *lead == 1) {
      LaurentPoly f(c.dim);
      for (std::size_t i = 0; i < s; ++i)
        if (digits[i] != 0) f.add_term(c.factor_support[i], digits[i]);
      out.push_back(std::move(f));
    }
    std::size_t i = 0;
    while (i < s && digits[i] == 1) digits[i++] = -1;
    if (i == s) break;
    ++digits[i];
  }
  return out;
}

std::size_t saturating_estimate(std::size_t factors, int max_factors) {
  // sum_k C(F + k - 1, k), times two signs
  long double total = 0, term = 1;
  for (int k = 1; k <= max_factors; ++k) {
    term = term * static_cast<long double>(factors + static_cast<std::size_t>(k) - 1) / k;
    total += term;
  }
  total *= 2;
  if (total > 1e18L) return static_cast<std::size_t>(1e18);
  return static_cast<std::size_t>(total);
}

// Non-decreasing index tuples of length 1..max_factors.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, int max_factors) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  for (int k = 1; k <= max_factors; ++k) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      out.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 1) --i;
      if (i < 0) break;
      const std::size_t v = idx[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
    }
  }
  return out;
}

}  // namespace

std::size_t estimate_count(const SearchConfig& config) {
  const std::size_t s = config.factor_support.size();
  if (s == 0) return 0;
  long double f = 1;
  for (std::size_t i = 0; i < s; ++i) f *= 3;
  return saturating_estimate(static_cast<std::size_t>((f - 1) / 2), config.max_factors);
}

std::vector<Enumerated> enumerate_candidates(const SearchConfig& config) {
  config.validate();
  const std::size_t estimate = estimate_count(config);
  if (estimate > config.max_candidates)
    throw ResourceError("search space of about " + std::to_string(estimate) + " candidates exceeds the cap of " +
                        std::to_string(config.max_candidates));
  const auto factors = factor_list(config);
  const auto tuples = multisets(factors.size(), config.max_factors);
  ExponentVector denom(config.dim);
  for (int i = 0; i < config.dim; ++i) denom[i] = -config.denominator_power;
  const auto group = symmetry_group(config.dim);

  std::vector<Enumerated> all(2 * tuples.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    LaurentPoly product = LaurentPoly::monomial(denom);
    std::vector<LaurentPoly> fs;
    for (std::size_t i : tuples[t]) {
      product = kernels::multiply_serial(product, factors[i]);
      fs.push_back(factors[i]);
    }
    for (int s = 0; s < 2; ++s) {
      auto& e = all[2 * t + static_cast<std::size_t>(s)];
      e.sign = s == 0 ? 1 : -1;
      e.poly = s == 0 ? product : -product;
      e.factors = fs;
      e.canonical_key = canonical_form(e.poly, group).key;
    }
  }
  std::vector<Enumerated> out;
  absl::flat_hash_map<std::string, bool> seen;
  for (auto& e : all)
    if (!e.poly.is_zero() && seen.emplace(e.canonical_key, true).second) out.push_back(std::move(e));
  return out;
}

namespace {

struct Outcome {
  std::vector<Candidate> matches;
  std::size_t over_budget = 0;
  std::size_t reverify_rejected = 0;

  void absorb(Outcome&& o) {
    over_budget += o.over_budget;
    reverify_rejected += o.reverify_rejected;
    for (auto& m : o.matches) matches.push_back(std::move(m));
  }
};

// Streams CT(poly^n) against every target, stopping at the first power where none remain.
Outcome evaluate(const Enumerated& e, const SearchConfig& c) {
  Outcome out;
  const unsigned depth = c.prefix_len + 2;
  std::vector<std::size_t> alive(c.targets.size());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<Integer> seen;
  try {
    CtStream stream(e.poly, depth - 1, CtOptions{.prune = true});
    for (unsigned n = 0; n < depth && !alive.empty(); ++n) {
      const Integer v = stream.next();
      // Powers at index >= prefix_len re-verify survivors of the full prefix.
      std::vector<std::size_t> keep;
      for (std::size_t t : alive) {
        if (c.targets[t].terms[n] == v) keep.push_back(t);
        else if (n >= c.prefix_len) ++out.reverify_rejected;
      }
      alive = std::move(keep);
      seen.push_back(v);
    }
  } catch (const ResourceError&) {
    out.over_budget = 1;
    out.reverify_rejected = 0;
    return out;
  }
  for (std::size_t t : alive) {
    Candidate m;
    m.poly = e.poly;
    m.factors = e.factors;
    m.sign = e.sign;
    m.matched_target = c.targets[t].name;
    m.prefix.assign(seen.begin(), seen.begin() + c.prefix_len);
    m.canonical_key = e.canonical_key;
    out.matches.push_back(std::move(m));
  }
  return out;
}

void sort_matches(std::vector<Candidate>& v) {
  std::sort(v.begin(), v.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.canonical_key, a.matched_target) < std::tie(b.canonical_key, b.matched_target);
  });
}

}  // namespace

SearchResult search_matches(const SearchConfig& config, const RunOptions& options) {
  if (config.targets.empty()) throw DomainError("search needs at least one target");
  const auto cands = enumerate_candidates(config);
  SearchResult res;
  res.enumerated = cands.size();
  res.shards = (cands.size() + config.shard_size - 1) / config.shard_size;
  res.first_shard = std::min(options.first_shard, res.shards);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 4;

  for (std::size_t b0 = res.first_shard; b0 < res.shards; b0 += batch) {
    const std::size_t b1 = std::min(res.shards, b0 + batch);
    std::vector<Outcome> per_shard(b1 - b0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t s = b0; s < b1; ++s) {
      Outcome& acc = per_shard[s - b0];
      const std::size_t lo = s * config.shard_size, hi = std::min(cands.size(), lo + config.shard_size);
      for (std::size_t i = lo; i < hi; ++i) acc.absorb(evaluate(cands[i], config));
    }
    Outcome merged;
    for (std::size_t s = b0; s < b1; ++s) {
      const std::size_t lo = s * config.shard_size, hi = std::min(cands.size(), lo + config.shard_size);
      res.evaluated += hi - lo;
      merged.absorb(std::move(per_shard[s - b0]));
    }
    res.over_budget += merged.over_budget;
    res.reverify_rejected += merged.reverify_rejected;
    auto& batch_matches = merged.matches;
    sort_matches(batch_matches);
    if (options.on_batch) options.on_batch(b1 - 1, batch_matches);
    for (auto& m : batch_matches) res.matches.push_back(std::move(m));
  }
  res.partial = res.over_budget > 0;
  sort_matches(res.matches);
  return res;
}

SearchResult search_matches_serial(const SearchConfig& config) {
  if (config.targets.empty()) throw DomainError("search needs at least one target");
  const auto cands = enumerate_candidates(config);
  SearchResult res;
  res.enumerated = cands.size();
  res.shards = 1;
  Outcome all;
  for (const auto& e : cands) all.absorb(evaluate(e, config));
  res.evaluated = cands.size();
  res.over_budget = all.over_budget;
  res.reverify_rejected = all.reverify_rejected;
  res.partial = res.over_budget > 0;
  res.matches = std::move(all.matches);
  sort_matches(res.matches);
  return res;
}

nlohmann::json to_json(const Candidate& c) {
  auto factors = nlohmann::json::array();
  for (const auto& f : c.factors) factors.push_back(format_poly(f));
  return {{"poly", format_poly(c.poly)},
          {"factors", factors},
          {"sign", c.sign},
          {"matched_target", c.matched_target},
          {"prefix", integers_to_json(c.prefix)},
          {"canonical_key", c.canonical_key}};
}

nlohmann::json config_to_json(const SearchConfig& c) {
  auto support = nlohmann::json::array();
  for (const auto& e : c.factor_support) {
    auto v = nlohmann::json::array();
    for (int x : e.entries()) v.push_back(x);
    support.push_back(v);
  }
  auto targets = nlohmann::json::array();
  for (const auto& t : c.targets) targets.push_back(t.name);
  return {{"preset", c.preset},
          {"dim", c.dim},
          {"max_factors", c.max_factors},
          {"factor_support", support},
          {"coefficient_set", {-1, 0, 1}},
          {"denominator_power", c.denominator_power},
          {"prefix_len", c.prefix_len},
          {"reverify_len", c.prefix_len + 2},
          {"targets", targets},
          {"max_candidates", c.max_candidates},
          {"shard_size", c.shard_size}};
}

}  // namespace sporadic::search
