#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sporadic/laurent.hpp"

namespace sporadic::search {

struct Target {
  std::string name;
  std::vector<Integer> terms;  // u_0, u_1, ...; needs at least prefix_len + 2 entries
};

// Candidates are sign * f_1 * ... * f_k / (x_1 ... x_d)^denominator_power with
// 1 <= k <= max_factors, each f_i supported on factor_support with coefficients
// in {-1, 0, 1} and a positive leading coefficient.
struct SearchConfig {
  int dim = 2;
  int max_factors = 3;
  std::vector<ExponentVector> factor_support;
  int denominator_power = 1;
  unsigned prefix_len = 8;
  std::vector<Target> targets;
  // Refuse when the estimated number of factor multisets times signs exceeds this.
  std::size_t max_candidates = 2'000'000;
  std::size_t shard_size = 256;
  std::string preset;  // echo only

  // Throws DomainError on an invalid configuration.
  void validate() const;
};

// "linear" (dim 2, {1,x,y}, /xy, 3 factors), "linear3" (dim 3, {1,x,y,z}, /xyz, 4 factors),
// "eta" (dim 3, {1,x,y,z,xy,yz,zx}, /xyz, 3 factors; far above the default cap).
SearchConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Default match depth: 8 in two variables, 6 in three.
unsigned default_prefix_len(int dim);

// Target built from a catalog entry's recurrence, long enough for re-verification.
Target catalog_target(const std::string& name, unsigned prefix_len);

// Variable permutations composed with coordinate inversions (2^d d! maps).
std::vector<MonomialMap> symmetry_group(int dim);

struct CanonicalForm {
  LaurentPoly representative;
  std::string key;
};
// Least image of a under the group in canonical term order.
CanonicalForm canonical_form(const LaurentPoly& a, const std::vector<MonomialMap>& group);
CanonicalForm canonical_form(const LaurentPoly& a);

struct Enumerated {
  LaurentPoly poly;
  std::vector<LaurentPoly> factors;
  int sign = 1;
  std::string canonical_key;
};

std::size_t estimate_count(const SearchConfig& config);

// One representative per symmetry class, first in enumeration order. Throws
// ResourceError carrying the estimate when it exceeds max_candidates.
std::vector<Enumerated> enumerate_candidates(const SearchConfig& config);

struct Candidate {
  LaurentPoly poly;
  std::vector<LaurentPoly> factors;
  int sign = 1;
  std::string matched_target;
  std::vector<Integer> prefix;
  std::string canonical_key;
};

struct SearchResult {
  std::vector<Candidate> matches;  // sorted by (canonical_key, matched_target)
  std::size_t enumerated = 0;
  std::size_t shards = 0;
  std::size_t first_shard = 0;
  std::size_t evaluated = 0;
  std::size_t over_budget = 0;
  // Matched the prefix but failed at prefix_len or prefix_len + 1.
  std::size_t reverify_rejected = 0;
  // Some candidates exceeded the term cap and were not decided.
  bool partial = false;
};

struct RunOptions {
  // Shards with id < first_shard are skipped (resume).
  std::size_t first_shard = 0;
  // Called in shard order after each batch of completed shards with the last
  // completed id and that batch's matches.
  std::function<void(std::size_t, const std::vector<Candidate>&)> on_batch;
};

SearchResult search_matches(const SearchConfig& config, const RunOptions& options = {});

// Reference: same result computed on one thread without sharding.
SearchResult search_matches_serial(const SearchConfig& config);

nlohmann::json to_json(const Candidate& c);
nlohmann::json config_to_json(const SearchConfig& config);

}  // namespace sporadic::search
