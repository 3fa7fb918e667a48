#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sporadic/catalog.hpp"

namespace sporadic::verify {

// One representation compared against the recurrence prefix.
struct AgreementRow {
  std::string entry;
  std::string representation;  // "binomial:<id>", "ct:<label>", "prop12"
  unsigned depth = 0;
  bool agree = true;
  std::optional<unsigned> first_mismatch;
  std::string error;  // set when the representation threw
};

struct PolytopeRow {
  std::string entry;
  bool expected_pass = true;
  bool pass = false;
  std::vector<ExponentVector> witnesses;
  bool witnesses_as_expected = true;
  bool ok() const { return pass == expected_pass && witnesses_as_expected; }
};

struct VerifyReport {
  unsigned depth_2var = 0;
  unsigned depth_3var = 0;
  std::vector<AgreementRow> agreements;
  std::vector<PolytopeRow> polytopes;
  bool pass = true;
  std::optional<std::string> first_failure;
};

inline constexpr unsigned kDefaultDepth2 = 12;
inline constexpr unsigned kDefaultDepth3 = 10;
// Prop12 sums grow like n^8 in work; they are checked to this depth at most.
inline constexpr unsigned kProp12Depth = 8;

// Every registered representation of every entry against its recurrence, and
// every polytope verdict against polytope_origin_only. Jobs run concurrently;
// rows keep catalog order.
VerifyReport verify_all(const std::vector<catalog::SequenceEntry>& entries, unsigned depth_2var = kDefaultDepth2,
                        unsigned depth_3var = kDefaultDepth3);

nlohmann::json to_json(const VerifyReport& r);

}  // namespace sporadic::verify
