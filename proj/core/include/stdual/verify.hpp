#pragma once

#include <string>
#include <vector>

#include "stdual/duality.hpp"

namespace stdual {

enum class ClaimStatus { pass, fail, not_applicable };

std::string to_string(ClaimStatus s);

struct ClaimRecord {
  std::string id;
  ClaimStatus status = ClaimStatus::not_applicable;
  std::string witness;
};

// Claim ids in report order.
const std::vector<std::string>& claim_ids();

struct DualityReport {
  std::string scenario;
  LeviFamily family = LeviFamily::arthur;
  std::vector<std::size_t> levi_family;
  std::vector<ClaimRecord> claims;  // one per claim id, in claim_ids() order

  const ClaimRecord& claim(const std::string& id) const;
  bool all_pass() const;  // no claim failed
};

// Runs every check with exact arithmetic. A check that needs missing data
// is not applicable; any other error marks it failed.
DualityReport verify(const Scenario& s, LeviFamily family);
DualityReport verify(const Scenario& s);

struct ClaimMatrix {
  std::vector<std::string> scenarios;
  std::vector<std::string> claims;
  std::vector<std::vector<ClaimStatus>> status;  // [claim][scenario]

  bool all_pass() const;
};

ClaimMatrix claim_matrix(const std::vector<DualityReport>& reports);

// Verifies the scenarios concurrently (each under its own default family,
// or under the given one) and returns reports in input order.
std::vector<DualityReport> verify_all(const std::vector<Scenario>& scenarios,
                                      std::optional<LeviFamily> family = std::nullopt);

}  // namespace stdual
