#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace preper {

/// Status strings used in reports.
namespace claim_status {
inline constexpr const char* pass = "pass";
inline constexpr const char* fail = "fail";
inline constexpr const char* error = "error";
inline constexpr const char* assumed = "assumed from paper";
inline constexpr const char* budget = "not attempted (budget)";
inline constexpr const char* partial = "partial";
}  // namespace claim_status

struct ClaimResult {
  std::string id, group, status, computed, expected, provenance, ref, detail;
  double seconds = 0;
  bool failed() const;
  nlohmann::json to_json() const;
};

struct ClaimsReport {
  std::string selector;
  std::vector<ClaimResult> results;  // manifest order
  bool ok() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Selectors: all, dynatomic, curves, appendix, hasse, classify, or a claim id.
bool valid_claim_selector(const std::string& selector);
ClaimsReport verify_claims(const std::string& selector = "all", int jobs = 1);

}  // namespace preper
