#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "holecap/splitting.hpp"

namespace holecap {

struct Check {
  std::string what;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 when the criterion has no runtime bound
  std::string error;        // set when the criterion threw
  bool pass() const;
  std::string summary_line() const;
};

struct ValidateOptions {
  bool full = false;  // more random trials
  std::uint64_t seed = 0;
  EllipticConstants elliptic;  // overridable for fault injection
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const ValidateOptions& opts);
std::vector<CriterionResult> run_acceptance(const ValidateOptions& opts);

nlohmann::json results_to_json(const std::vector<CriterionResult>& results);

}  // namespace holecap
