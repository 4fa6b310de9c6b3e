#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nct::verify {

struct CheckRecord {
  std::string check;
  std::string anchor;  // the identity being checked
  int dim = 0;
  std::uint64_t seed = 0;
  double error = 0;
  double threshold = 0;
  bool pass = false;
};

nlohmann::json to_json(const CheckRecord& r);

struct VerifyConfig {
  int seeds = 100;
  std::uint64_t base_seed = 1;
  std::vector<int> dims{4, 6, 8};
  double tolerance_scale = 1.0;
};

namespace threshold {
inline constexpr double move_lemma = 1e-6;
inline constexpr double byparts = 1e-10;
inline constexpr double trace_vanish = 1e-10;
inline constexpr double frechet = 1e-8;
inline constexpr double modular_rewrite = 1e-12;
inline constexpr double f_K_consistency = 1e-10;
}  // namespace threshold

/// Every matrix identity check over `seeds` random instances, cycling through `dims`.
std::vector<CheckRecord> run_checks(const VerifyConfig& cfg);

/// Per check name: count, failures and worst error.
struct CheckSummary {
  std::string check;
  std::string anchor;
  int count = 0;
  int failures = 0;
  double worst_error = 0;
  double threshold = 0;
};
std::vector<CheckSummary> summarize(const std::vector<CheckRecord>& records);

}  // namespace nct::verify
