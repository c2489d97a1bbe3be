#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffloc/cl3.hpp"

namespace cliffloc {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunConfig {
  int n = 0;
  std::vector<int> taus{0, 1};
  std::size_t samples = 100;
  std::uint64_t seed = kDefaultSeed;
  int order = 20;  // truncation order for series identities
  bool allow_large_n = false;
  bool include_timing = false;

  // Throws std::invalid_argument on n != 0 without the override, bad tau, or zero samples.
  void validate() const;
};

enum class CaseStatus { pass, fail, expected_failure };

std::string to_string(CaseStatus s);

struct CaseResult {
  std::string id;
  std::string anchor;
  CaseStatus status = CaseStatus::pass;
  std::string detail;
  nlohmann::ordered_json witness;
};

struct VerificationReport {
  std::string suite;
  RunConfig config;
  std::vector<CaseResult> cases;
  std::optional<double> seconds;

  bool ok() const;
  std::size_t count(CaseStatus s) const;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();  // clifford, rep, cl3, localization, genus, all
const std::vector<std::string>& anchor_registry();

VerificationReport run_suite(const std::string& suite, const RunConfig& config);

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

std::vector<SignRow> report_signs(int n = 0);
std::string format_sign_table(const std::vector<SignRow>& rows);

}  // namespace cliffloc
