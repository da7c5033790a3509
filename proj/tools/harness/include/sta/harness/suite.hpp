#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sta/harness/check.hpp"

namespace sta::harness {

struct SuiteConfig {
  std::vector<std::string> modules;            // empty: all modules
  std::optional<double> tolerance;             // replaces every at_most tolerance
  std::map<std::string, double> tolerances;    // per-check overrides by name
  std::uint64_t seed = 0x5eed5eed2024ULL;
  int samples = 100;
  int threads = 0;  // 0: hardware concurrency
  prop::FourierGridConfig fourier;
  std::string format = "text";  // text or json
  std::string out;              // empty: stdout

  void validate() const;  // throws ConfigError
  static SuiteConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs the selected checks in parallel; the result is ordered by registry index.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);
// Runs checks selected by an arbitrary predicate (used by the acceptance binary).
std::vector<CheckReport> run_checks(const SuiteConfig& cfg, const std::function<bool(const CheckDef&)>& select);

// 0 when nothing failed (flagged allowed), 1 otherwise
int exit_code(const std::vector<CheckReport>& reports);

// with_time = false drops the wall-time fields so that reports compare byte for byte
nlohmann::json to_json(const std::vector<CheckReport>& reports, bool with_time = true);
std::string to_text(const std::vector<CheckReport>& reports, bool with_time = true);

// Fourier-transform run: checks on the sampled transform plus the data tables
struct FourierRun {
  std::vector<CheckReport> checks;
  prop::FourierReport report;
  std::vector<prop::DirectionVerdict> directions;
};
FourierRun run_fourier(const prop::FourierGridConfig& cfg);
nlohmann::json to_json(const FourierRun& run, bool with_time = true);
std::string to_text(const FourierRun& run, bool with_time = true);

}  // namespace sta::harness
