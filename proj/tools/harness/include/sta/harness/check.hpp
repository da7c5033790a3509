#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sta/propagators.hpp"

namespace sta::harness {

enum class Status { pass, fail, flagged };
// at_most: residual <= tolerance passes; at_least: residual >= tolerance passes (separation checks)
enum class Compare { at_most, at_least };

const char* name(Status s);
const char* name(Compare c);

struct CheckReport {
  std::string name;
  std::string module;
  std::string anchor;
  Status status = Status::fail;
  Compare compare = Compare::at_most;
  double residual = 0;
  double tolerance = 0;
  double literal_residual = -1;  // flagged checks: the printed form, which is expected to fail
  std::string note;
  double seconds = 0;
  bool timing = false;  // residual is a wall time
};

// Shared, lazily computed data for checks that need the same expensive result.
struct SharedData;

struct Context {
  std::uint64_t seed = 0;
  int samples = 100;
  prop::FourierGridConfig fourier;
  std::mt19937_64 rng;
  std::shared_ptr<SharedData> shared;

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  const prop::FourierReport& fourier_report();
  const std::vector<prop::DirectionVerdict>& nonlocality();
};

struct Outcome {
  double residual = 0;
  std::string note;
  double literal = -1;  // printed form, for anomaly checks
};

struct CheckDef {
  std::string name;
  std::string module;
  std::string anchor;  // key into anchors()
  double tolerance = 0;
  Compare compare = Compare::at_most;
  int criterion = 0;     // acceptance criterion 1..9, 0 for none
  bool anomaly = false;  // documented misprint: flagged when the corrected form passes and the printed one fails
  std::function<Outcome(Context&)> run;
  bool timing = false;  // residual is a wall time, dropped from byte-stable output
};

struct Anchor {
  std::string key;
  std::string description;
};
// every in-scope relation the suite must cover
const std::vector<Anchor>& anchors();

// registry in canonical order
const std::vector<CheckDef>& registry();
const std::vector<std::string>& module_names();

// per-module registration, defined in checks_<module>.cpp
void add_ga_checks(std::vector<CheckDef>& out);
void add_spinor_checks(std::vector<CheckDef>& out);
void add_modes_checks(std::vector<CheckDef>& out);
void add_fields_checks(std::vector<CheckDef>& out);
void add_lagrangian_checks(std::vector<CheckDef>& out);
void add_km_checks(std::vector<CheckDef>& out);
void add_majorana_checks(std::vector<CheckDef>& out);
void add_propagator_checks(std::vector<CheckDef>& out);
void add_harness_checks(std::vector<CheckDef>& out);

// stable 64-bit FNV-1a, used to derive per-check seeds
std::uint64_t stable_hash(const std::string& s);

// evaluate one check with a seed derived from the suite seed and the check name
CheckReport evaluate(const CheckDef& def, Context base, double tolerance);

}  // namespace sta::harness
