// Acceptance runner: one line per criterion. Tolerances, sample counts and runtime limits are pinned here and
// override the registry values, so loosening a registry tolerance cannot turn a criterion green.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "sta/harness/suite.hpp"

namespace {

using namespace sta::harness;

struct Pinned {
  const char* name;
  double tolerance;
};

struct Criterion {
  int id;
  const char* title;
  double runtime_limit;  // seconds, 0 for none
  std::vector<Pinned> checks;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "algebra kernel", 1.0,
       {{"ga.generator_anticommutation", 1e-12},
        {"ga.pauli_relations", 1e-12},
        {"ga.contraction_plus_exterior", 1e-12},
        {"ga.reverse_antiautomorphism", 1e-12},
        {"ga.scalar_product_identity", 1e-12}}},
      {2, "spinor dictionary", 0,
       {{"spinor.round_trip", 1e-12},
        {"spinor.dictionary_gamma_mu", 1e-12},
        {"spinor.dictionary_mult_i", 1e-12},
        {"spinor.dictionary_i_gamma5", 1e-12},
        {"spinor.dictionary_bar", 1e-12},
        {"spinor.dictionary_dagger", 1e-12},
        {"spinor.dictionary_conjugate", 1e-12},
        {"spinor.dirac_hestenes_equivalence", 1e-12}}},
      {3, "elko construction", 0,
       {{"modes.elko_charge_eigenvalues", 1e-12},
        {"modes.rho_lambda_identifications", 1e-12},
        {"modes.elko_parity_relations", 1e-12},
        {"modes.elko_boost_factor", 1e-12}}},
      {4, "first-order system and klein-gordon", 0,
       {{"fields.first_order_system_on_octets", 1e-12},
        {"fields.klein_gordon_on_shell", 1e-12},
        {"fields.kg_witness_solves_klein_gordon", 1e-12},
        {"fields.kg_witness_violates_first_order", 0.1}}},
      {5, "lagrangian", 5.0,
       {{"lagrangian.multiform_derivatives", 1e-6},
        {"lagrangian.euler_lagrange_lambda_s_pm", 1e-6},
        {"lagrangian.euler_lagrange_lambda_a_mp", 1e-6},
        {"lagrangian.euler_lagrange_rho_a_pm", 1e-6},
        {"lagrangian.euler_lagrange_rho_s_mp", 1e-6}}},
      {6, "K/M fields", 0,
       {{"km.duplicate_printed_definition", 1e-12},
        {"km.field_equations_elko_built", 1e-12},
        {"km.field_equations_solutions", 1e-12},
        {"km.current_conservation_closed_form", 1e-12},
        {"km.current_conservation_finite_difference", 1e-6},
        {"km.gauge_invariance_zero_residual", 1e-12}}},
      {7, "majorana", 0,
       {{"majorana.rest_spinors_exact", 0},
        {"majorana.rest_parity_exact", 0},
        {"majorana.boosted_v_label", 1e-12},
        {"majorana.momentum_dirac_u_v", 1e-12},
        {"majorana.complex_incompatibility", 0},
        {"majorana.grassmann_involution_chain", 0},
        {"majorana.grassmann_example_both_conditions", 0},
        {"majorana.grassmann_conditions_compatible", 0},
        {"majorana.grassmann_current_zero", 0}}},
      {8, "propagators", 0,
       {{"prop.kernel_defining_equation", 1e-12},
        {"prop.causal_split_residues", 1e-8},
        {"prop.causal_split_time_ordering", 1e-8},
        {"prop.rewriting_first", 1e-12},
        {"prop.rewriting_second", 1e-12}}},
      {9, "transform of the p-dependent field", 60.0,
       {{"fourier.channels", 1e-10},
        {"fourier.radial_exponent", 0.1},
        {"fourier.azimuthal_correlation", 0.99},
        {"fourier.offplane_decreasing", 0},
        {"fourier.runtime", 60}}},
  };
  return c;
}

constexpr double full_suite_limit = 120.0;
constexpr int pinned_samples = 100;
constexpr std::uint64_t pinned_seed = 0x5eed5eed2024ULL;

const std::set<std::string>& documented_anomalies() {
  static const std::set<std::string> s = {"km.duplicate_printed_definition", "km.projected_field_definition",
                                          "prop.causal_split_time_ordering", "prop.g_parametrization",
                                          "majorana.boosted_v_label"};
  return s;
}

SuiteConfig pinned_config() {
  SuiteConfig cfg;
  cfg.seed = pinned_seed;
  cfg.samples = pinned_samples;
  cfg.fourier = sta::prop::FourierGridConfig{};
  cfg.fourier.grid = 256;
  for (const auto& c : criteria())
    for (const auto& p : c.checks) cfg.tolerances[p.name] = p.tolerance;
  return cfg;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Line {
  int id;
  bool pass;
  std::string text;
};

std::string fmt_line(int id, const char* title, bool pass, const std::string& detail) {
  char b[64];
  std::snprintf(b, sizeof b, "%-4s criterion %2d  %-36s ", pass ? "PASS" : "FAIL", id, title);
  return b + detail;
}

Line run_criterion(const Criterion& c, const SuiteConfig& cfg) {
  std::set<std::string> want;
  for (const auto& p : c.checks) want.insert(p.name);
  // every registry check tagged with this criterion must be pinned here and vice versa
  std::set<std::string> tagged;
  for (const auto& d : registry())
    if (d.criterion == c.id) tagged.insert(d.name);

  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_checks(cfg, [&](const CheckDef& d) { return want.count(d.name) > 0; });
  const double secs = elapsed(t0);

  std::vector<std::string> failed, flagged;
  double worst = 0;
  for (const auto& r : reports) {
    if (r.status == Status::fail) failed.push_back(r.name);
    if (r.status == Status::flagged) flagged.push_back(r.name);
    if (r.compare == Compare::at_most && r.tolerance > 0) worst = std::max(worst, r.residual / r.tolerance);
  }
  const bool coverage = tagged == want && reports.size() == want.size();
  const bool in_time = c.runtime_limit <= 0 || secs < c.runtime_limit;
  const bool pass = failed.empty() && coverage && in_time;

  std::ostringstream d;
  d << reports.size() - failed.size() << "/" << reports.size() << " checks";
  if (!flagged.empty()) d << " (" << flagged.size() << " flagged)";
  char b[96];
  std::snprintf(b, sizeof b, ", %.3f s", secs);
  d << b;
  if (c.runtime_limit > 0) d << " (limit " << c.runtime_limit << " s)";
  if (!coverage) d << ", pinned check list differs from the registry";
  if (!failed.empty()) {
    d << ", failing:";
    for (const auto& f : failed) d << ' ' << f;
  }
  return {c.id, pass, fmt_line(c.id, c.title, pass, d.str())};
}

Line run_full(const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_suite(cfg);
  const double secs = elapsed(t0);
  std::set<std::string> flagged;
  int failed = 0;
  for (const auto& r : reports) {
    failed += r.status == Status::fail;
    if (r.status == Status::flagged) flagged.insert(r.name);
  }
  const bool pass = failed == 0 && flagged == documented_anomalies() && secs < full_suite_limit;
  std::ostringstream d;
  char b[96];
  std::snprintf(b, sizeof b, "%zu checks, %d failed, %zu flagged, %.3f s (limit %.0f s)", reports.size(), failed,
                flagged.size(), secs, full_suite_limit);
  d << b;
  if (flagged != documented_anomalies()) d << ", flagged set differs from the documented anomalies";
  return {10, pass, fmt_line(10, "full suite", pass, d.str())};
}

std::set<int> parse_set(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.insert(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string expect;
  app.add_option("--expect-fail", expect,
                 "comma-separated criteria known to fail; exit 0 iff exactly these fail");
  CLI11_PARSE(app, argc, argv);

  const SuiteConfig cfg = pinned_config();
  std::vector<Line> lines;
  for (const auto& c : criteria()) lines.push_back(run_criterion(c, cfg));
  lines.push_back(run_full(cfg));

  std::set<int> failing;
  for (const auto& l : lines) {
    std::cout << l.text << '\n';
    if (!l.pass) failing.insert(l.id);
  }
  std::cout << lines.size() - failing.size() << " of " << lines.size() << " criteria pass\n";

  if (app.count("--expect-fail")) {
    const std::set<int> want = parse_set(expect);
    if (failing != want) {
      std::cout << "failing set differs from the expected set\n";
      return 1;
    }
    return 0;
  }
  return failing.empty() ? 0 : 1;
}
