#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include "sta/harness/suite.hpp"

namespace sta::harness {

std::shared_ptr<SharedData> make_shared_data();

namespace {

using nlohmann::json;

json fourier_json(const prop::FourierGridConfig& f) {
  return {{"grid", f.grid},       {"eps", f.eps},
          {"r_min", f.r_min},     {"r_max", f.r_max},
          {"radial_samples", f.radial_samples}, {"azimuthal_samples", f.azimuthal_samples},
          {"dz_probe", f.dz_probe}, {"tail", f.tail}};
}

void fourier_from_json(const json& j, prop::FourierGridConfig& f) {
  if (j.contains("grid")) f.grid = j.at("grid").get<int>();
  if (j.contains("eps")) f.eps = j.at("eps").get<std::vector<double>>();
  if (j.contains("r_min")) f.r_min = j.at("r_min").get<double>();
  if (j.contains("r_max")) f.r_max = j.at("r_max").get<double>();
  if (j.contains("radial_samples")) f.radial_samples = j.at("radial_samples").get<int>();
  if (j.contains("azimuthal_samples")) f.azimuthal_samples = j.at("azimuthal_samples").get<int>();
  if (j.contains("dz_probe")) f.dz_probe = j.at("dz_probe").get<double>();
  if (j.contains("tail")) f.tail = j.at("tail").get<double>();
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  unsigned t = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<unsigned>(t, unsigned(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < t; ++k)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) f(i);
    });
  for (auto& th : pool) th.join();
}

std::string fmt_num(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3e", v);
  return b;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

void SuiteConfig::validate() const {
  const auto& mods = module_names();
  for (const auto& m : modules)
    if (std::find(mods.begin(), mods.end(), m) == mods.end()) throw ConfigError("unknown module " + m);
  if (tolerance && !(*tolerance >= 0)) throw ConfigError("tolerance must be non-negative");
  for (const auto& [k, v] : tolerances) {
    if (!(v >= 0)) throw ConfigError("tolerance for " + k + " must be non-negative");
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const CheckDef& d) { return d.name == k; }))
      throw ConfigError("tolerance override for unknown check " + k);
  }
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (threads < 0) throw ConfigError("threads must be non-negative");
  if (format != "text" && format != "json") throw ConfigError("format must be text or json");
  try {
    fourier.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("fourier: ") + e.what());
  }
}

SuiteConfig SuiteConfig::from_json(const json& j) {
  SuiteConfig c;
  try {
    if (j.contains("modules")) c.modules = j.at("modules").get<std::vector<std::string>>();
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("tolerances")) c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) c.samples = j.at("samples").get<int>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("fourier")) fourier_from_json(j.at("fourier"), c.fourier);
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

json SuiteConfig::to_json() const {
  json j{{"modules", modules}, {"tolerances", tolerances}, {"seed", seed},     {"samples", samples},
         {"threads", threads}, {"fourier", fourier_json(fourier)}, {"format", format}, {"out", out}};
  if (tolerance) j["tolerance"] = *tolerance;
  return j;
}

std::vector<CheckReport> run_checks(const SuiteConfig& cfg, const std::function<bool(const CheckDef&)>& select) {
  cfg.validate();
  std::vector<const CheckDef*> chosen;
  for (const auto& d : registry())
    if (select(d)) chosen.push_back(&d);
  Context base;
  base.seed = cfg.seed;
  base.samples = cfg.samples;
  base.fourier = cfg.fourier;
  base.fourier.threads = 1;  // checks already run in parallel
  base.shared = make_shared_data();
  std::vector<CheckReport> out(chosen.size());
  parallel_for(chosen.size(), cfg.threads, [&](std::size_t i) {
    const CheckDef& d = *chosen[i];
    double tol = d.tolerance;
    if (cfg.tolerance && d.compare == Compare::at_most) tol = *cfg.tolerance;
    if (auto it = cfg.tolerances.find(d.name); it != cfg.tolerances.end()) tol = it->second;
    out[i] = evaluate(d, base, tol);
  });
  return out;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  const std::set<std::string> mods(cfg.modules.begin(), cfg.modules.end());
  return run_checks(cfg, [&](const CheckDef& d) { return mods.empty() || mods.count(d.module); });
}

int exit_code(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::fail; })
             ? 1
             : 0;
}

json to_json(const std::vector<CheckReport>& reports, bool with_time) {
  json a = json::array();
  for (const auto& r : reports) {
    json j{{"name", r.name},
           {"module", r.module},
           {"anchor", r.anchor},
           {"status", name(r.status)},
           {"compare", name(r.compare)},
           {"residual", r.timing && !with_time ? json(nullptr) : number(r.residual)},
           {"tolerance", r.tolerance}};
    if (r.literal_residual >= 0) j["printed_form_residual"] = number(r.literal_residual);
    if (!r.note.empty()) j["note"] = r.note;
    if (with_time) j["seconds"] = r.seconds;
    a.push_back(j);
  }
  return a;
}

std::string to_text(const std::vector<CheckReport>& reports, bool with_time) {
  std::ostringstream os;
  std::size_t w = 5;
  for (const auto& r : reports) w = std::max(w, r.name.size());
  int npass = 0, nfail = 0, nflag = 0;
  for (const auto& r : reports) {
    os << (r.status == Status::pass ? "PASS   " : r.status == Status::flagged ? "FLAGGED" : "FAIL   ") << "  "
       << r.name << std::string(w - r.name.size(), ' ') << "  "
       << (r.timing && !with_time ? std::string(9, '-') : fmt_num(r.residual))
       << (r.compare == Compare::at_most ? " <= " : " >= ") << fmt_num(r.tolerance);
    if (with_time) os << "  " << fmt_num(r.seconds) << " s";
    if (r.literal_residual >= 0) os << "  printed form " << fmt_num(r.literal_residual);
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
    (r.status == Status::pass ? npass : r.status == Status::flagged ? nflag : nfail)++;
  }
  os << npass << " passed, " << nflag << " flagged, " << nfail << " failed\n";
  return os.str();
}

FourierRun run_fourier(const prop::FourierGridConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("fourier: ") + e.what());
  }
  FourierRun run;
  std::vector<CheckDef> defs;
  add_propagator_checks(defs);
  Context base;
  base.fourier = cfg;
  base.shared = make_shared_data();
  for (const auto& d : defs) {
    if (d.anchor != "fourier-transform" && d.anchor != "nonlocality-plane") continue;
    CheckReport r = evaluate(d, base, d.tolerance);
    if (d.name == "fourier.radial_exponent" && base.fourier_report().degraded) {
      r.note += (r.note.empty() ? "" : "; ") + std::string("wide confidence: grid below ") +
                std::to_string(base.fourier_report().required_grid);
    }
    run.checks.push_back(r);
  }
  run.report = base.fourier_report();
  run.directions = base.nonlocality();
  return run;
}

json to_json(const FourierRun& run, bool with_time) {
  const auto& f = run.report;
  json samples = json::array();
  for (const auto& s : f.samples)
    samples.push_back({{"delta", s.delta},
                       {"eps", s.eps},
                       {"g5g1", {s.c1.real(), s.c1.imag()}},
                       {"g5g2", {s.c2.real(), s.c2.imag()}},
                       {"norm", s.norm}});
  json dirs = json::array();
  for (const auto& d : run.directions)
    dirs.push_back({{"direction", d.dir}, {"magnitude", d.magnitude}, {"verdict", prop::name(d.verdict)}});
  json fit{{"radial_exponent", f.radial_exponent},
           {"exponent_stderr", f.exponent_stderr},
           {"exponent_halfwidth", f.exponent_halfwidth},
           {"quadrature_log_error", f.quadrature_log_error},
           {"azimuthal_correlation", f.azimuthal_correlation},
           {"channel_leak", f.channel_leak},
           {"real_part_leak", f.real_part_leak},
           {"parity_residual", f.parity_residual},
           {"offplane_ratio", f.offplane_ratio},
           {"offplane_decreasing", f.offplane_decreasing},
           {"required_grid", f.required_grid},
           {"degraded", f.degraded}};
  json j{{"checks", to_json(run.checks, with_time)}, {"fit", fit}, {"samples", samples}, {"directions", dirs}};
  if (with_time) j["seconds"] = f.seconds;
  return j;
}

std::string to_text(const FourierRun& run, bool with_time) {
  const auto& f = run.report;
  std::ostringstream os;
  os << to_text(run.checks, with_time);
  os << "radial exponent " << f.radial_exponent << " +/- " << f.exponent_halfwidth
     << (f.degraded ? " (wide confidence: grid below " + std::to_string(f.required_grid) + ")" : "") << '\n';
  os << "azimuthal correlation " << f.azimuthal_correlation << '\n';
  os << "off-plane ratio per eps";
  for (double r : f.offplane_ratio) os << ' ' << r;
  os << '\n';
  os << "# delta_x delta_y delta_z eps Re(g5g1) Im(g5g1) Re(g5g2) Im(g5g2)\n";
  for (const auto& s : f.samples) {
    char b[256];
    std::snprintf(b, sizeof b, "%.6f %.6f %.6f %.6f %.6e %.6e %.6e %.6e\n", s.delta[0], s.delta[1], s.delta[2], s.eps,
                  s.c1.real(), s.c1.imag(), s.c2.real(), s.c2.imag());
    os << b;
  }
  os << "# direction verdict magnitude-per-eps\n";
  for (const auto& d : run.directions) {
    char b[128];
    std::snprintf(b, sizeof b, "%.4f %.4f %.4f %s", d.dir[0], d.dir[1], d.dir[2], prop::name(d.verdict));
    os << b;
    for (double m : d.magnitude) os << ' ' << fmt_num(m);
    os << '\n';
  }
  return os.str();
}

}  // namespace sta::harness
