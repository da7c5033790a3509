#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sta/harness/suite.hpp"

namespace {

using namespace sta::harness;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config ") + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spacetime-algebra spinor field verification driver"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::vector<std::string> modules;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples, threads;
  std::string format = "text", out, config;
  bool list = false, no_time = false;
  verify->add_option("--module,-m", modules, "module to run (repeatable); default all");
  verify->add_option("--tol", tol, "tolerance for every residual check");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "random samples per check");
  verify->add_option("--threads", threads, "worker threads, 0 for all cores");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out,-o", out, "report path; default stdout");
  verify->add_option("--config", config, "JSON suite configuration; flags override it");
  verify->add_flag("--list", list, "list checks and exit");
  verify->add_flag("--no-time", no_time, "omit wall times for byte-stable output");

  // fourier
  auto* fourier = app.add_subcommand("fourier", "transform of the p-dependent field and the nonlocality scan");
  sta::prop::FourierGridConfig fc;
  std::string f_format = "text", f_out;
  bool f_no_time = false;
  fourier->add_option("--grid", fc.grid, "quadrature points per axis, power of two");
  fourier->add_option("--eps", fc.eps, "Gaussian regulators, decreasing")->delimiter(',');
  fourier->add_option("--rmin", fc.r_min, "fit window start");
  fourier->add_option("--rmax", fc.r_max, "fit window end");
  fourier->add_option("--dz", fc.dz_probe, "off-plane probe offset");
  fourier->add_option("--threads", fc.threads, "worker threads, 0 for all cores");
  fourier->add_option("--format", f_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  fourier->add_option("--out,-o", f_out, "report path; default stdout");
  fourier->add_flag("--no-time", f_no_time, "omit wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      SuiteConfig cfg = config.empty() ? SuiteConfig{} : SuiteConfig::from_json(read_json(config));
      if (!modules.empty()) cfg.modules = modules;
      if (tol) cfg.tolerance = *tol;
      if (seed) cfg.seed = *seed;
      if (samples) cfg.samples = *samples;
      if (threads) cfg.threads = *threads;
      if (verify->count("--format")) cfg.format = format;
      if (!out.empty()) cfg.out = out;
      cfg.validate();
      if (list) {
        std::ostringstream s;
        for (const auto& d : registry())
          if (cfg.modules.empty() || std::find(cfg.modules.begin(), cfg.modules.end(), d.module) != cfg.modules.end())
            s << d.module << ' ' << d.name << ' ' << d.anchor << " criterion " << d.criterion << " tol " << d.tolerance
              << (d.anomaly ? " anomaly" : "") << '\n';
        emit(s.str(), cfg.out);
        return 0;
      }
      const auto reports = run_suite(cfg);
      emit(cfg.format == "json" ? to_json(reports, !no_time).dump(2) + "\n" : to_text(reports, !no_time), cfg.out);
      return exit_code(reports);
    }
    const FourierRun run = run_fourier(fc);
    emit(f_format == "json" ? to_json(run, !f_no_time).dump(2) + "\n" : to_text(run, !f_no_time), f_out);
    return exit_code(run.checks);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
