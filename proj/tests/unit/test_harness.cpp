#include <set>

#include "sta/harness/suite.hpp"
#include "test_util.hpp"

using namespace sta::harness;

namespace {

SuiteConfig quick(std::uint64_t seed = 0x5eed5eed2024ULL) {
  SuiteConfig c;
  c.seed = seed;
  c.samples = 10;
  c.fourier.grid = 128;
  c.fourier.r_max = 4.0;
  return c;
}

}  // namespace

TEST_CASE("registry: unique names, known anchors, every module covered") {
  std::set<std::string> names, anchor_keys, modules;
  for (const auto& a : anchors()) anchor_keys.insert(a.key);
  for (const auto& d : registry()) {
    CHECK(names.insert(d.name).second);
    CHECK(anchor_keys.count(d.anchor) == 1);
    modules.insert(d.module);
    CHECK(d.criterion >= 0);
    CHECK(d.criterion <= 9);
  }
  for (const auto& m : module_names()) CHECK(modules.count(m) == 1);
  CHECK(module_names().size() == 9);
}

TEST_CASE("runs are deterministic and byte stable") {
  const auto a = run_suite(quick());
  const auto b = run_suite(quick());
  CHECK(to_json(a, false).dump() == to_json(b, false).dump());
  CHECK(to_text(a, false) == to_text(b, false));
}

TEST_CASE("seed change keeps the pass/fail pattern") {
  const auto a = run_suite(quick(1));
  const auto b = run_suite(quick(2));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].name);
    CHECK(a[i].status == b[i].status);
  }
}

TEST_CASE("anomaly checks are flagged and the rest match the documented failures") {
  const auto r = run_suite(quick());
  std::set<std::string> flagged;
  for (const auto& c : r) {
    if (c.status == Status::flagged) flagged.insert(c.name);
    // fail implies the residual is on the wrong side of the tolerance
    if (c.status == Status::fail && std::isfinite(c.residual)) {
      if (c.compare == Compare::at_most) CHECK(c.residual > c.tolerance);
      else CHECK(c.residual < c.tolerance);
    }
  }
  const std::set<std::string> want = {"km.duplicate_printed_definition", "km.projected_field_definition",
                                      "prop.causal_split_time_ordering", "prop.g_parametrization",
                                      "majorana.boosted_v_label"};
  CHECK(flagged == want);
}

TEST_CASE("tolerance zero reports failures and a nonzero exit code") {
  auto c = quick();
  c.modules = {"ga_core", "spinor_repr"};
  c.tolerance = 0.0;
  CHECK(exit_code(run_suite(c)) == 1);
}

TEST_CASE("module selection and exit code on a clean module") {
  auto c = quick();
  c.modules = {"ga_core"};
  const auto r = run_suite(c);
  CHECK(!r.empty());
  for (const auto& x : r) CHECK(x.module == "ga_core");
  CHECK(exit_code(r) == 0);
}

TEST_CASE("configuration errors") {
  auto c = quick();
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = quick();
  c.modules = {"nope"};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = quick();
  c.tolerance = -1.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = quick();
  c.fourier.eps = {0.0};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(run_fourier(c.fourier), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json{{"samples", "many"}}), ConfigError);
}

TEST_CASE("configuration JSON round trip") {
  auto c = quick(77);
  c.modules = {"propagators"};
  c.tolerances["prop.g_field"] = 1e-10;
  c.fourier.eps = {0.2, 0.1};
  const auto back = SuiteConfig::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
}

TEST_CASE("under-resolved Fourier grid degrades instead of erroring") {
  sta::prop::FourierGridConfig f;
  f.grid = 32;
  const auto run = run_fourier(f);
  CHECK(run.report.degraded);
  CHECK(run.report.exponent_halfwidth > 0.1);
  CHECK(run.directions.size() == 4);
}
