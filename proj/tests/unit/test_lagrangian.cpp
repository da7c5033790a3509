#include "sta/lagrangian.hpp"
#include "test_util.hpp"

using namespace sta;
using lagrangian::Slot;
using test::Rng;

TEST_CASE("multiform derivatives: finite differences against closed forms") {
  Rng r;
  for (int i = 0; i < 10; ++i) {
    const auto cfg = lagrangian::FieldConfiguration::from_octet(fields::build_octet(r.momentum(r(0.5, 2))));
    const auto pv = lagrangian::evaluate(cfg, r.point());
    const lagrangian::Density L = [m = cfg.m](const lagrangian::PointValues& v) { return lagrangian::density(v, m); };
    for (const auto& k : lagrangian::kinetic_fields()) {
      const auto dv = lagrangian::multiform_derivative(L, pv, k, Slot::value);
      const auto dg = lagrangian::multiform_derivative(L, pv, k, Slot::gradient);
      const auto av = lagrangian::analytic_value_derivative(pv, k, cfg.m);
      const auto ag = lagrangian::analytic_gradient_derivative(pv, k);
      CHECK(ga::dist(dv, av) < 1e-6 * std::max(1.0, av.norm()));
      CHECK(ga::dist(dg, ag) < 1e-6 * std::max(1.0, ag.norm()));
    }
  }
}

TEST_CASE("density is quadratic and phase invariant") {
  Rng r;
  for (int i = 0; i < 10; ++i) {
    const auto o = fields::build_octet(r.momentum(1.0));
    auto cfg = lagrangian::FieldConfiguration::from_octet(o);
    const auto x = r.point();
    const double L0 = lagrangian::lagrangian_density(cfg, x);
    const double a = r(0.5, 2);
    auto scaled = cfg;
    for (auto& [k, f] : scaled.f) f = f.scaled(a);
    CHECK(std::abs(lagrangian::lagrangian_density(scaled, x) - a * a * L0) < 1e-10 * std::max(1.0, std::abs(L0)));
    const ga::Multivector U = ga::exp_bivector_like(r(-3, 3) * ga::gamma21());
    auto rotated = cfg;
    for (auto& [k, f] : rotated.f) f = f * U;
    CHECK(std::abs(lagrangian::lagrangian_density(rotated, x) - L0) < 1e-10 * std::max(1.0, std::abs(L0)));
  }
}

TEST_CASE("Euler-Lagrange residual of lambda^s_{+-} reproduces its first-order line") {
  Rng r;
  const fields::Key k{modes::ElkoType::lambda_s, modes::Label::plus_minus};
  for (int i = 0; i < 10; ++i) {
    const auto cfg = lagrangian::FieldConfiguration::from_octet(fields::build_octet(r.momentum(r(0.5, 2))));
    const auto x = r.point();
    const auto el = lagrangian::euler_lagrange_residual(cfg, k, x);
    const auto line = lagrangian::line_value(cfg, k, x) * ga::Multivector::gen(0);
    CHECK(ga::dist(el, line) < 1e-6 * std::max(1.0, line.norm()));
  }
}
