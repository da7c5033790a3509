#include "sta/lagrangian.hpp"
#include "util.hpp"

namespace sta::harness {

using fields::Key;
using fields::PlaneWaveField;
using ga::Multivector;
using modes::ElkoType;
using modes::Label;
using namespace util;

namespace {

// random plane-wave content for all eight fields
lagrangian::FieldConfiguration random_configuration(Context& c, double m) {
  lagrangian::FieldConfiguration cfg;
  cfg.m = m;
  for (auto t : {ElkoType::lambda_s, ElkoType::lambda_a, ElkoType::rho_s, ElkoType::rho_a})
    for (auto l : {Label::minus_plus, Label::plus_minus}) {
      PlaneWaveField f;
      for (int k = 0; k < 2; ++k) f += fields::single(random_even(c), random_momentum(c, m), k ? 1 : -1);
      cfg.f[{t, l}] = f;
    }
  return cfg;
}

std::string key_name(const Key& k) {
  std::string s = modes::is_lambda(k.first) ? "lambda_" : "rho_";
  s += modes::is_self_conjugate(k.first) ? "s_" : "a_";
  s += k.second == Label::minus_plus ? "mp" : "pm";
  return s;
}

}  // namespace

void add_lagrangian_checks(std::vector<CheckDef>& out) {
  const std::string mod = "lagrangian_check";

  out.push_back({"lagrangian.multiform_derivatives", mod, "multiform-derivatives", 1e-6, Compare::at_most, 5, false,
                 [](Context& c) {
                   // finite-difference derivatives against the closed forms, relative
                   double r = 0;
                   for (int s = 0; s < 20; ++s) {
                     const auto cfg = random_configuration(c, 1.0);
                     const auto pv = lagrangian::evaluate(cfg, random_point(c));
                     const lagrangian::Density L = [m = cfg.m](const lagrangian::PointValues& v) {
                       return lagrangian::density(v, m);
                     };
                     for (const auto& [k, f] : cfg.f) {
                       const Multivector a = lagrangian::analytic_value_derivative(pv, k, cfg.m);
                       const Multivector fd = lagrangian::multiform_derivative(L, pv, k, lagrangian::Slot::value);
                       const Multivector ag = lagrangian::analytic_gradient_derivative(pv, k);
                       const Multivector fg = lagrangian::multiform_derivative(L, pv, k, lagrangian::Slot::gradient);
                       r = std::max(r, ga::dist(a, fd) / std::max(1.0, a.norm()));
                       r = std::max(r, ga::dist(ag, fg) / std::max(1.0, ag.norm()));
                     }
                     // a field-independent density has zero derivative
                     const lagrangian::Density constant = [](const lagrangian::PointValues&) { return 2.5; };
                     r = std::max(r, lagrangian::multiform_derivative(constant, pv, lagrangian::kinetic_fields()[0],
                                                                      lagrangian::Slot::value)
                                         .norm());
                   }
                   return max_of(r);
                 }});

  for (const Key& k : lagrangian::kinetic_fields()) {
    out.push_back({"lagrangian.euler_lagrange_" + key_name(k), mod, "euler-lagrange", 1e-6, Compare::at_most, 5, false,
                   [k](Context& c) {
                     // the Euler-Lagrange residual against the first-order line led by the same field, carried
                     // over by the right factor gamma_0 (gamma_21 gamma_0 = i gamma_3), 20 points x 20 configurations
                     double r = 0;
                     for (int s = 0; s < 20; ++s) {
                       const auto cfg = random_configuration(c, 1.0);
                       for (int q = 0; q < 20; ++q) {
                         const auto x = random_point(c);
                         const Multivector el = lagrangian::euler_lagrange_residual(cfg, k, x);
                         const Multivector line = lagrangian::line_value(cfg, k, x) * Multivector::gen(0);
                         r = std::max(r, ga::dist(el, line) / std::max(1.0, line.norm()));
                       }
                     }
                     return max_of(r);
                   }});
  }

  out.push_back({"lagrangian.density_symmetries", mod, "lagrangian-density", 1e-10, Compare::at_most, 0, false,
                 [](Context& c) {
                   // zero fields give zero, scaling by a gives a^2, right phase rotation exp(g21 theta)
                   // leaves the density unchanged, and the mass-dimension rescaling gives mu^4
                   double r = 0;
                   lagrangian::FieldConfiguration zero;
                   r = std::max(r, std::abs(lagrangian::lagrangian_density(zero, random_point(c))));
                   for (int s = 0; s < 20; ++s) {
                     const auto cfg = random_configuration(c, 1.0);
                     const auto x = random_point(c);
                     const double L0 = lagrangian::lagrangian_density(cfg, x);
                     const double scale = std::max(1.0, std::abs(L0));
                     const double a = c.uniform(0.5, 2);
                     auto scaled = cfg;
                     for (auto& [k, f] : scaled.f) f = f.scaled(a);
                     r = std::max(r, std::abs(lagrangian::lagrangian_density(scaled, x) - a * a * L0) / scale);
                     const Multivector U = ga::exp_bivector_like(c.uniform(-3, 3) * ga::gamma21());
                     auto rotated = cfg;
                     for (auto& [k, f] : rotated.f) f = f * U;
                     r = std::max(r, std::abs(lagrangian::lagrangian_density(rotated, x) - L0) / scale);
                     const double mu = c.uniform(0.5, 2);
                     auto dilated = cfg;
                     dilated.m = mu * cfg.m;
                     for (auto& [k, f] : dilated.f) {
                       f = f.scaled(std::pow(mu, 1.5));
                       for (auto& md : f.modes)
                         for (auto& p : md.p) p *= mu;
                     }
                     const fields::Point xs{x[0] / mu, x[1] / mu, x[2] / mu, x[3] / mu};
                     r = std::max(r, std::abs(lagrangian::lagrangian_density(dilated, xs) - std::pow(mu, 4) * L0) /
                                         (std::pow(mu, 4) * scale));
                   }
                   return max_of(r);
                 }});
}

}  // namespace sta::harness
