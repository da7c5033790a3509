#include "util.hpp"

namespace sta::harness {

using ga::Multivector;
using modes::ElkoType;
using modes::Label;
using namespace util;

namespace {

constexpr ElkoType kTypes[] = {ElkoType::lambda_s, ElkoType::lambda_a, ElkoType::rho_s, ElkoType::rho_a};
constexpr Label kLabels[] = {Label::minus_plus, Label::plus_minus};

}  // namespace

void add_modes_checks(std::vector<CheckDef>& out) {
  const std::string mod = "wave_modes";

  out.push_back({"modes.boost_unit_and_frame", mod, "boost", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   double r = ga::dist(modes::boost_clifford({1.0, 0, 0, 0}), Multivector(1.0));
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, c.uniform(0.5, 2.0), 5.0);
                     const Multivector L = modes::boost_clifford(p);
                     r = std::max(r, ga::dist(L * L.reverse(), Multivector(1.0)));
                     r = std::max(r, ga::dist(L * Multivector::gen(0) * L.reverse(), (1.0 / p.m) * p.vec()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.dirac_momentum_conditions", mod, "plane-wave-modes", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   const auto d0 = modes::dirac_modes({1.0, 0, 0, 0}, 1);
                   double r = std::max(ga::dist(d0.u, Multivector(1.0)), ga::dist(d0.v, ga::sigma(3)));
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c);
                     const Mat4 ps = p.slash(rep::standard()), one = Mat4::Identity();
                     for (int rr = 1; rr <= 2; ++rr) {
                       const auto d = modes::dirac_modes(p, rr);
                       r = std::max(r, ((ps - p.m * one) * spinor::to_covariant(d.u).v).norm());
                       r = std::max(r, ((ps + p.m * one) * spinor::to_covariant(d.v).v).norm());
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.helicity_eigenstates", mod, "helicity-states", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   const auto hz = modes::helicity_states({0, 0, 1});
                   double r = (hz.plus - Vec2(1, 0)).norm();
                   for (int s = 0; s < c.samples; ++s) {
                     const auto d = random_dir(c);
                     const auto h = modes::helicity_states(d);
                     r = std::max(r, modes::helicity_residual(h, d));
                     r = std::max({r, std::abs(h.plus.norm() - 1), std::abs(h.minus.norm() - 1)});
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.half_boost_commutes_along_axis", mod, "half-boost", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   const auto [r0, l0] = modes::half_boost({0, 0, 0});
                   double r = std::max((r0 - Mat2::Identity()).norm(), (l0 - Mat2::Identity()).norm());
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c);
                     const auto [kr, kl] = modes::half_boost(modes::rapidity_vector(p));
                     const Mat2 sn = modes::sigma_dot(p.unit());
                     r = std::max({r, (kr * sn - sn * kr).norm(), (kl * sn - sn * kl).norm()});
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.half_boost_generic_noncommuting", mod, "half-boost", 1e-6, Compare::at_least, 0, false,
                 [](Context& c) {
                   double r = 1e300;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto a = random_dir(c), b = random_dir(c);
                     const double cross = std::hypot(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                                     a[0] * b[1] - a[1] * b[0]);
                     if (cross < 0.2) continue;
                     const auto [kr, kl] = modes::half_boost({a[0], a[1], a[2]});
                     const Mat2 sn = modes::sigma_dot(b);
                     r = std::min(r, (kr * sn - sn * kr).norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.elko_charge_eigenvalues", mod, "elko-construction", 1e-12, Compare::at_most, 3, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, 1.0, 10.0);
                     for (auto t : kTypes)
                       for (auto l : kLabels) r = std::max(r, modes::c_eigen_residual(modes::elko_construct(p, t, l)));
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.elko_dual_helicity", mod, "elko-construction", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, 1.0, 10.0);
                     for (auto t : kTypes)
                       for (auto l : kLabels)
                         r = std::max(r, modes::dual_helicity_residual(modes::elko_construct(p, t, l)));
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.elko_boost_factor", mod, "elko-boost-factor", 1e-12, Compare::at_most, 3, false,
                 [](Context& c) {
                   // printed factor sqrt((E+m)/m)(1 - |p|/(E+m)) against the measured ratio
                   double r = 0, exact = 0;
                   for (int s = 0; s < 20; ++s) {
                     const auto p = random_momentum(c, 1.0, 10.0);
                     const auto [ratio, gap] = modes::boost_factor_measured(p);
                     r = std::max(r, std::abs(ratio - modes::boost_factor_literal(p)) + gap);
                     exact = std::max(exact, std::abs(ratio - modes::boost_factor_exact(p)) + gap);
                   }
                   char b[160];
                   std::snprintf(b, sizeof b, "measured ratio matches sqrt((E+m)/2m)(1 - |p|/(E+m)) to %.1e", exact);
                   return Outcome{r, b};
                 }});

  out.push_back({"modes.rho_lambda_identifications", mod, "rho-lambda-identifications", 1e-12, Compare::at_most, 3,
                 false, [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, 1.0, 10.0);
                     for (const auto& id : modes::identifications()) {
                       const auto rho = modes::elko_construct(p, id.rho, id.label);
                       const auto lam = modes::elko_construct(p, id.lambda, id.label);
                       r = std::max(r, (rho.standard().v - id.factor * lam.standard().v).norm());
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.elko_parity_relations", mod, "elko-parity", 1e-12, Compare::at_most, 3, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, 1.0, 10.0);
                     for (const auto& rel : modes::parity_relations()) {
                       const auto from = modes::elko_construct(p, rel.from, rel.from_label);
                       const Vec4 P = modes::parity_on_elko(from.amp).at_p;
                       const auto lam = modes::elko_construct(p, rel.lambda_to, rel.to_label);
                       const auto rho = modes::elko_construct(p, rel.rho_to, rel.to_label);
                       r = std::max({r, (P - rel.factor * lam.amp.at_p).norm(), (P - rho.amp.at_p).norm()});
                       // the same operator written as (i/m) p gamma
                       r = std::max(r, (P - modes::parity_on_elko_slash(from.amp)).norm());
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.elko_parity_squares_to_minus_one", mod, "elko-parity", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, 1.0, 10.0);
                     for (auto t : kTypes)
                       for (auto l : kLabels) {
                         const auto e = modes::elko_construct(p, t, l);
                         const auto twice = modes::parity_on_elko(modes::parity_on_elko(e.amp));
                         r = std::max(r, (twice.at_p + e.amp.at_p).norm());
                       }
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.standard_rep_helicity_mixture", mod, "standard-rep-helicity", 1e-12, Compare::at_most, 0,
                 false, [](Context& c) {
                   // Sigma.p_hat on S lambda' reproduces the mixed blocks
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c);
                     for (auto t : kTypes)
                       for (auto l : kLabels) {
                         const auto d = modes::standard_rep_helicity_demo(modes::elko_construct(p, t, l));
                         r = std::max(r, (d.sigma_applied - d.expected).norm());
                       }
                   }
                   return max_of(r);
                 }});

  out.push_back({"modes.standard_rep_not_eigenvector", mod, "standard-rep-helicity", 1e-3, Compare::at_least, 0,
                 false, [](Context& c) {
                   // Elko spinors are not helicity eigenvectors there, a single-helicity Dirac spinor is
                   double gap = 1e300, dirac = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c);
                     for (auto t : kTypes)
                       for (auto l : kLabels)
                         gap = std::min(gap, modes::standard_rep_helicity_demo(modes::elko_construct(p, t, l))
                                                 .proportionality_gap);
                     const auto h = modes::helicity_states(p.unit());
                     Vec4 v;
                     v << h.plus, h.plus;
                     const Mat2 sn = modes::sigma_dot(p.unit());
                     Mat4 Sig = Mat4::Zero();
                     Sig.topLeftCorner<2, 2>() = sn;
                     Sig.bottomRightCorner<2, 2>() = sn;
                     dirac = std::max(dirac, modes::proportionality_gap(rep::change_of_basis() * v,
                                                                        Sig * rep::change_of_basis() * v));
                   }
                   char b[96];
                   std::snprintf(b, sizeof b, "single-helicity contrast gap %.1e", dirac);
                   return Outcome{dirac < 1e-12 ? gap : 0.0, b};
                 }});
}

}  // namespace sta::harness
