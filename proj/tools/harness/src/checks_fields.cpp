#include "sta/fields.hpp"
#include "sta/majorana.hpp"
#include "util.hpp"

namespace sta::harness {

using fields::PlaneWaveField;
using ga::Multivector;
using modes::ElkoType;
using modes::Label;
using namespace util;

namespace {

PlaneWaveField random_field(Context& c, int n, bool on_shell) {
  PlaneWaveField f;
  for (int k = 0; k < n; ++k) {
    fields::Mode md;
    md.A = random_even(c);
    if (on_shell) {
      md.p = random_momentum(c).contravariant();
    } else {
      md.p = {c.uniform(-2, 2), c.uniform(-2, 2), c.uniform(-2, 2), c.uniform(-2, 2)};
    }
    md.eps = k % 2 ? 1 : -1;
    f.modes.push_back(md);
  }
  return f;
}

double octet_scale(const fields::Octet& o) {
  double s = 0;
  for (const auto& [k, f] : o.f) s = std::max(s, f.amp_norm());
  return s;
}

}  // namespace

void add_fields_checks(std::vector<CheckDef>& out) {
  const std::string mod = "field_eqs";

  out.push_back({"fields.dirac_operator_finite_difference", mod, "dirac-operator", 1e-6, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const PlaneWaveField f = random_field(c, 3, false);
                     const auto x = random_point(c);
                     const Multivector fd = fields::dirac_fd(f, x);
                     const Multivector cf = fields::apply_dirac_operator(f)(x);
                     r = std::max(r, ga::dist(fd, cf) / std::max(1.0, cf.norm()));
                     // applying the operator twice gives the box per mode
                     const PlaneWaveField dd = fields::apply_dirac_operator(fields::apply_dirac_operator(f));
                     r = std::max(r, (dd - fields::box(f)).amp_norm());
                   }
                   fields::PlaneWaveField constant = fields::single(Multivector(1.0), {1.0, 0, 0, 0}, -1);
                   constant.modes[0].p = {0, 0, 0, 0};
                   r = std::max(r, fields::apply_dirac_operator(constant).amp_norm());
                   return max_of(r);
                 }});

  out.push_back({"fields.dirac_hestenes_frequency_sign", mod, "dirac-hestenes", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // u modes need eps = -1; with eps = +1 the residual is 2m |u|
                   double r = 0;
                   const double m = 1.0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, m);
                     const auto d = modes::dirac_modes(p, 1 + s % 2);
                     r = std::max(r, fields::dh_residual(fields::single(d.u, p, -1), m).amp_norm());
                     const double flipped = fields::dh_residual(fields::single(d.u, p, +1), m).amp_norm();
                     r = std::max(r, std::abs(flipped - 2 * m * d.u.norm()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.first_order_system_on_octets", mod, "first-order-system", 1e-12, Compare::at_most, 4, false,
                 [](Context& c) {
                   // all eight lines on octets built with frequency signs -1 (lambda^s, rho^a) and +1
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto o = fields::build_octet(random_momentum(c));
                     const double scale = o.m * octet_scale(o);
                     for (const auto& f : fields::first_order_residual(o)) r = std::max(r, f.amp_norm() / scale);
                   }
                   return Outcome{r, "relative to m times the largest field amplitude"};
                 }});

  out.push_back({"fields.first_order_system_dictionary", mod, "first-order-system", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // covariant and operator forms of each line agree through the dictionary
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const auto o = fields::build_octet(random_momentum(c));
                     for (const auto& l : fields::first_order_lines()) {
                       const auto cov = fields::cov_merged(fields::first_order_line_residual_covariant(o, l));
                       const auto op = fields::cov_merged(
                           fields::dh_residual_as_covariant(fields::first_order_line_residual(o, l)));
                       r = std::max(r, fields::cov_distance(cov, op));
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.first_order_composition", mod, "first-order-system", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // substituting one line into its partner gives (box + s_x s_y m^2) X
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const PlaneWaveField X = random_field(c, 2, s % 2), Y = random_field(c, 2, s % 2);
                     for (int sx : {-1, 1})
                       for (int sy : {-1, 1}) {
                         const auto [lhs, rhs] = fields::first_order_composition(X, Y, sx, sy, 1.3);
                         r = std::max(r, (lhs - rhs).amp_norm());
                       }
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.klein_gordon_on_shell", mod, "klein-gordon", 1e-12, Compare::at_most, 4, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto o = fields::build_octet(random_momentum(c));
                     for (const auto& [k, f] : o.f) r = std::max(r, fields::kg_residual(f, o.m).amp_norm());
                   }
                   // off shell with p^2 = 2 m^2 leaves -m^2 A
                   const double m = 1.0;
                   fields::Mode md{Multivector(1.0), {std::sqrt(2.0), 0, 0, 0}, -1};
                   const PlaneWaveField off{{md}};
                   r = std::max(r, (fields::kg_residual(off, m) - off.scaled(-m * m)).amp_norm());
                   return max_of(r);
                 }});

  out.push_back({"fields.kg_witness_solves_klein_gordon", mod, "kg-counterexample", 1e-12, Compare::at_most, 4, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto o = fields::kg_not_first_order_witness(random_momentum(c));
                     for (const auto& [k, f] : o.f) r = std::max(r, fields::kg_residual(f, o.m).amp_norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.kg_witness_violates_first_order", mod, "kg-counterexample", 0.1, Compare::at_least, 4, false,
                 [](Context& c) {
                   // first line residual relative to m |lambda^s_{-+}|, minimum over momenta
                   double r = 1e300;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto o = fields::kg_not_first_order_witness(random_momentum(c));
                     const auto& lam = o.at(ElkoType::lambda_s, Label::minus_plus);
                     const auto& l = fields::first_order_lines()[0];
                     r = std::min(r, fields::first_order_line_residual(o, l).amp_norm() / (o.m * lam.amp_norm()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.elko_bilinears_class5", mod, "bilinears", 1e-10, Compare::at_most, 0, false,
                 [](Context& c) {
                   // sigma = omega = 0 with J null and nonzero, for every Elko type and any scaling
                   double r = 0;
                   std::string note;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c);
                     for (auto t : {ElkoType::lambda_s, ElkoType::lambda_a, ElkoType::rho_s, ElkoType::rho_a})
                       for (auto l : {Label::minus_plus, Label::plus_minus}) {
                         const Multivector psi = c.uniform(0.5, 3) * modes::elko_construct(p, t, l).op();
                         const double n2 = psi.norm() * psi.norm();
                         const auto b = fields::bilinears(psi);
                         const auto ll = fields::lightlike_check(b, n2);
                         r = std::max({r, std::abs(b.sigma) / n2, std::abs(b.omega) / n2,
                                       std::abs((b.J * b.J).scalar()) / (n2 * n2)});
                         if (!ll.J_nonzero) r = std::max(r, 1.0);
                         const int cls = fields::classify(psi).cls;
                         if (cls < 4) r = std::max(r, 1.0);
                         if (s == 0 && t == ElkoType::lambda_s && l == Label::minus_plus)
                           note = "standard-table class " + std::to_string(cls);
                       }
                   }
                   return Outcome{r, note};
                 }});

  out.push_back({"fields.dirac_mode_bilinears", mod, "bilinears", 1e-10, Compare::at_most, 0, false,
                 [](Context& c) {
                   // u modes have sigma != 0 (class 1 or 2) and timelike J with J.J = sigma^2 + omega^2
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c);
                     const Multivector u = modes::dirac_modes(p, 1 + s % 2).u;
                     const auto b = fields::bilinears(u);
                     const int cls = fields::classify(u).cls;
                     if (cls != 1 && cls != 2) r = std::max(r, 1.0);
                     r = std::max(r, std::abs((b.J * b.J).scalar() - b.sigma * b.sigma - b.omega * b.omega));
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.bilinear_covariance", mod, "bilinears", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   // psi -> R psi: sigma, omega fixed, J -> R J reverse(R); classes are scale invariant
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Multivector psi = random_even(c);
                     Multivector B = random_mv(c).grade(2);
                     const Multivector R = ga::exp_series(0.5 * B, 40);
                     const Multivector Rn = (1.0 / std::sqrt(std::abs((R * R.reverse()).scalar()))) * R;
                     const auto b = fields::bilinears(psi), br = fields::bilinears(Rn * psi);
                     r = std::max({r, std::abs(b.sigma - br.sigma), std::abs(b.omega - br.omega),
                                   ga::dist(br.J, Rn * b.J * Rn.reverse())});
                     if (fields::classify(psi).cls != fields::classify(3.7 * psi).cls) r = std::max(r, 1.0);
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.majorana_current_lightlike", mod, "majorana-currents", 1e-10, Compare::at_most, 0, false,
                 [](Context& c) {
                   // sigma = omega = 0 and J = psi g0 rev(psi) null with J^0 > 0
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec4 m = majorana::majorana_spinor(random_vec2(c));
                     const Multivector psi = spinor::to_operator({m, rep::Tag::weyl});
                     const double n2 = psi.norm() * psi.norm();
                     const auto b = fields::bilinears(psi);
                     const auto ll = fields::lightlike_check(b, n2);
                     r = std::max({r, std::abs(b.sigma) / n2, std::abs(b.omega) / n2,
                                   std::abs((b.J * b.J).scalar()) / (n2 * n2)});
                     if (!(ll.J_nonzero && ll.J0 > 0)) r = std::max(r, 1.0);
                   }
                   return max_of(r);
                 }});

  out.push_back({"fields.majorana_axial_current_nonzero", mod, "majorana-currents", 1e-10, Compare::at_least, 0, false,
                 [](Context& c) {
                   // K = psi g3 rev(psi) relative to |psi|^2, smallest over samples
                   double r = 1e300;
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec4 m = majorana::majorana_spinor(random_vec2(c));
                     const Multivector psi = spinor::to_operator({m, rep::Tag::weyl});
                     r = std::min(r, fields::bilinears(psi).K.norm() / (psi.norm() * psi.norm()));
                   }
                   return Outcome{r, "complex-valued Majorana spinors"};
                 }});
}

}  // namespace sta::harness
