#include "sta/km.hpp"
#include "util.hpp"

namespace sta::harness {

using ga::Multivector;
using km::CV;
using km::CVField;
using km::Kind;
using modes::ElkoType;
using modes::Label;
using namespace util;

namespace {

const Multivector& i_tau2() {
  static const Multivector v = km::frak_i() * km::tau(2);
  return v;
}

// p with p^2 = -m^2, the condition single-mode solutions need
std::array<double, 4> spacelike_momentum(Context& c, double m) {
  const auto d = random_dir(c);
  const double p0 = c.uniform(-2, 2), a = std::sqrt(p0 * p0 + m * m);
  return {p0, a * d[0], a * d[1], a * d[2]};
}

// spacetime-odd seed in span{1, frak_i tau_2}
CV seed(Context& c) {
  return CV::tensor(random_mv(c).odd(), Multivector(1.0)) + CV::tensor(random_mv(c).odd(), i_tau2());
}

CVField exact_solution(Context& c, Kind k, double m, int modes_count) {
  CVField f;
  for (int i = 0; i < modes_count; ++i)
    f.modes.push_back(km::literal_solution_mode(k, spacelike_momentum(c, m), i % 2 ? 1 : -1, seed(c), m));
  return f;
}

CV random_cv(Context& c) {
  CV x;
  for (const auto& b : km::internal_basis()) x += CV::tensor(random_mv(c), b);
  return x;
}

}  // namespace

void add_km_checks(std::vector<CheckDef>& out) {
  const std::string mod = "km_fields";

  out.push_back({"km.internal_algebra", mod, "km-definition", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   // tau_i tau_j + tau_j tau_i = 2 delta_ij, frak_i^2 = -1 and central, internal factors commute
                   // with spacetime factors, and Gamma_5 Gamma_20 equals frak_i tau_2
                   double r = ga::dist(km::frak_i() * km::frak_i(), Multivector(-1.0));
                   r = std::max(r, ga::dist(km::frak_i(), km::tau(1) * km::tau(2) * km::tau(3)));
                   for (int i = 1; i <= 3; ++i) {
                     r = std::max(r, ga::dist(km::frak_i() * km::tau(i), km::tau(i) * km::frak_i()));
                     for (int j = 1; j <= 3; ++j)
                       r = std::max(r, ga::dist(km::tau(i) * km::tau(j) + km::tau(j) * km::tau(i),
                                                Multivector(i == j ? 2.0 : 0.0)));
                   }
                   r = std::max(r, ga::dist(km::frak_i() * Multivector::gen(2) * Multivector::gen(0), i_tau2()));
                   for (int s = 0; s < c.samples; ++s) {
                     const CV a = CV::spacetime(random_mv(c)), x = CV::internal(random_even(c));
                     r = std::max(r, (a * x - x * a).norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"km.duplicate_printed_definition", mod, "km-definition", 1e-12, Compare::at_most, 6, true,
                 [](Context& c) {
                   // the printed M repeats the K entries; the matrix correspondence requires lambda^s_{+-}, rho^a_{-+}
                   double corrected = 0, literal = 1e300;
                   for (int s = 0; s < std::max(1, c.samples / 10); ++s) {
                     const auto o = fields::build_octet(random_momentum(c));
                     const auto x = random_point(c);
                     const Multivector l = o.at(ElkoType::lambda_s, Label::plus_minus)(x);
                     const Multivector r = o.at(ElkoType::rho_a, Label::minus_plus)(x);
                     const auto target = km::real_matrix(l, -r, r, l);
                     corrected = std::max(corrected, km::mat_distance(km::matrix_correspondence(km::build_M(o)(x)), target));
                     literal = std::min(literal, km::mat_distance(km::matrix_correspondence(km::build_K(o)(x)), target));
                   }
                   return Outcome{corrected, "printed M equals K", literal};
                 }});

  out.push_back({"km.matrix_correspondences", mod, "km-matrix", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   // K -> [[l, -r], [r, l]], frak_i tau_2 commutes with K and K frak_i tau_2 -> [[r, l], [-l, r]]
                   double res = 0;
                   for (int s = 0; s < std::max(1, c.samples / 10); ++s) {
                     const auto o = fields::build_octet(random_momentum(c));
                     const auto x = random_point(c);
                     for (Kind k : {Kind::K, Kind::M}) {
                       const bool K = k == Kind::K;
                       const Multivector l = o.at(ElkoType::lambda_s, K ? Label::minus_plus : Label::plus_minus)(x);
                       const Multivector r = o.at(ElkoType::rho_a, K ? Label::plus_minus : Label::minus_plus)(x);
                       const CV F = km::build(o, k)(x);
                       res = std::max(res, km::mat_distance(km::matrix_correspondence(F), km::real_matrix(l, -r, r, l)));
                       const CV it = CV::internal(i_tau2());
                       res = std::max(res, (F * it - it * F).norm());
                       res = std::max(res, km::mat_distance(km::matrix_correspondence(F * it), km::real_matrix(r, l, -l, r)));
                     }
                   }
                   return max_of(res);
                 }});

  out.push_back({"km.matrix_transcription_faithful", mod, "km-matrix", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const CV a = random_cv(c), b = random_cv(c);
                     r = std::max(r, km::mat_distance(km::matrix_correspondence(a * b),
                                                      km::matmul(km::matrix_correspondence(a), km::matrix_correspondence(b))) /
                                         std::max(1.0, a.norm() * b.norm()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"km.reverse", mod, "km-reverse", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   const Multivector a = random_mv(c);
                   const Multivector t12 = km::tau(1) * km::tau(2);
                   double r = (CV::spacetime(a).reverse() - CV::spacetime(a.reverse())).norm();
                   r = std::max(r, (CV::tensor(a, t12).reverse() + CV::tensor(a.reverse(), t12)).norm());
                   for (int s = 0; s < c.samples; ++s) {
                     const CV x = random_cv(c), y = random_cv(c);
                     r = std::max(r, (x.reverse().reverse() - x).norm());
                     r = std::max(r, ((x * y).reverse() - y.reverse() * x.reverse()).norm() / std::max(1.0, x.norm() * y.norm()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"km.field_equations_elko_built", mod, "km-field-equations", 1e-12, Compare::at_most, 6, false,
                 [](Context& c) {
                   // K and M assembled from constructed Elko fields, relative to m times the amplitude
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const auto o = fields::build_octet(random_momentum(c));
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = km::build(o, k);
                       r = std::max(r, km::km_residual(F, k, o.m).amp_norm() / (o.m * F.amp_norm()));
                     }
                   }
                   return Outcome{r, "relative to m times the amplitude norm"};
                 }});

  out.push_back({"km.field_equations_solutions", mod, "km-field-equations", 1e-12, Compare::at_most, 6, false,
                 [](Context& c) {
                   // superpositions of exact plane-wave solutions (p^2 = -m^2), and the mass-sign flip
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s)
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = exact_solution(c, k, m, 3);
                       r = std::max(r, km::km_residual(F, k, m).amp_norm() / F.amp_norm());
                       // the other sign leaves 2m F frak_i tau_2 g0
                       const Kind other = k == Kind::K ? Kind::M : Kind::K;
                       const CVField flip = km::km_residual(F, other, m);
                       const CVField expect =
                           F.right(CV::tensor(Multivector::gen(0), i_tau2())).scaled(k == Kind::K ? 2 * m : -2 * m);
                       r = std::max(r, (flip - expect).amp_norm() / F.amp_norm());
                     }
                   return max_of(r);
                 }});

  out.push_back({"km.projected_field_definition", mod, "km-projected", 1e-12, Compare::at_most, 0, true,
                 [](Context& c) {
                   // the projected M is M (1 + tau_3)/2; the printed one is (1/2) K (1 + tau_3)/2. Both are tested
                   // in the projected M equation with the sign implied by the M equation (see the next check)
                   double corrected = 0, literal = 1e300;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const CVField M = exact_solution(c, Kind::M, m, 2), K = exact_solution(c, Kind::K, m, 2);
                     corrected = std::max(corrected, km::projector_residual(M, Kind::K, m).amp_norm() / M.amp_norm());
                     literal = std::min(literal,
                                        km::projector_residual(K.scaled(0.5), Kind::K, m).amp_norm() / (0.5 * K.amp_norm()));
                   }
                   // projector_residual with the K sign carries -i m tau_2 for M solutions
                   return Outcome{corrected, "printed form built from K", literal};
                 }});

  out.push_back({"km.projected_equations_printed_sign", mod, "km-projected", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // d P g21 + i m tau_2 P g0 = 0 for K and the opposite sign for M, as printed
                   double printed = 0, opposite = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s)
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = exact_solution(c, k, m, 2);
                       printed = std::max(printed, km::projector_residual(F, k, m).amp_norm() / F.amp_norm());
                       const Kind other = k == Kind::K ? Kind::M : Kind::K;
                       opposite = std::max(opposite, km::projector_residual(F, other, m).amp_norm() / F.amp_norm());
                     }
                   char b[96];
                   std::snprintf(b, sizeof b, "opposite mass sign holds to %.1e", opposite);
                   return Outcome{printed, b};
                 }});

  out.push_back({"km.current_single_mode_constant", mod, "km-currents", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s)
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = exact_solution(c, k, m, 1);
                       const CV J0 = km::current(F, random_point(c)), J1 = km::current(F, random_point(c));
                       r = std::max(r, (J0 - J1).norm() / std::max(1.0, J0.norm()));
                       if (!J0.spacetime_grade(1, 1e-12 * std::max(1.0, J0.norm()))) r = std::max(r, 1.0);
                     }
                   r = std::max(r, km::current(CVField{}, random_point(c)).norm());
                   return max_of(r);
                 }});

  out.push_back({"km.current_conservation_closed_form", mod, "km-conservation", 1e-12, Compare::at_most, 6, false,
                 [](Context& c) {
                   // two-momentum superpositions of solutions, relative to the current scale
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s)
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = exact_solution(c, k, m, 2);
                       const auto x = random_point(c);
                       const double scale = std::max(1.0, F.amp_norm() * F.amp_norm());
                       r = std::max(r, km::current_divergence(F, x).norm() / scale);
                     }
                   return max_of(r);
                 }});

  out.push_back({"km.current_conservation_finite_difference", mod, "km-conservation", 1e-6, Compare::at_most, 6, false,
                 [](Context& c) {
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 10); ++s)
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = exact_solution(c, k, m, 2);
                       const auto x = random_point(c);
                       const double scale = std::max(1.0, F.amp_norm() * F.amp_norm());
                       r = std::max(r, km::current_divergence_fd(F, x).norm() / scale);
                     }
                   return max_of(r);
                 }});

  out.push_back({"km.conservation_argument_steps", mod, "km-conservation", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 10); ++s)
                     for (Kind k : {Kind::K, Kind::M}) {
                       const CVField F = exact_solution(c, k, m, 2);
                       const auto st = km::conservation_steps(F, k, m, random_point(c));
                       const double scale = std::max(1.0, F.amp_norm() * F.amp_norm());
                       r = std::max({r, st.first_order / F.amp_norm(), st.split / scale, st.substituted / scale,
                                     st.vanishing / scale});
                     }
                   return max_of(r);
                 }});

  out.push_back({"km.current_divergence_elko_built", mod, "km-conservation", 1e-6, Compare::at_least, 0, false,
                 [](Context& c) {
                   // Elko-built fields violate the field equations and their currents are not conserved
                   double r = 1e300;
                   for (int s = 0; s < std::max(1, c.samples / 10); ++s) {
                     const auto o = fields::build_octet({random_momentum(c), random_momentum(c)}, {1.0, 0.6});
                     for (Kind k : {Kind::K, Kind::M})
                       r = std::min(r, km::current_divergence(km::build(o, k), random_point(c)).norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"km.gauge_coupling_structure", mod, "km-gauge-coupling", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // zero potential reduces to the free residual, (Gamma_5 Gamma_i0)^2 = -1, theta = 0 is the identity
                   double r = 0;
                   const double m = 1.3;
                   for (Kind k : {Kind::K, Kind::M}) {
                     const CVField F = exact_solution(c, k, m, 2);
                     r = std::max(r, (km::gauge_residual(F, k, {}, 0.7, m) - km::km_residual(F, k, m)).amp_norm());
                     const auto T = km::gauge_transform(F, {}, {0, 0, 0}, 0.7);
                     r = std::max(r, (T.f - F).amp_norm());
                   }
                   for (int i = 0; i < 3; ++i) {
                     std::array<double, 3> th{0, 0, 0};
                     th[i] = 1;
                     const Multivector g = km::gauge_generator(th, 1.0);
                     r = std::max(r, ga::dist(g * g, Multivector(-1.0)));
                   }
                   return max_of(r);
                 }});

  out.push_back({"km.gauge_invariance_zero_residual", mod, "km-gauge-invariance", 1e-12, Compare::at_most, 6, false,
                 [](Context& c) {
                   // solutions at zero potential stay solutions after 50 random global transformations
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < 50; ++s) {
                     const Kind k = s % 2 ? Kind::M : Kind::K;
                     const CVField F = exact_solution(c, k, m, 2);
                     const std::array<double, 3> th{c.uniform(-3, 3), c.uniform(-3, 3), c.uniform(-3, 3)};
                     const double q = c.uniform(-2, 2);
                     const auto T = km::gauge_transform(F, {}, th, q);
                     r = std::max(r, km::gauge_residual(T.f, k, T.a, q, m).amp_norm() / F.amp_norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"km.gauge_covariance", mod, "km-gauge-invariance", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // with a constant potential the residual transforms as U R
                   double r = 0;
                   const double m = 1.3;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const Kind k = s % 2 ? Kind::M : Kind::K;
                     const CVField F = exact_solution(c, k, m, 2);
                     km::GaugePotential A;
                     for (auto& v : A.A) v = random_vector(c);
                     const std::array<double, 3> th{c.uniform(-3, 3), c.uniform(-3, 3), c.uniform(-3, 3)};
                     const double q = c.uniform(-2, 2);
                     const auto T = km::gauge_transform(F, A, th, q);
                     const CVField r1 = km::gauge_residual(T.f, k, T.a, q, m);
                     const CVField r0 = km::gauge_residual(F, k, A, q, m).left(CV::internal(T.U));
                     r = std::max(r, (r1 - r0).amp_norm() / std::max(1.0, r0.amp_norm()));
                   }
                   return max_of(r);
                 }});
}

}  // namespace sta::harness
