#include <cmath>
#include <stdexcept>

#include "sta/propagators.hpp"
#include "util.hpp"

namespace sta::harness {

using namespace util;
using km::CV;
using prop::Four;
using prop::Three;

namespace {

CV random_cv(Context& c) {
  CV x;
  for (const auto& b : km::internal_basis()) x += CV::tensor(random_mv(c), b);
  return x;
}

Four off_shell(Context& c, double m) {
  for (;;) {
    const Four p{c.uniform(-3, 3), c.uniform(-3, 3), c.uniform(-3, 3), c.uniform(-3, 3)};
    if (std::abs(p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3] - m * m) > 0.1) return p;
  }
}

Three random_three(Context& c, double a = 2) { return {c.uniform(-a, a), c.uniform(-a, a), c.uniform(-a, a)}; }

CV vec(const Four& p) { return CV::spacetime(ga::Multivector::vector(p[0], p[1], p[2], p[3])); }
CV e0() { return CV::spacetime(ga::Multivector::gen(0)); }
CV e21() { return CV::spacetime(ga::gamma21()); }

// G with n = (-sin phi, cos phi, 0) for a given angle
Mat4 g_from_angle(double phi) {
  const auto& r = rep::standard();
  return prop::gamma5() * (-std::sin(phi) * r.up[1] + std::cos(phi) * r.up[2]);
}

double bool_residual(bool ok) { return ok ? 0.0 : 1.0; }

Outcome verdict_check(Context& c, int index, prop::Locality want) {
  const auto& scan = c.nonlocality();
  const auto& d = scan.at(index);
  std::string note = std::string(prop::name(d.verdict)) + ", magnitudes";
  char b[32];
  for (double v : d.magnitude) {
    std::snprintf(b, sizeof b, " %.3e", v);
    note += b;
  }
  return Outcome{bool_residual(d.verdict == want), note};
}

}  // namespace

void add_propagator_checks(std::vector<CheckDef>& out) {
  const std::string mod = "propagators";

  out.push_back({"prop.kernel_defining_equation", mod, "propagator-kernel", 1e-12, Compare::at_most, 8, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const double m = c.uniform(0.5, 2);
                     const CV P = random_cv(c);
                     r = std::max(r, prop::defining_residual(off_shell(c, m), P, m) / P.norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"prop.kernel_structure", mod, "propagator-kernel", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // massless limit, linearity, internal factors as spectators, and the pole guard
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const Four p = off_shell(c, 0);
                     const CV P = random_cv(c), Q = random_cv(c);
                     const double p2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
                     r = std::max(r, (prop::kernel_apply(p, P, 0) - (1 / p2) * (vec(p) * P)).norm() / P.norm());
                     const double m = c.uniform(0.5, 2);
                     const Four q = off_shell(c, m);
                     const double a = c.uniform(-2, 2);
                     r = std::max(r, (prop::kernel_apply(q, P + a * Q, m) - prop::kernel_apply(q, P, m) -
                                      a * prop::kernel_apply(q, Q, m)).norm() /
                                         (P.norm() + Q.norm()));
                     const CV X = CV::internal(random_even(c));
                     r = std::max(r, (prop::kernel_apply(q, P * X, m) - prop::kernel_apply(q, P, m) * X).norm() /
                                         (P.norm() * std::max(1.0, X.norm())));
                     const CV pp = vec(q) * vec(q);
                     r = std::max(r, (pp - CV::spacetime(ga::Multivector(q[0] * q[0] - q[1] * q[1] - q[2] * q[2] - q[3] * q[3]))).norm());
                   }
                   bool guarded = false;
                   try {
                     prop::kernel_apply({std::sqrt(2.0), 1, 0, 0}, random_cv(c), 1.0);
                   } catch (const std::domain_error&) {
                     guarded = true;
                   }
                   return max_of(std::max(r, bool_residual(guarded)));
                 }});

  out.push_back({"prop.causal_split_residues", mod, "causal-split", 1e-8, Compare::at_most, 8, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const CV P = random_cv(c);
                     r = std::max(r, prop::residue_mismatch(random_three(c), c.uniform(0.5, 2), P) / P.norm());
                   }
                   return Outcome{r, "64-point contour quadrature"};
                 }});

  out.push_back({"prop.causal_split_time_ordering", mod, "causal-split", 1e-8, Compare::at_most, 8, true,
                 [](Context& c) {
                   // the contour closed for t > t' encloses only the +E pole; the printed split gives that time
                   // ordering to both terms, so the printed residual is the backward term it adds
                   double corrected = 0, literal = 1e300;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const CV P = random_cv(c);
                     const Three p = random_three(c);
                     const double m = c.uniform(0.5, 2);
                     corrected = std::max(corrected, prop::residue_mismatch(p, m, P) / P.norm());
                     literal = std::min(literal, prop::causal_split(p, m, P).backward.norm() / P.norm());
                   }
                   return Outcome{corrected, "printed form puts the backward term at t > t'", literal};
                 }});

  out.push_back({"prop.causal_split_limits", mod, "causal-split", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   // m = 0: both terms equal; forward/backward carry -/+ e21; doubling |p| at m = 0 halves 1/2E
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const CV P = random_cv(c);
                     const Three p = random_three(c);
                     const auto a = prop::causal_split(p, 0, P);
                     r = std::max(r, (a.plus - a.minus).norm() / P.norm());
                     const auto b = prop::causal_split({2 * p[0], 2 * p[1], 2 * p[2]}, 0, P);
                     r = std::max(r, std::abs(b.E - 2 * a.E) / a.E);
                     const auto d = prop::causal_split(p, 1.3, P);
                     r = std::max(r, (d.forward + d.plus * e21()).norm() / P.norm());
                     r = std::max(r, (d.backward - d.minus * e21()).norm() / P.norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"prop.rewriting_first", mod, "elko-dirac-propagator", 1e-12, Compare::at_most, 8, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec4 l = random_vec4(c), rho = random_vec4(c);
                     r = std::max(r, prop::rewriting_residual(off_shell(c, 1), l, rho, 1.0).first / (l.norm() + rho.norm()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"prop.rewriting_second", mod, "elko-dirac-propagator", 1e-12, Compare::at_most, 8, false,
                 [](Context& c) {
                   // source m(lambda + rho) as printed; m(lambda - rho) makes the identity hold
                   double r = 0, corrected = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec4 l = random_vec4(c), rho = random_vec4(c);
                     const double m = c.uniform(0.5, 2);
                     const Four p = off_shell(c, m);
                     r = std::max(r, prop::rewriting_residual(p, l, rho, m).second / (l.norm() + rho.norm()));
                     const Mat4 ps = rep::standard().slash(p[0], p[1], p[2], p[3]);
                     const Vec4 d = (ps * rho - m * rho) - m * (l - rho) - (ps * rho - m * l);
                     corrected = std::max(corrected, d.norm() / (l.norm() + rho.norm()));
                   }
                   char b[96];
                   std::snprintf(b, sizeof b, "residual is 2m|rho|; source m(lambda - rho) gives %.1e", corrected);
                   return Outcome{r, b};
                 }});

  out.push_back({"prop.dirac_kernel", mod, "elko-dirac-propagator", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // (pslash - m)(pslash - m)^-1 = 1, lambda recovered from its source, zero source gives zero
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const double m = c.uniform(0.5, 2);
                     const Four p = off_shell(c, m);
                     r = std::max(r, prop::dirac_kernel_inverse_residual(p, m));
                     const Vec4 l = random_vec4(c);
                     const Mat4 ps = rep::standard().slash(p[0], p[1], p[2], p[3]);
                     const Vec4 src = ps * l - m * l;
                     r = std::max(r, (prop::propagate_source(p, src, m) - l).norm() / l.norm());
                     r = std::max(r, prop::propagate_source(p, Vec4::Zero(), m).norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"prop.born_final_state", mod, "born-final-state", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // q = 0 and momentum mismatch give zero; the matched amplitude equals the closed-form product
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     const CV A = random_cv(c), K = random_cv(c);
                     const Three pA = random_three(c), pin = random_three(c);
                     const Three pf{pin[0] + pA[0], pin[1] + pA[1], pin[2] + pA[2]};
                     const double m = c.uniform(0.5, 2), q = c.uniform(-2, 2);
                     r = std::max(r, prop::born_final_state(A, pA, K, pin, pf, 0, m).norm());
                     r = std::max(r, prop::born_final_state(A, pA, K, pin, {pf[0] + 0.1, pf[1], pf[2]}, q, m).norm());
                     const double Ef = std::sqrt(m * m + pf[0] * pf[0] + pf[1] * pf[1] + pf[2] * pf[2]);
                     const CV AK = A * K;
                     const CV want = (q / (2 * Ef)) * ((vec({Ef, pf[0], pf[1], pf[2]}) * AK + m * (AK * e0())) * e21());
                     r = std::max(r, (prop::born_final_state(A, pA, K, pin, pf, q, m) - want).norm() /
                                         std::max(1.0, want.norm()));
                   }
                   return max_of(r);
                 }});

  out.push_back({"prop.g_field", mod, "g-field", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   // G^2 = 1, n spacelike unit with n_0 = 0, phi = 0 gives n = (0, 1, 0), no pz dependence,
                   // and the polar axis is rejected
                   double r = 0;
                   const Three n0 = prop::n_angular({1, 0, 0});
                   r = std::max({r, std::abs(n0[0]), std::abs(n0[1] - 1), std::abs(n0[2])});
                   for (int s = 0; s < c.samples; ++s) {
                     const Three p = random_three(c);
                     const Mat4 G = prop::build_G(p);
                     r = std::max(r, mat_err(G * G, Mat4::Identity()));
                     const Three n = prop::n_angular(p);
                     r = std::max(r, std::abs(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] - 1));
                     r = std::max(r, mat_err(G, g_from_angle(std::atan2(p[1], p[0]))));
                     r = std::max(r, mat_err(G, prop::build_G({p[0], p[1], c.uniform(-5, 5)})));
                   }
                   bool guarded = false;
                   try {
                     prop::build_G({0, 0, 1});
                   } catch (const std::domain_error&) {
                     guarded = true;
                   }
                   return max_of(std::max(r, bool_residual(guarded)));
                 }});

  out.push_back({"prop.g_tau_form", mod, "g-field", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   // n in terms of tau = p_y / p_x against the angular form
                   double r = 0, printed = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     Three p = random_three(c);
                     if (std::abs(p[0]) < 1e-3) p[0] = 0.5;
                     const Three a = prop::n_angular(p), t = prop::n_tau(p), q = prop::n_tau_printed(p);
                     for (int k = 0; k < 3; ++k) {
                       r = std::max(r, std::abs(a[k] - t[k]));
                       printed = std::max(printed, std::abs(a[k] - q[k]));
                     }
                   }
                   char b[96];
                   std::snprintf(b, sizeof b, "printed second component differs by up to %.2f", printed);
                   return Outcome{r, b};
                 }});

  out.push_back({"prop.g_parametrization", mod, "g-field", 1e-12, Compare::at_most, 0, true, [](Context& c) {
                   // with the polar axis along z, G depends on the azimuth in the xy-plane only; the printed
                   // parametrization (polar axis along x) makes the angle atan2(p_z, p_y) and G depends on p_z
                   double corrected = 0, literal = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Three p = random_three(c);
                     corrected = std::max(corrected, mat_err(prop::build_G(p), prop::build_G({p[0], p[1], 0})));
                     literal = std::max(literal, mat_err(g_from_angle(std::atan2(p[2], p[1])),
                                                         g_from_angle(std::atan2(0.0, p[1]))));
                   }
                   return Outcome{corrected, "printed angle atan2(p_z, p_y)", literal};
                 }});

  // transform of G, sampled once per context configuration
  out.push_back({"fourier.channels", mod, "fourier-transform", 1e-10, Compare::at_most, 9, false, [](Context& c) {
                   return Outcome{c.fourier_report().channel_leak, "largest other channel relative to the peak"};
                 }});
  out.push_back({"fourier.imaginary_coefficients", mod, "fourier-transform", 1e-8, Compare::at_most, 0, false,
                 [](Context& c) { return max_of(c.fourier_report().real_part_leak); }});
  out.push_back({"fourier.odd_parity", mod, "fourier-transform", 1e-10, Compare::at_most, 0, false,
                 [](Context& c) { return max_of(c.fourier_report().parity_residual); }});
  out.push_back({"fourier.radial_exponent", mod, "fourier-transform", 0.1, Compare::at_most, 9, false,
                 [](Context& c) {
                   const auto& f = c.fourier_report();
                   char b[160];
                   std::snprintf(b, sizeof b, "exponent %.4f, confidence half-width %.2e, required grid %d", f.radial_exponent,
                                 f.exponent_halfwidth, f.required_grid);
                   return Outcome{std::abs(f.radial_exponent + 2), b};
                 }});
  out.push_back({"fourier.azimuthal_correlation", mod, "fourier-transform", 0.99, Compare::at_least, 9, false,
                 [](Context& c) { return max_of(c.fourier_report().azimuthal_correlation); }});
  out.push_back({"fourier.offplane_decreasing", mod, "fourier-transform", 0, Compare::at_most, 9, false,
                 [](Context& c) {
                   const auto& f = c.fourier_report();
                   std::string note = "ratios";
                   char b[32];
                   for (double v : f.offplane_ratio) {
                     std::snprintf(b, sizeof b, " %.3e", v);
                     note += b;
                   }
                   return Outcome{bool_residual(f.offplane_decreasing), note};
                 }});
  out.push_back({"fourier.quadrature_vs_closed_form", mod, "fourier-transform", 1e-6, Compare::at_most, 0, false,
                 [](Context& c) {
                   return Outcome{c.fourier_report().quadrature_log_error, "largest log ratio on the radial line"};
                 }});
  out.push_back({"fourier.runtime", mod, "fourier-transform", 60, Compare::at_most, 9, false, [](Context& c) {
                   return Outcome{c.fourier_report().seconds, "seconds"};
                 },
                 true});

  out.push_back({"nonlocality.z_axis_local", mod, "nonlocality-plane", 0, Compare::at_most, 0, false,
                 [](Context& c) { return verdict_check(c, 0, prop::Locality::local); }});
  out.push_back({"nonlocality.x_axis_nonlocal", mod, "nonlocality-plane", 0, Compare::at_most, 0, false,
                 [](Context& c) { return verdict_check(c, 1, prop::Locality::nonlocal); }});
  out.push_back({"nonlocality.xz_diagonal_local", mod, "nonlocality-plane", 0, Compare::at_most, 0, false,
                 [](Context& c) { return verdict_check(c, 2, prop::Locality::local); }});
  out.push_back({"nonlocality.xy_diagonal_nonlocal", mod, "nonlocality-plane", 0, Compare::at_most, 0, false,
                 [](Context& c) { return verdict_check(c, 3, prop::Locality::nonlocal); }});
}

}  // namespace sta::harness
