#include "sta/majorana.hpp"
#include "util.hpp"

namespace sta::harness {

using namespace util;
using majorana::VBoost;

namespace {

double bool_residual(bool ok) { return ok ? 0.0 : 1.0; }

std::array<double, 3> random_p(Context& c, double pmax = 3) {
  const auto d = random_dir(c);
  const double a = c.uniform(0, pmax);
  return {a * d[0], a * d[1], a * d[2]};
}

const std::vector<grassmann::Involution>& involutions() {
  static const std::vector<grassmann::Involution> v = {grassmann::Involution::self_conjugate(4),
                                                       grassmann::Involution::self_conjugate_order_preserving(4),
                                                       grassmann::Involution::paired_graded(4)};
  return v;
}

}  // namespace

void add_majorana_checks(std::vector<CheckDef>& out) {
  const std::string mod = "majorana_grassmann";

  out.push_back({"majorana.weyl_boosted_solutions", mod, "weyl-system", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // equal rest blocks solve the system at rest; boosted pairs solve it at p
                   double r = 0;
                   const double m = 1.2;
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec2 phi = random_vec2(c);
                     r = std::max(r, majorana::weyl_system_residual(phi, phi, {0, 0, 0}, m, 1).norm() / phi.norm());
                     const auto p = random_p(c);
                     const auto w = majorana::boosted_pair(phi, phi, p, m);
                     r = std::max(r, majorana::weyl_system_residual(w.r, w.l, p, m, 1).norm() / phi.norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"majorana.weyl_majorana_pair_not_solution", mod, "weyl-system", 1e-3, Compare::at_least, 0, false,
                 [](Context& c) {
                   // phi_r = i sigma_2 phi_l^* with generic complex phi_l fails the rest-frame system
                   double r = 1e300;
                   const double m = 1.2;
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec2 phi = random_vec2(c);
                     for (int sg : {1, -1})
                       r = std::min(r, majorana::weyl_system_residual(majorana::majorana_partner(phi), phi, {0, 0, 0}, m, sg)
                                           .norm() /
                                           phi.norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"majorana.complex_incompatibility", mod, "majorana-incompatibility", 0, Compare::at_most, 7, false,
                 [](Context& c) {
                   // over complex scalars both sign choices admit only nu = omega = 0
                   int dims = 0;
                   double gap = 1e300;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto k = majorana::majorana_dirac_compatibility(random_vec2(c));
                     dims += k.null_dim_plus + k.null_dim_minus + (k.compatible ? 1 : 0);
                     gap = std::min(gap, std::max(k.gap_plus, k.gap_minus));
                   }
                   const auto z = majorana::majorana_dirac_compatibility(Vec2::Zero());
                   const double r = dims + bool_residual(z.compatible) + bool_residual(gap > 0);
                   return Outcome{r, "solution subspace dimension summed over inputs"};
                 }});

  out.push_back({"majorana.condition_and_boosts", mod, "majorana-condition", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // (phi_l, i sigma_2 phi_l^*) is fixed by i g'^2 psi^*; exp(i pi/4) times it is fixed by -g'^2 psi^*.
                   // Both survive boosts.
                   double r = 0;
                   const cplx ph = std::exp(cplx(0, M_PI / 4));
                   for (int s = 0; s < c.samples; ++s) {
                     const Vec4 psi = majorana::majorana_spinor(random_vec2(c));
                     const auto a = random_p(c, 1.5);
                     const Vec4 b = modes::half_boost_weyl(a) * psi;
                     r = std::max({r, majorana::majorana_condition_residual(psi) / psi.norm(),
                                   majorana::majorana_condition_residual(b) / b.norm()});
                     for (const Vec4& x : {psi, b}) {
                       const Vec4 y = ph * x;
                       r = std::max(r, (majorana::charge_conjugate_weyl(y) - y).norm() / y.norm());
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"majorana.dual_helicity_axis_literal", mod, "majorana-dual-helicity", 1e-12, Compare::at_most, 0,
                 false, [](Context&) {
                   // phi = (1, 0) and i sigma_2 phi both as sigma.z eigenvectors with eigenvalue -1
                   const auto d = majorana::majorana_dual_helicity({0, 0, 1});
                   return Outcome{std::max(d.z_first, d.z_second), "printed eigenvalue assignment along z"};
                 }});

  out.push_back({"majorana.dual_helicity_general", mod, "majorana-dual-helicity", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const auto d = majorana::majorana_dual_helicity(random_dir(c));
                     r = std::max({r, d.eigvec_residual, std::abs(d.eig_upper + d.eig_lower), bool_residual(d.dual)});
                   }
                   return max_of(r);
                 }});

  out.push_back({"majorana.rest_spinors_exact", mod, "quantum-majorana-rest", 0, Compare::at_most, 7, false,
                 [](Context&) {
                   const double h = 1.0 / std::sqrt(2.0);
                   const auto q = majorana::quantum_majorana_rest();
                   const std::array<Vec4, 4> want = {Vec4(h, 0, h, 0), Vec4(0, h, 0, h), Vec4(0, h, 0, -h),
                                                     Vec4(-h, 0, h, 0)};
                   const std::array<Vec4, 4> got = {q.u0[0], q.u0[1], q.v0[0], q.v0[1]};
                   int mismatched = 0;
                   for (int i = 0; i < 4; ++i)
                     for (int k = 0; k < 4; ++k) mismatched += got[i][k] != want[i][k];
                   return Outcome{double(mismatched), "count of components differing bitwise"};
                 }});

  out.push_back({"majorana.rest_parity_exact", mod, "quantum-majorana-rest", 0, Compare::at_most, 7, false,
                 [](Context&) { return max_of(majorana::rest_parity_residual(majorana::quantum_majorana_rest())); }});

  out.push_back({"majorana.boosted_v_label", mod, "quantum-majorana-boost", 1e-12, Compare::at_most, 7, true,
                 [](Context& c) {
                   // the second boosted spinor is v with (m + pslash g'^0); the printed form repeats the u label
                   // and carries (m - pslash g'^0)
                   double corrected = 0, literal = 0;
                   for (int i = 0; i < c.samples; ++i) {
                     const auto p = random_momentum(c, 1.0, 3.0);
                     for (int s : {1, -1}) {
                       corrected = std::max(corrected, majorana::momentum_dirac_residual(p, s, VBoost::corrected).v);
                       literal = std::max(literal, majorana::momentum_dirac_residual(p, s, VBoost::literal).v);
                     }
                   }
                   return Outcome{corrected, "printed v built with m - pslash g'^0", literal};
                 }});

  out.push_back({"majorana.momentum_dirac_u_v", mod, "quantum-majorana-boost", 1e-12, Compare::at_most, 7, false,
                 [](Context& c) {
                   double r = 0;
                   for (int i = 0; i < c.samples; ++i) {
                     const auto p = random_momentum(c, c.uniform(0.5, 2.0), 5.0);
                     for (int s : {1, -1}) {
                       const auto d = majorana::momentum_dirac_residual(p, s, VBoost::corrected);
                       r = std::max({r, d.u, d.v});
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"majorana.rest_spinors_not_dual_helicity", mod, "quantum-majorana-boost", 1e-12, Compare::at_most, 0,
                 false, [](Context& c) {
                   // u(0, s) boosted along z has both blocks in the same sigma_z eigenspace
                   double r = 0;
                   for (int i = 0; i < std::max(1, c.samples / 10); ++i)
                     for (int s : {1, -1}) {
                       const auto h = majorana::rest_spinor_block_helicities(c.uniform(-3, 3), 1.0, s);
                       r = std::max({r, std::abs(h[0] - h[1]), h[2], std::abs(std::abs(h[0]) - 1)});
                     }
                   return max_of(r);
                 }});

  out.push_back({"majorana.grassmann_involution_chain", mod, "grassmann-majorana", 0, Compare::at_most, 7, false,
                 [](Context& c) {
                   // exact: antilinear product rule, ** = id and (i w^*)^* = -i w for self-conjugate generators
                   std::mt19937_64 rng(c.rng());
                   double r = 0;
                   for (const auto& inv : {involutions()[0], involutions()[1]}) {
                     const auto g = majorana::grassmann_majorana_check(inv, rng, 5);
                     r += bool_residual(g.axioms) + bool_residual(g.star_star_identity) + bool_residual(g.chain_steps);
                   }
                   return Outcome{r, "count of failed exact identities"};
                 }});

  out.push_back({"majorana.grassmann_example_both_conditions", mod, "grassmann-majorana", 0, Compare::at_most, 7, false,
                 [](Context& c) {
                   // nu = theta_1, omega = -i theta_1^* against both conditions, under each involution
                   std::mt19937_64 rng(c.rng());
                   int best = 2;
                   std::string note;
                   for (const auto& inv : involutions()) {
                     const auto g = majorana::grassmann_majorana_check(inv, rng, 2);
                     const int failed = !g.example_plus + !g.example_minus;
                     best = std::min(best, failed);
                     note += (note.empty() ? "" : "; ") + g.involution + ": " + (g.example_plus ? "first holds" : "first fails") +
                             ", " + (g.example_minus ? "second holds" : "second fails");
                   }
                   return Outcome{double(best), note};
                 }});

  out.push_back({"majorana.grassmann_conditions_compatible", mod, "grassmann-majorana", 0, Compare::at_most, 7, false,
                 [](Context& c) {
                   // a nonzero degree-1 field satisfying both conditions, under any involution
                   std::mt19937_64 rng(c.rng());
                   bool any = false;
                   std::string note;
                   for (const auto& inv : involutions()) {
                     const auto g = majorana::grassmann_majorana_check(inv, rng, 2);
                     any = any || g.compatible_nontrivial;
                     note += (note.empty() ? "" : "; ") + g.involution + ": dims " + std::to_string(g.dim_plus) + "/" +
                             std::to_string(g.dim_minus) + "/" + std::to_string(g.dim_both) + " of " +
                             std::to_string(g.dim_total);
                   }
                   return Outcome{bool_residual(any), note};
                 }});

  out.push_back({"majorana.grassmann_rest_dirac", mod, "grassmann-majorana", 0, Compare::at_most, 0, false,
                 [](Context& c) {
                   // the rest-frame Dirac condition has the same solution space as the first condition
                   std::mt19937_64 rng(c.rng());
                   double r = 0;
                   for (const auto& inv : involutions()) {
                     const auto g = majorana::grassmann_majorana_check(inv, rng, 2);
                     r += bool_residual(g.rest_dirac_is_plus) + bool_residual(g.implication);
                   }
                   return max_of(r);
                 }});

  out.push_back({"majorana.grassmann_current_zero", mod, "grassmann-majorana", 0, Compare::at_most, 7, false,
                 [](Context& c) {
                   std::mt19937_64 rng(c.rng());
                   const auto g = majorana::grassmann_majorana_check(involutions()[0], rng, 5);
                   return Outcome{bool_residual(g.current_zero), "self-conjugate generators, random degree-1 fields"};
                 }});

  out.push_back({"majorana.grassmann_axial_current_nonzero", mod, "grassmann-majorana", 0, Compare::at_most, 0, false,
                 [](Context& c) {
                   std::mt19937_64 rng(c.rng());
                   const auto g = majorana::grassmann_majorana_check(involutions()[0], rng, 5);
                   return max_of(bool_residual(g.axial_nonzero));
                 }});
}

}  // namespace sta::harness
