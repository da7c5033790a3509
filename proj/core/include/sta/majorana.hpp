#pragma once

#include <array>
#include <random>
#include <string>

#include "sta/grassmann.hpp"
#include "sta/modes.hpp"

namespace sta::majorana {

using Dir = std::array<double, 3>;

// Two-component momentum-space Weyl system
//   (p0 - sigma.p) phi_r - sign m phi_l,  (p0 + sigma.p) phi_l - sign m phi_r
struct WeylResidual {
  Vec2 r, l;
  double norm() const { return std::sqrt(r.squaredNorm() + l.squaredNorm()); }
};
WeylResidual weyl_system_residual(const Vec2& phi_r, const Vec2& phi_l, const Dir& p, double m, int sign);

// rest blocks boosted with (p0 + m +/- sigma.p) / sqrt(2m(p0 + m))
struct WeylPair {
  Vec2 r, l;
};
WeylPair boosted_pair(const Vec2& phi_r0, const Vec2& phi_l0, const Dir& p, double m);

Vec2 majorana_partner(const Vec2& phi_l);  // i sigma_2 phi_l^*
Vec4 majorana_spinor(const Vec2& phi_l);   // (phi_l, i sigma_2 phi_l^*), Weyl rep
// i gamma'^2 psi^* - psi; the pair form above is a fixed point of this conjugation
double majorana_condition_residual(const Vec4& psi);
// -gamma'^2 psi^*, the charge conjugation used for the Elko construction
Vec4 charge_conjugate_weyl(const Vec4& psi);

// Solutions of phi_l(0) = +/- i sigma_2 phi_l(0)^* over complex scalars: the condition is
// real-linear in (Re nu, Im nu, Re omega, Im omega), so the solution set is a real subspace.
struct Compatibility {
  int null_dim_plus = 0, null_dim_minus = 0;  // dimension of each solution subspace
  double gap_plus = 0, gap_minus = 0;         // |phi - (+/-) i sigma_2 phi^*| for the given input
  bool compatible = false;                    // the input satisfies one of the two signs
};
Compatibility majorana_dirac_compatibility(const Vec2& phi_l0, double tol = 1e-12);

struct DualHelicityReport {
  // residuals of sigma.z phi = -phi and sigma.z (i sigma_2 phi) = -i sigma_2 phi for phi = (1, 0)
  double z_first = 0, z_second = 0;
  // general direction: phi_l a helicity eigenvector, partner block i sigma_2 phi_l^*
  double eig_upper = 0, eig_lower = 0;
  double eigvec_residual = 0;  // max |sigma.n b - lambda b| over the two blocks
  bool dual = false;           // opposite eigenvalues
};
DualHelicityReport majorana_dual_helicity(const Dir& dir);

// Rest spinors of the quantized Majorana field in the Weyl representation
struct QuantumMajorana {
  std::array<Vec4, 2> u0, v0;  // index 0: s = +1/2, index 1: s = -1/2
};
QuantumMajorana quantum_majorana_rest();
// largest |gamma'^0 u - u| and |gamma'^0 v + v|
double rest_parity_residual(const QuantumMajorana& q);

enum class VBoost { literal, corrected };
// u(p) = (m + pslash g'^0) u0 / sqrt(2 p0 (p0 + m)); v uses (m -/+ pslash g'^0) for literal/corrected
Vec4 boosted_u(const modes::OnShellMomentum& p, int s);
Vec4 boosted_v(const modes::OnShellMomentum& p, int s, VBoost form);
struct MomentumDiracResidual {
  double u = 0, v = 0;  // |(pslash - m) u|, |(pslash + m) v|
};
MomentumDiracResidual momentum_dirac_residual(const modes::OnShellMomentum& p, int s, VBoost form);
// Boost u(0,s) along z: the two blocks share the sigma_z eigenvalue. Returns
// (eigenvalue upper, eigenvalue lower, eigenvector residual).
std::array<double, 3> rest_spinor_block_helicities(double pz, double m, int s);

// Grassmann-valued Majorana spinors (phi_L, -sigma_2 phi_L^*)
using GElement = grassmann::Element;
using GSpinor = std::array<GElement, 4>;
GSpinor grassmann_majorana(const GElement& nu, const GElement& omega, const grassmann::Involution& inv);

struct GrassmannReport {
  std::string involution;
  int generators = 0;
  bool axioms = false;              // additive, antilinear and the product rule on random elements
  bool star_star_identity = false;  // star star = id on random elements
  bool chain_steps = false;  // (i w^*)^* = -i w^{**} = -i w on random elements
  // plus: nu = i omega^*, omega = -i nu^*; minus: nu = -i omega^*, omega = i nu^*
  // real dimension of degree-1 (nu, omega) solving each system, out of 4N
  int dim_total = 0;
  int dim_plus = 0, dim_minus = 0, dim_both = 0;
  int dim_plus_selfconj = 0, dim_all = 0;
  int dim_rest_dirac = 0;
  bool rest_dirac_is_plus = false;  // same solution space (both systems together have the same dimension)
  bool implication = false;           // plus with self-conjugate nu, omega implies minus
  bool compatible_nontrivial = false;  // a nonzero field satisfies plus and minus together
  bool example_plus = false, example_minus = false;  // nu = theta_1, omega = -i theta_1^*
  bool current_zero = false;   // psi^dagger g'^0 g'^mu psi = 0 for random degree-1 phi_L
  bool axial_nonzero = false;  // psi^dagger g'^0 g'^5 g'^mu psi has a nonzero component
};
GrassmannReport grassmann_majorana_check(const grassmann::Involution& inv, std::mt19937_64& rng, int samples = 5);

}  // namespace sta::majorana
