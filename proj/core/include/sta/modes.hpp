#pragma once

#include <array>
#include <utility>

#include "sta/spinor.hpp"

namespace sta::modes {

using ga::Multivector;
using spinor::CovariantSpinor;

struct OnShellMomentum {
  double m = 1.0;
  std::array<double, 3> p{};

  OnShellMomentum() = default;
  OnShellMomentum(double mass, double px, double py, double pz);

  double E() const;
  double abs_p() const;
  std::array<double, 3> unit() const;  // throws for p = 0
  double rapidity() const;              // asinh(|p|/m)
  // p^mu gamma_mu, which equals p_mu gamma^mu
  Multivector vec() const;
  std::array<double, 4> contravariant() const { return {E(), p[0], p[1], p[2]}; }
  OnShellMomentum reversed() const { return {m, -p[0], -p[1], -p[2]}; }
  Mat4 slash(const rep::GammaRep& r) const;
};

// (p gamma_0 + m)/sqrt(2m(E+m))
Multivector boost_clifford(const OnShellMomentum& p);

// u = L kappa, v = L kappa sigma_3, kappa in {1, -i sigma_2}
struct DiracModes {
  Multivector u, v;
};
DiracModes dirac_modes(const OnShellMomentum& p, int r);

Mat2 sigma_dot(const std::array<double, 3>& n);

// phi+ and phi- for direction n; phi+ has first nonzero component real
// positive, phi- = sigma_2 (phi+)^*
struct HelicityPair {
  Vec2 plus, minus;
};
HelicityPair helicity_states(const std::array<double, 3>& dir);
double helicity_residual(const HelicityPair& h, const std::array<double, 3>& dir);

// (exp(sigma.alpha/2), exp(-sigma.alpha/2)): upper and lower Weyl blocks
std::pair<Mat2, Mat2> half_boost(const std::array<double, 3>& alpha);
Mat4 half_boost_weyl(const std::array<double, 3>& alpha);
// rapidity vector eta * p_hat
std::array<double, 3> rapidity_vector(const OnShellMomentum& p);

enum class ElkoType { lambda_s, lambda_a, rho_s, rho_a };
// helicity of (upper, lower) Weyl blocks
enum class Label { minus_plus, plus_minus };

const char* name(ElkoType t);
const char* name(Label l);
inline bool is_self_conjugate(ElkoType t) { return t == ElkoType::lambda_s || t == ElkoType::rho_s; }
inline bool is_lambda(ElkoType t) { return t == ElkoType::lambda_s || t == ElkoType::lambda_a; }
inline Label flip(Label l) { return l == Label::minus_plus ? Label::plus_minus : Label::minus_plus; }

// Amplitude at p obtained by boosting a rest spinor (Weyl rep).
struct BoostedAmplitude {
  OnShellMomentum p;
  Vec4 rest = Vec4::Zero();
  Vec4 at_p = Vec4::Zero();
};

struct ElkoSpinor {
  ElkoType type = ElkoType::lambda_s;
  Label label = Label::minus_plus;
  BoostedAmplitude amp;
  std::array<double, 3> axis{};  // helicity axis of the rest states

  CovariantSpinor weyl() const { return {amp.at_p, rep::Tag::weyl}; }
  CovariantSpinor standard() const { return weyl().to(rep::Tag::standard); }
  spinor::OperatorSpinor op() const { return spinor::to_operator(standard()); }
};

// Rest spinors use the helicity basis along p_hat; for p = 0 an explicit axis
// must be given.
ElkoSpinor elko_construct(const OnShellMomentum& p, ElkoType t, Label l);
ElkoSpinor elko_construct(const OnShellMomentum& p, ElkoType t, Label l,
                          const std::array<double, 3>& axis);

// Identifications between rho and lambda spinors: rho = factor * lambda.
struct Identification {
  ElkoType rho;
  Label label;
  ElkoType lambda;
  cplx factor;
};
const std::array<Identification, 4>& identifications();
// express e through its identified partner (rho from lambda or vice versa)
CovariantSpinor rho_lambda_identify(const ElkoSpinor& e);

// Momentum reversal on the boost: the same rest spinor carried to -p.
BoostedAmplitude reverse_momentum(const BoostedAmplitude& a);
// P = i gamma^0 R (Weyl rep); result is described at the original momentum
BoostedAmplitude parity_on_elko(const BoostedAmplitude& a);
// The same operator written as (i/m) p_mu gamma^mu
Vec4 parity_on_elko_slash(const BoostedAmplitude& a);

struct ParityRelation {
  ElkoType from;
  Label from_label;
  ElkoType lambda_to;
  Label to_label;
  cplx factor;   // P from = factor * lambda_to
  ElkoType rho_to;  // = rho_to with to_label
};
const std::array<ParityRelation, 4>& parity_relations();

// Boost factor relating lambda'^s_{-+}(p) to its rest value.
double boost_factor_literal(const OnShellMomentum& p);  // sqrt((E+m)/m)(1-|p|/(E+m))
double boost_factor_exact(const OnShellMomentum& p);    // exp(-eta/2)
// measured ratio lambda'^s_{-+}(p) / lambda'^s_{-+}(0) and how far it is from proportional
std::pair<double, double> boost_factor_measured(const OnShellMomentum& p);

// Charge-conjugation eigenvalue residual: |C e - c e| with c = +1 or -1 by type.
double c_eigen_residual(const ElkoSpinor& e);
// Dual-helicity residual of the two Weyl blocks.
double dual_helicity_residual(const ElkoSpinor& e);

struct HelicityDemo {
  Vec4 standard;        // S lambda'
  Vec4 sigma_applied;   // Sigma.p_hat (S lambda')
  Vec4 expected;        // right side written in terms of phi_L
  double proportionality_gap = 0;  // min_c |Sigma v - c v| / |v|
};
HelicityDemo standard_rep_helicity_demo(const ElkoSpinor& e);
// min_c |w - c v| / |v|
double proportionality_gap(const Vec4& v, const Vec4& w);

}  // namespace sta::modes
