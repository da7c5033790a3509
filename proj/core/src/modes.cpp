#include "sta/modes.hpp"

#include <cmath>
#include <stdexcept>

namespace sta::modes {

using rep::pauli;

namespace {

const cplx I(0, 1);

Vec4 stack(const Vec2& a, const Vec2& b) {
  Vec4 v;
  v << a, b;
  return v;
}

}  // namespace

OnShellMomentum::OnShellMomentum(double mass, double px, double py, double pz) : m(mass), p{px, py, pz} {
  if (!(m > 0)) throw std::invalid_argument("OnShellMomentum: m <= 0");
}

double OnShellMomentum::E() const { return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }
double OnShellMomentum::abs_p() const { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

std::array<double, 3> OnShellMomentum::unit() const {
  const double a = abs_p();
  if (a == 0) throw std::domain_error("helicity undefined at p = 0");
  return {p[0] / a, p[1] / a, p[2] / a};
}

double OnShellMomentum::rapidity() const { return std::asinh(abs_p() / m); }

Multivector OnShellMomentum::vec() const { return Multivector::vector(E(), p[0], p[1], p[2]); }

Mat4 OnShellMomentum::slash(const rep::GammaRep& r) const { return r.slash(E(), p[0], p[1], p[2]); }

Multivector boost_clifford(const OnShellMomentum& p) {
  if (!(p.m > 0)) throw std::invalid_argument("boost_clifford: m <= 0");
  const double E = p.E();
  return (p.vec() * Multivector::gen(0) + Multivector(p.m)) * (1.0 / std::sqrt(2 * p.m * (E + p.m)));
}

DiracModes dirac_modes(const OnShellMomentum& p, int r) {
  if (r != 1 && r != 2) throw std::invalid_argument("dirac_modes: r must be 1 or 2");
  const Multivector L = boost_clifford(p);
  const Multivector kappa = r == 1 ? Multivector(1.0) : -(ga::pseudoscalar() * ga::sigma(2));
  return {L * kappa, L * kappa * ga::sigma(3)};
}

Mat2 sigma_dot(const std::array<double, 3>& n) {
  return n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
}

HelicityPair helicity_states(const std::array<double, 3>& dir) {
  const double a = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
  if (a == 0) throw std::domain_error("helicity_states: zero direction");
  const double nx = dir[0] / a, ny = dir[1] / a, nz = dir[2] / a;
  // (1 + nz, nx + i ny) is the +1 eigenvector of sigma.n with a real
  // non-negative first component; it degenerates only at n = -z
  Vec2 plus;
  if (1 + nz > 1e-8) {
    plus << cplx(1 + nz, 0), cplx(nx, ny);
  } else {
    // near -z use (nx - i ny, 1 - nz), then fix the phase
    plus << cplx(nx, -ny), cplx(1 - nz, 0);
    const int k = std::abs(plus(0)) > 1e-300 ? 0 : 1;
    plus *= std::conj(plus(k)) / std::abs(plus(k));
  }
  plus.normalize();
  HelicityPair h;
  h.plus = plus;
  h.minus = pauli(2) * plus.conjugate();
  return h;
}

double helicity_residual(const HelicityPair& h, const std::array<double, 3>& dir) {
  const double a = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
  const Mat2 sn = sigma_dot({dir[0] / a, dir[1] / a, dir[2] / a});
  const Mat2& s2 = pauli(2);
  double r = 0;
  r = std::max(r, (sn * h.plus - h.plus).norm());
  r = std::max(r, (sn * h.minus + h.minus).norm());
  r = std::max(r, (sn * (s2 * h.plus.conjugate()) + s2 * h.plus.conjugate()).norm());
  r = std::max(r, (sn * (s2 * h.minus.conjugate()) - s2 * h.minus.conjugate()).norm());
  return r;
}

std::pair<Mat2, Mat2> half_boost(const std::array<double, 3>& alpha) {
  const double a = std::sqrt(alpha[0] * alpha[0] + alpha[1] * alpha[1] + alpha[2] * alpha[2]);
  const Mat2 one = Mat2::Identity();
  if (a == 0) return {one, one};
  const Mat2 sn = sigma_dot({alpha[0] / a, alpha[1] / a, alpha[2] / a});
  const double c = std::cosh(a / 2), s = std::sinh(a / 2);
  return {c * one + s * sn, c * one - s * sn};
}

Mat4 half_boost_weyl(const std::array<double, 3>& alpha) {
  const auto [r, l] = half_boost(alpha);
  Mat4 k = Mat4::Zero();
  k.topLeftCorner<2, 2>() = r;
  k.bottomRightCorner<2, 2>() = l;
  return k;
}

std::array<double, 3> rapidity_vector(const OnShellMomentum& p) {
  const double a = p.abs_p();
  if (a == 0) return {0, 0, 0};
  const double eta = p.rapidity();
  return {eta * p.p[0] / a, eta * p.p[1] / a, eta * p.p[2] / a};
}

const char* name(ElkoType t) {
  switch (t) {
    case ElkoType::lambda_s: return "lambda^s";
    case ElkoType::lambda_a: return "lambda^a";
    case ElkoType::rho_s: return "rho^s";
    case ElkoType::rho_a: return "rho^a";
  }
  return "?";
}

const char* name(Label l) { return l == Label::minus_plus ? "{-+}" : "{+-}"; }

namespace {

Vec4 elko_rest(ElkoType t, Label l, const std::array<double, 3>& axis) {
  const HelicityPair h = helicity_states(axis);
  const Mat2& s2 = pauli(2);
  if (is_lambda(t)) {
    // lower block carries phi_L with the second label entry
    const Vec2 phiL = l == Label::minus_plus ? h.plus : h.minus;
    const Vec2 up = s2 * phiL.conjugate();
    return stack(t == ElkoType::lambda_s ? up : Vec2(-up), phiL);
  }
  // upper block carries phi_R with the first label entry; phi_R is tied to
  // phi_L of the opposite helicity so that the rho/lambda identifications hold
  const bool up_plus = l == Label::plus_minus;
  const Vec2 phiR = up_plus ? Vec2(-I * (s2 * h.minus.conjugate())) : Vec2(I * (s2 * h.plus.conjugate()));
  const Vec2 lo = s2 * phiR.conjugate();
  return stack(phiR, t == ElkoType::rho_s ? Vec2(-lo) : lo);
}

}  // namespace

ElkoSpinor elko_construct(const OnShellMomentum& p, ElkoType t, Label l) {
  return elko_construct(p, t, l, p.unit());
}

ElkoSpinor elko_construct(const OnShellMomentum& p, ElkoType t, Label l, const std::array<double, 3>& axis) {
  ElkoSpinor e;
  e.type = t;
  e.label = l;
  e.axis = axis;
  e.amp.p = p;
  e.amp.rest = elko_rest(t, l, axis);
  e.amp.at_p = half_boost_weyl(rapidity_vector(p)) * e.amp.rest;
  return e;
}

const std::array<Identification, 4>& identifications() {
  static const std::array<Identification, 4> t{{
      {ElkoType::rho_s, Label::plus_minus, ElkoType::lambda_a, I},
      {ElkoType::rho_s, Label::minus_plus, ElkoType::lambda_a, -I},
      {ElkoType::rho_a, Label::plus_minus, ElkoType::lambda_s, -I},
      {ElkoType::rho_a, Label::minus_plus, ElkoType::lambda_s, I},
  }};
  return t;
}

CovariantSpinor rho_lambda_identify(const ElkoSpinor& e) {
  for (const auto& id : identifications()) {
    if (id.label != e.label) continue;
    if (e.type == id.rho) {
      const ElkoSpinor l = elko_construct(e.amp.p, id.lambda, e.label, e.axis);
      return {id.factor * l.amp.at_p, rep::Tag::weyl};
    }
    if (e.type == id.lambda) {
      const ElkoSpinor r = elko_construct(e.amp.p, id.rho, e.label, e.axis);
      return {r.amp.at_p / id.factor, rep::Tag::weyl};
    }
  }
  throw std::logic_error("rho_lambda_identify: no partner");
}

BoostedAmplitude reverse_momentum(const BoostedAmplitude& a) {
  BoostedAmplitude r;
  r.p = a.p.reversed();
  r.rest = a.rest;
  r.at_p = half_boost_weyl(rapidity_vector(r.p)) * a.rest;
  return r;
}

BoostedAmplitude parity_on_elko(const BoostedAmplitude& a) {
  const Mat4 ig0 = I * rep::weyl().up[0];
  const BoostedAmplitude rev = reverse_momentum(a);
  BoostedAmplitude out;
  out.p = a.p;
  out.rest = ig0 * a.rest;
  out.at_p = ig0 * rev.at_p;
  return out;
}

Vec4 parity_on_elko_slash(const BoostedAmplitude& a) {
  return (I / a.p.m) * (a.p.slash(rep::weyl()) * a.at_p);
}

const std::array<ParityRelation, 4>& parity_relations() {
  using T = ElkoType;
  using L = Label;
  static const std::array<ParityRelation, 4> t{{
      {T::lambda_s, L::minus_plus, T::lambda_a, L::plus_minus, I, T::rho_s},
      {T::lambda_s, L::plus_minus, T::lambda_a, L::minus_plus, -I, T::rho_s},
      {T::lambda_a, L::minus_plus, T::lambda_s, L::plus_minus, -I, T::rho_a},
      {T::lambda_a, L::plus_minus, T::lambda_s, L::minus_plus, I, T::rho_a},
  }};
  return t;
}

double boost_factor_literal(const OnShellMomentum& p) {
  const double E = p.E(), m = p.m;
  return std::sqrt((E + m) / m) * (1 - p.abs_p() / (E + m));
}

double boost_factor_exact(const OnShellMomentum& p) {
  const double E = p.E(), m = p.m;
  return std::sqrt((E + m) / (2 * m)) * (1 - p.abs_p() / (E + m));
}

std::pair<double, double> boost_factor_measured(const OnShellMomentum& p) {
  const ElkoSpinor e = elko_construct(p, ElkoType::lambda_s, Label::minus_plus);
  const Vec4& v0 = e.amp.rest;
  const Vec4& v = e.amp.at_p;
  const cplx c = v0.dot(v) / v0.squaredNorm();
  return {c.real(), (v - c * v0).norm() / v.norm() + std::abs(c.imag())};
}

double c_eigen_residual(const ElkoSpinor& e) {
  const CovariantSpinor s = e.weyl();
  const double c = is_self_conjugate(e.type) ? 1.0 : -1.0;
  return (spinor::charge_conjugate(s).v - c * s.v).norm();
}

double dual_helicity_residual(const ElkoSpinor& e) {
  const Mat2 sn = sigma_dot(e.axis);
  const Vec2 up = e.amp.at_p.head<2>(), lo = e.amp.at_p.tail<2>();
  const double hu = e.label == Label::plus_minus ? 1.0 : -1.0;
  return std::max((sn * up - hu * up).norm(), (sn * lo + hu * lo).norm());
}

double proportionality_gap(const Vec4& v, const Vec4& w) {
  const double vv = v.squaredNorm();
  if (vv == 0) return w.norm() == 0 ? 0.0 : 1.0;
  const cplx c = v.dot(w) / vv;
  return (w - c * v).norm() / std::sqrt(vv);
}

HelicityDemo standard_rep_helicity_demo(const ElkoSpinor& e) {
  HelicityDemo d;
  d.standard = rep::change_of_basis() * e.amp.at_p;
  const Mat2 sn = sigma_dot(e.axis);
  Mat4 Sig = Mat4::Zero();
  Sig.topLeftCorner<2, 2>() = sn;
  Sig.bottomRightCorner<2, 2>() = sn;
  d.sigma_applied = Sig * d.standard;
  // each Weyl block is a helicity eigenvector with opposite eigenvalues, so
  // Sigma.p_hat flips the sign of one of them inside the mixture
  const Vec2 up = e.amp.at_p.head<2>(), lo = e.amp.at_p.tail<2>();
  const double hu = e.label == Label::plus_minus ? 1.0 : -1.0;
  const Vec2 a = hu * up, b = -hu * lo;
  d.expected = stack(a + b, a - b) / std::sqrt(2.0);
  d.proportionality_gap = proportionality_gap(d.standard, d.sigma_applied);
  return d;
}

}  // namespace sta::modes
