#include "sta/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace sta::spinor {

using namespace ga;

namespace {

const cplx I(0, 1);

Multivector isig(int k) { return pseudoscalar() * sigma(k); }

}  // namespace

CovariantSpinor CovariantSpinor::to(rep::Tag t) const {
  if (t == tag) return *this;
  // S maps standard -> weyl and is its own inverse
  return {rep::change_of_basis() * v, t};
}

// psi = m0 + m^k i sigma_k + (n0 + n^k i sigma_k) sigma_3
// components (m0 + i m3, -m2 + i m1, n0 + i n3, -n2 + i n1)
OperatorSpinor to_operator(const CovariantSpinor& s) {
  const Vec4 v = s.to(rep::Tag::standard).v;
  const double m0 = v(0).real(), m3 = v(0).imag();
  const double m2 = -v(1).real(), m1 = v(1).imag();
  const double n0 = v(2).real(), n3 = v(2).imag();
  const double n2 = -v(3).real(), n1 = v(3).imag();
  const Multivector phi = Multivector(m0) + m1 * isig(1) + m2 * isig(2) + m3 * isig(3);
  const Multivector vs = Multivector(n0) + n1 * isig(1) + n2 * isig(2) + n3 * isig(3);
  return phi + vs * sigma(3);
}

CovariantSpinor to_covariant(const OperatorSpinor& psi) {
  // each element of {1, i sigma_k} and {1, i sigma_k} sigma_3 is a signed
  // single blade, so the coefficients come out of scalar products
  auto coef = [&](const Multivector& b) { return scalar_product(psi, b) / scalar_product(b, b); };
  const Multivector s3 = sigma(3);
  const double m0 = coef(Multivector(1.0)), m1 = coef(isig(1)), m2 = coef(isig(2)), m3 = coef(isig(3));
  const double n0 = coef(s3), n1 = coef(isig(1) * s3), n2 = coef(isig(2) * s3), n3 = coef(isig(3) * s3);
  CovariantSpinor out;
  out.v << cplx(m0, m3), cplx(-m2, m1), cplx(n0, n3), cplx(-n2, n1);
  return out;
}

Eigen::RowVector4cd row_readout(const OperatorSpinor& psi) {
  return rep::matrix_rep(psi).row(0);
}

const char* name(DictKind k) {
  switch (k) {
    case DictKind::gamma_mu: return "gamma_mu";
    case DictKind::mult_i: return "mult_i";
    case DictKind::i_gamma5: return "i_gamma5";
    case DictKind::bar: return "bar";
    case DictKind::dagger: return "dagger";
    case DictKind::conjugate: return "conjugate";
  }
  return "?";
}

OperatorSpinor dictionary_apply(DictKind k, const OperatorSpinor& psi, int mu) {
  const Multivector g0 = Multivector::gen(0);
  switch (k) {
    case DictKind::gamma_mu:
      if (mu < 0 || mu > 3) throw std::out_of_range("dictionary_apply: mu");
      return Multivector::gen(mu) * psi * g0;
    case DictKind::mult_i: return psi * gamma21();
    case DictKind::i_gamma5: return psi * sigma(3);
    case DictKind::bar: return psi.reverse();
    case DictKind::dagger: return g0 * psi.reverse() * g0;
    case DictKind::conjugate: {
      const Multivector g2 = Multivector::gen(2);
      return -(g2 * psi * g2);
    }
  }
  throw std::invalid_argument("dictionary_apply: unknown kind");
}

Vec4 dictionary_matrix(DictKind k, const Vec4& v, int mu) {
  const auto& r = rep::standard();
  switch (k) {
    case DictKind::gamma_mu: return r.lower(mu) * v;
    case DictKind::mult_i: return I * v;
    case DictKind::i_gamma5: return I * (r.g5 * v);
    case DictKind::conjugate: return v.conjugate();
    default: break;
  }
  throw std::invalid_argument("dictionary_matrix: row kind");
}

Eigen::RowVector4cd dictionary_matrix_row(DictKind k, const Vec4& v) {
  const auto& r = rep::standard();
  if (k == DictKind::bar) return v.adjoint() * r.up[0];
  if (k == DictKind::dagger) return v.adjoint();
  throw std::invalid_argument("dictionary_matrix_row: column kind");
}

double dictionary_residual(DictKind k, const OperatorSpinor& psi, int mu) {
  const OperatorSpinor img = dictionary_apply(k, psi, mu);
  const Vec4 v = to_covariant(psi).v;
  if (k == DictKind::bar || k == DictKind::dagger)
    return (row_readout(img) - dictionary_matrix_row(k, v)).cwiseAbs().maxCoeff();
  return (to_covariant(img).v - dictionary_matrix(k, v, mu)).cwiseAbs().maxCoeff();
}

OperatorSpinor charge_conjugate(const OperatorSpinor& psi) {
  return psi * Multivector::gen(2) * Multivector::gen(0);
}

CovariantSpinor charge_conjugate(const CovariantSpinor& s) {
  return {-(s.gammas().up[2] * s.v.conjugate()), s.tag};
}

OperatorSpinor parity_rest(const OperatorSpinor& psi) {
  const Multivector g0 = Multivector::gen(0);
  return g0 * psi * g0;
}

OperatorSpinor parity_momentum(const Multivector& p, const OperatorSpinor& psi) {
  const double m2 = (p * p).scalar();
  if (m2 <= 0) throw std::invalid_argument("parity_momentum: m <= 0");
  return (1.0 / std::sqrt(m2)) * p * psi * Multivector::gen(0);
}

Mat4 parity_matrix(double E, double px, double py, double pz, const rep::GammaRep& r) {
  const double m2 = E * E - px * px - py * py - pz * pz;
  if (m2 <= 0) throw std::invalid_argument("parity_matrix: m <= 0");
  return r.slash(E, px, py, pz) / std::sqrt(m2);
}

Multivector ideal_projection(const Multivector& psi) {
  return psi * (0.5 * (Multivector(1.0) + Multivector::gen(0)));
}

}  // namespace sta::spinor
