#include "sta/majorana.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sta::majorana {

using grassmann::Element;
using grassmann::Involution;
using grassmann::Q;
using grassmann::QC;

namespace {

const cplx I(0, 1);

Mat2 i_sigma2() { return I * rep::pauli(2); }

double p0_of(const Dir& p, double m) { return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

Vec4 stack(const Vec2& a, const Vec2& b) {
  Vec4 v;
  v << a, b;
  return v;
}

// exact gamma'^mu with entries in {0, +-1, +-i}
using QMat4 = std::array<std::array<QC, 4>, 4>;

QMat4 exact_gamma(int mu) {
  const Mat4& g = rep::weyl().up[mu];
  QMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r[i][j] = QC(Q(static_cast<long>(std::lround(g(i, j).real()))), Q(static_cast<long>(std::lround(g(i, j).imag()))));
  return r;
}

QMat4 qmul(const QMat4& a, const QMat4& b) {
  QMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

// psi^dagger M psi with psi^dagger_a = psi_a^*
Element bilinear(const GSpinor& psi, const QMat4& M, const Involution& inv) {
  Element out(psi[0].generators());
  for (int a = 0; a < 4; ++a) {
    const Element sa = psi[a].star(inv);
    for (int b = 0; b < 4; ++b)
      if (!M[a][b].is_zero()) out = out + (sa * (M[a][b] * psi[b]));
  }
  return out;
}

using Constraint = std::function<std::vector<Element>(const Element& nu, const Element& om)>;

// real dimension of the degree-1 (nu, omega) satisfying every constraint
int solution_dim(int n, const std::vector<Constraint>& cs) {
  std::vector<std::vector<Q>> rows;
  for (int k = 0; k < 4 * n; ++k) {
    const int which = k / (2 * n), rem = k % (2 * n);
    const QC c = rem < n ? QC(1) : QC::I();
    const Element g = Element::generator(n, rem % n, c);
    const Element nu = which == 0 ? g : Element(n), om = which == 1 ? g : Element(n);
    std::vector<Q> row;
    for (const auto& con : cs)
      for (const auto& e : con(nu, om))
        for (int j = 0; j < n; ++j) {
          const QC v = e.coeff(1u << j);
          row.push_back(v.re);
          row.push_back(v.im);
        }
    rows.push_back(std::move(row));
  }
  return 4 * n - static_cast<int>(grassmann::rank(rows));
}

}  // namespace

WeylResidual weyl_system_residual(const Vec2& phi_r, const Vec2& phi_l, const Dir& p, double m, int sign) {
  const double p0 = p0_of(p, m);
  const Mat2 sp = modes::sigma_dot(p);
  const Mat2 one = Mat2::Identity();
  return {(p0 * one - sp) * phi_r - double(sign) * m * phi_l, (p0 * one + sp) * phi_l - double(sign) * m * phi_r};
}

WeylPair boosted_pair(const Vec2& phi_r0, const Vec2& phi_l0, const Dir& p, double m) {
  const double p0 = p0_of(p, m), n = std::sqrt(2 * m * (p0 + m));
  const Mat2 sp = modes::sigma_dot(p);
  const Mat2 a = (p0 + m) * Mat2::Identity();
  return {(a + sp) * phi_r0 / n, (a - sp) * phi_l0 / n};
}

Vec2 majorana_partner(const Vec2& phi_l) { return i_sigma2() * phi_l.conjugate(); }
Vec4 majorana_spinor(const Vec2& phi_l) { return stack(phi_l, majorana_partner(phi_l)); }

double majorana_condition_residual(const Vec4& psi) {
  return (I * rep::weyl().up[2] * psi.conjugate() - psi).norm();
}

Vec4 charge_conjugate_weyl(const Vec4& psi) { return -rep::weyl().up[2] * psi.conjugate(); }

Compatibility majorana_dirac_compatibility(const Vec2& phi_l0, double tol) {
  Compatibility c;
  const Vec2 partner = majorana_partner(phi_l0);
  c.gap_plus = (phi_l0 - partner).norm();
  c.gap_minus = (phi_l0 + partner).norm();
  c.compatible = std::min(c.gap_plus, c.gap_minus) <= tol * (1 + phi_l0.norm());
  // real 4x4 map x -> phi -/+ i sigma_2 phi^* on (Re nu, Im nu, Re omega, Im omega)
  for (int sgn : {1, -1}) {
    Eigen::Matrix4d A;
    for (int k = 0; k < 4; ++k) {
      Vec2 e = Vec2::Zero();
      e(k / 2) = (k % 2) ? I : cplx(1);
      const Vec2 out = e - double(sgn) * majorana_partner(e);
      A.col(k) << out(0).real(), out(0).imag(), out(1).real(), out(1).imag();
    }
    Eigen::FullPivLU<Eigen::Matrix4d> lu(A);
    const int dim = 4 - static_cast<int>(lu.rank());
    (sgn > 0 ? c.null_dim_plus : c.null_dim_minus) = dim;
  }
  return c;
}

DualHelicityReport majorana_dual_helicity(const Dir& dir) {
  DualHelicityReport r;
  const Mat2 sz = rep::pauli(3);
  const Vec2 phi(1, 0);
  r.z_first = (sz * phi + phi).norm();
  const Vec2 b = i_sigma2() * phi;
  r.z_second = (sz * b + b).norm();

  const Mat2 sn = modes::sigma_dot(dir);
  const Vec2 up = modes::helicity_states(dir).plus;
  const Vec2 lo = majorana_partner(up);
  r.eig_upper = (up.adjoint() * sn * up)(0).real() / up.squaredNorm();
  r.eig_lower = (lo.adjoint() * sn * lo)(0).real() / lo.squaredNorm();
  r.eigvec_residual = std::max((sn * up - r.eig_upper * up).norm(), (sn * lo - r.eig_lower * lo).norm());
  r.dual = r.eig_upper * r.eig_lower < 0;
  return r;
}

QuantumMajorana quantum_majorana_rest() {
  const double h = 1.0 / std::sqrt(2.0);
  QuantumMajorana q;
  const std::array<Vec2, 2> chi = {Vec2(1, 0), Vec2(0, 1)};
  for (int s = 0; s < 2; ++s) {
    // u: equal blocks; v: blocks eta, -eta with eta = -i sigma_2 chi
    const Vec2 eta = -i_sigma2() * chi[s];
    q.u0[s] = h * stack(chi[s], chi[s]);
    q.v0[s] = h * stack(eta, -eta);
  }
  return q;
}

double rest_parity_residual(const QuantumMajorana& q) {
  const Mat4& g0 = rep::weyl().up[0];
  double r = 0;
  for (int s = 0; s < 2; ++s) {
    r = std::max(r, (g0 * q.u0[s] - q.u0[s]).norm());
    r = std::max(r, (g0 * q.v0[s] + q.v0[s]).norm());
  }
  return r;
}

static int spin_index(int s) { return s > 0 ? 0 : 1; }

Vec4 boosted_u(const modes::OnShellMomentum& p, int s) {
  const Mat4 ps = p.slash(rep::weyl());
  const double n = std::sqrt(2 * p.E() * (p.E() + p.m));
  return (p.m * Mat4::Identity() + ps * rep::weyl().up[0]) * quantum_majorana_rest().u0[spin_index(s)] / n;
}

Vec4 boosted_v(const modes::OnShellMomentum& p, int s, VBoost form) {
  const Mat4 ps = p.slash(rep::weyl());
  const double n = std::sqrt(2 * p.E() * (p.E() + p.m));
  const double sg = form == VBoost::literal ? -1.0 : 1.0;
  return (p.m * Mat4::Identity() + sg * ps * rep::weyl().up[0]) * quantum_majorana_rest().v0[spin_index(s)] / n;
}

MomentumDiracResidual momentum_dirac_residual(const modes::OnShellMomentum& p, int s, VBoost form) {
  const Mat4 ps = p.slash(rep::weyl());
  const Mat4 one = Mat4::Identity();
  return {((ps - p.m * one) * boosted_u(p, s)).norm(), ((ps + p.m * one) * boosted_v(p, s, form)).norm()};
}

std::array<double, 3> rest_spinor_block_helicities(double pz, double m, int s) {
  const Vec4 u = boosted_u(modes::OnShellMomentum(m, 0, 0, pz), s);
  const Vec2 a = u.head<2>(), b = u.tail<2>();
  const Mat2 sz = rep::pauli(3);
  const double ea = (a.adjoint() * sz * a)(0).real() / a.squaredNorm();
  const double eb = (b.adjoint() * sz * b)(0).real() / b.squaredNorm();
  const double res = std::max((sz * a - ea * a).norm(), (sz * b - eb * b).norm());
  return {ea, eb, res};
}

GSpinor grassmann_majorana(const Element& nu, const Element& omega, const Involution& inv) {
  // -sigma_2 (nu^*, omega^*) = (i omega^*, -i nu^*)
  return {nu, omega, QC::I() * omega.star(inv), QC(0, -1) * nu.star(inv)};
}

GrassmannReport grassmann_majorana_check(const Involution& inv, std::mt19937_64& rng, int samples) {
  const int n = static_cast<int>(inv.gen_image.size());
  if (n < 2) throw std::invalid_argument("grassmann_majorana_check: needs at least two generators");
  GrassmannReport r;
  r.involution = inv.name;
  r.generators = n;
  const QC i = QC::I(), mi(0, -1);

  r.axioms = r.star_star_identity = r.chain_steps = true;
  for (int k = 0; k < samples; ++k) {
    const Element a = grassmann::random_element(n, rng), b = grassmann::random_element(n, rng);
    const QC c(Q(k + 2, 3), Q(1 - k, 2));
    const Element prod = inv.reverses_products ? b.star(inv) * a.star(inv) : a.star(inv) * b.star(inv);
    r.axioms = r.axioms && (a + b).star(inv) == a.star(inv) + b.star(inv) &&
               (c * a).star(inv) == c.conj() * a.star(inv) && (a * b).star(inv) == prod;
    r.star_star_identity = r.star_star_identity && a.star(inv).star(inv) == a;
    const Element w = grassmann::random_element(n, rng, 1);
    // (i w^*)^* = -i w^{**} = -i w
    const Element lhs = (i * w.star(inv)).star(inv);
    r.chain_steps = r.chain_steps && lhs == mi * w.star(inv).star(inv) && lhs == mi * w;
  }

  const Constraint plus = [&](const Element& nu, const Element& om) {
    return std::vector<Element>{nu - i * om.star(inv), om + i * nu.star(inv)};
  };
  const Constraint minus = [&](const Element& nu, const Element& om) {
    return std::vector<Element>{nu + i * om.star(inv), om - i * nu.star(inv)};
  };
  const Constraint selfconj = [&](const Element& nu, const Element& om) {
    return std::vector<Element>{nu - nu.star(inv), om - om.star(inv)};
  };
  const QMat4 g0 = exact_gamma(0);
  const Constraint rest = [&](const Element& nu, const Element& om) {
    // (gamma'^0 - 1) psi at zero momentum
    const GSpinor psi = grassmann_majorana(nu, om, inv);
    std::vector<Element> out;
    for (int a = 0; a < 4; ++a) {
      Element e = QC(-1) * psi[a];
      for (int b = 0; b < 4; ++b)
        if (!g0[a][b].is_zero()) e = e + g0[a][b] * psi[b];
      out.push_back(e);
    }
    return out;
  };
  r.dim_total = 4 * n;
  r.dim_plus = solution_dim(n, {plus});
  r.dim_minus = solution_dim(n, {minus});
  r.dim_both = solution_dim(n, {plus, minus});
  r.dim_plus_selfconj = solution_dim(n, {plus, selfconj});
  r.dim_all = solution_dim(n, {plus, minus, selfconj});
  r.dim_rest_dirac = solution_dim(n, {rest});
  r.rest_dirac_is_plus = r.dim_rest_dirac == r.dim_plus && solution_dim(n, {rest, plus}) == r.dim_plus;
  r.implication = r.dim_plus_selfconj == r.dim_all;
  r.compatible_nontrivial = r.dim_both > 0;

  const Element nu = Element::generator(n, 0), om = mi * nu.star(inv);
  const auto holds = [](const std::vector<Element>& v) {
    for (const auto& e : v)
      if (!e.is_zero()) return false;
    return true;
  };
  r.example_plus = holds(plus(nu, om));
  r.example_minus = holds(minus(nu, om));

  QMat4 g5 = qmul(qmul(exact_gamma(0), exact_gamma(1)), qmul(exact_gamma(2), exact_gamma(3)));
  for (auto& row : g5)
    for (auto& v : row) v = i * v;
  r.current_zero = true;
  r.axial_nonzero = false;
  for (int k = 0; k < samples; ++k) {
    const GSpinor psi =
        grassmann_majorana(grassmann::random_element(n, rng, 1), grassmann::random_element(n, rng, 1), inv);
    for (int mu = 0; mu < 4; ++mu) {
      const QMat4 M = qmul(g0, exact_gamma(mu));
      r.current_zero = r.current_zero && bilinear(psi, M, inv).is_zero();
      r.axial_nonzero = r.axial_nonzero || !bilinear(psi, qmul(g0, qmul(g5, exact_gamma(mu))), inv).is_zero();
    }
  }
  return r;
}

}  // namespace sta::majorana
