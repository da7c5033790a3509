#include "sta/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace sta::fields {

using namespace ga;

namespace {


double dot4(const std::array<double, 4>& p, const Point& x) {
  return p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3];
}

Multivector rotor(double theta) {
  // exp(gamma_21 theta)
  return Multivector(std::cos(theta)) + gamma21() * std::sin(theta);
}

bool same_wave(const Mode& a, const Mode& b, double tol) {
  for (int k = 0; k < 4; ++k)
    if (std::abs(a.eps * a.p[k] - b.eps * b.p[k]) > tol * (1 + std::abs(a.p[k]))) return false;
  return true;
}

}  // namespace

double Mode::phase(const Point& x) const { return eps * dot4(p, x); }

Multivector PlaneWaveField::operator()(const Point& x) const {
  Multivector out;
  for (const auto& m : modes) out += m.A * rotor(m.phase(x));
  return out;
}

PlaneWaveField& PlaneWaveField::operator+=(const PlaneWaveField& o) {
  modes.insert(modes.end(), o.modes.begin(), o.modes.end());
  return *this;
}

PlaneWaveField PlaneWaveField::operator*(const Multivector& right) const {
  // right factors must commute with gamma_21 for the phase to stay on the right;
  // callers use gamma_0, gamma_21 and internal-free even elements
  PlaneWaveField r = *this;
  for (auto& m : r.modes) m.A = m.A * right;
  return r;
}

PlaneWaveField PlaneWaveField::scaled(double s) const {
  PlaneWaveField r = *this;
  for (auto& m : r.modes) m.A *= s;
  return r;
}

PlaneWaveField PlaneWaveField::merged(double tol) const {
  PlaneWaveField r;
  for (const auto& m : modes) {
    bool done = false;
    for (auto& q : r.modes)
      if (same_wave(q, m, tol)) {
        q.A += m.A;
        done = true;
        break;
      }
    if (!done) r.modes.push_back(m);
  }
  return r;
}

double PlaneWaveField::amp_norm() const {
  double s = 0;
  for (const auto& m : merged().modes) s += m.A.norm() * m.A.norm();
  return std::sqrt(s);
}

PlaneWaveField operator+(PlaneWaveField a, const PlaneWaveField& b) { return a += b; }
PlaneWaveField operator-(PlaneWaveField a, const PlaneWaveField& b) { return a += b.scaled(-1.0); }

PlaneWaveField left_mul(const Multivector& left, const PlaneWaveField& f) {
  PlaneWaveField r = f;
  for (auto& m : r.modes) m.A = left * m.A;
  return r;
}

PlaneWaveField single(const Multivector& A, const modes::OnShellMomentum& p, int eps) {
  PlaneWaveField f;
  f.modes.push_back({A, p.contravariant(), eps});
  return f;
}

PlaneWaveField apply_dirac_operator(const PlaneWaveField& f) {
  PlaneWaveField r = f;
  const Multivector g21 = gamma21();
  for (auto& m : r.modes) m.A = m.eps * (m.p_vec() * m.A * g21);
  return r;
}

Multivector dirac_fd(const PlaneWaveField& f, const Point& x, double h) {
  Multivector out;
  for (int mu = 0; mu < 4; ++mu) {
    Point a = x, b = x;
    a[mu] += h;
    b[mu] -= h;
    const Multivector d = (f(a) - f(b)) * (0.5 / h);
    out += Multivector::gen_up(mu) * d;
  }
  return out;
}

PlaneWaveField dh_residual(const PlaneWaveField& f, double m) {
  return (apply_dirac_operator(f) * gamma21() - f.scaled(m) * Multivector::gen(0)).merged();
}

CovField dirac_residual_covariant(const CovField& f, double m) {
  const auto& r = rep::standard();
  CovField out = f;
  for (auto& c : out) {
    // i gamma^mu (i eps p_mu) = -eps pslash
    const Mat4 ps = r.slash(c.p[0], c.p[1], c.p[2], c.p[3]);
    c.a = -double(c.eps) * (ps * c.a) - m * c.a;
  }
  return out;
}

CovField to_covariant(const PlaneWaveField& f) {
  CovField out;
  for (const auto& m : f.modes) out.push_back({spinor::to_covariant(m.A).v, m.p, m.eps});
  return out;
}

CovField dh_residual_as_covariant(const PlaneWaveField& r) { return to_covariant(r * Multivector::gen(0)); }

double cov_distance(const CovField& a, const CovField& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i].a - b[i].a).norm());
  return d;
}

CovField cov_merged(const CovField& f, double tol) {
  CovField r;
  for (const auto& m : f) {
    bool done = false;
    for (auto& q : r) {
      bool same = true;
      for (int k = 0; k < 4; ++k)
        if (std::abs(q.eps * q.p[k] - m.eps * m.p[k]) > tol * (1 + std::abs(m.p[k]))) same = false;
      if (same) {
        q.a += m.a;
        done = true;
        break;
      }
    }
    if (!done) r.push_back(m);
  }
  return r;
}

PlaneWaveField box(const PlaneWaveField& f) {
  PlaneWaveField r = f;
  for (auto& m : r.modes) m.A *= -m.p2();
  return r;
}

PlaneWaveField kg_residual(const PlaneWaveField& f, double m) { return (box(f) + f.scaled(m * m)).merged(); }

const PlaneWaveField& Octet::at(ElkoType t, Label l) const {
  auto it = f.find({t, l});
  if (it == f.end()) throw std::invalid_argument("octet: missing field");
  return it->second;
}

int frequency_sign(ElkoType t) {
  switch (t) {
    case ElkoType::lambda_s:
    case ElkoType::rho_a: return -1;
    case ElkoType::lambda_a:
    case ElkoType::rho_s: return 1;
  }
  return -1;
}

Octet build_octet(const modes::OnShellMomentum& p) { return build_octet(std::vector{p}, {1.0}); }

Octet build_octet(const std::vector<modes::OnShellMomentum>& ps, const std::vector<double>& weights) {
  Octet o;
  o.m = ps.at(0).m;
  for (auto t : {ElkoType::lambda_s, ElkoType::lambda_a, ElkoType::rho_s, ElkoType::rho_a})
    for (auto l : {Label::minus_plus, Label::plus_minus}) {
      PlaneWaveField f;
      for (size_t k = 0; k < ps.size(); ++k) {
        const auto e = modes::elko_construct(ps[k], t, l);
        f += single(weights.at(k) * e.op(), ps[k], frequency_sign(t));
      }
      o.f[{t, l}] = f;
    }
  return o;
}

const std::array<FirstOrderLine, 8>& first_order_lines() {
  using T = ElkoType;
  constexpr auto MP = Label::minus_plus, PM = Label::plus_minus;
  static const std::array<FirstOrderLine, 8> lines{{
      {{T::lambda_s, MP}, {T::rho_a, PM}, +1},
      {{T::rho_a, MP}, {T::lambda_s, PM}, +1},
      {{T::lambda_a, MP}, {T::rho_s, PM}, -1},
      {{T::rho_s, MP}, {T::lambda_a, PM}, -1},
      {{T::lambda_s, PM}, {T::rho_a, MP}, -1},
      {{T::rho_a, PM}, {T::lambda_s, MP}, -1},
      {{T::lambda_a, PM}, {T::rho_s, MP}, +1},
      {{T::rho_s, PM}, {T::lambda_a, MP}, +1},
  }};
  return lines;
}

PlaneWaveField first_order_line_residual(const Octet& o, const FirstOrderLine& l) {
  const auto& X = o.at(l.x.first, l.x.second);
  const auto& Y = o.at(l.y.first, l.y.second);
  return (apply_dirac_operator(X) * gamma21() + Y.scaled(l.sign * o.m) * Multivector::gen(0)).merged();
}

std::array<PlaneWaveField, 8> first_order_residual(const Octet& o) {
  std::array<PlaneWaveField, 8> r;
  for (int i = 0; i < 8; ++i) r[i] = first_order_line_residual(o, first_order_lines()[i]);
  return r;
}

CovField first_order_line_residual_covariant(const Octet& o, const FirstOrderLine& l) {
  const auto& r = rep::standard();
  CovField out;
  auto push = [&](const PlaneWaveField& f, bool is_x) {
    for (const auto& m : f.modes) {
      const Vec4 a = spinor::to_covariant(m.A).v;
      // i gamma^mu d_mu on exp(i eps p.x) is -eps pslash
      const Vec4 v = is_x ? Vec4(-double(m.eps) * (r.slash(m.p[0], m.p[1], m.p[2], m.p[3]) * a))
                          : Vec4(double(l.sign) * o.m * a);
      out.push_back({v, m.p, m.eps});
    }
  };
  push(o.at(l.x.first, l.x.second), true);
  push(o.at(l.y.first, l.y.second), false);
  return cov_merged(out);
}

Octet kg_not_first_order_witness(const modes::OnShellMomentum& p) {
  Octet o = build_octet(p);
  for (auto& m : o.f[{ElkoType::lambda_s, Label::minus_plus}].modes) m.eps = -m.eps;
  return o;
}

std::pair<PlaneWaveField, PlaneWaveField> first_order_composition(const PlaneWaveField& X, const PlaneWaveField& Y,
                                                              int s_x, int s_y, double m) {
  const Multivector g0 = Multivector::gen(0), g21 = gamma21();
  const PlaneWaveField Rx = apply_dirac_operator(X) * g21 + Y.scaled(s_x * m) * g0;
  const PlaneWaveField Ry = apply_dirac_operator(Y) * g21 + X.scaled(s_y * m) * g0;
  PlaneWaveField lhs = apply_dirac_operator(Rx) + Ry.scaled(s_x * m) * (g21 * g0);
  PlaneWaveField rhs = (box(X) + X.scaled(double(s_x * s_y) * m * m)) * g21;
  return {lhs, rhs};
}

BilinearSet bilinears(const Multivector& psi) {
  BilinearSet b;
  const Multivector pr = psi.reverse();
  const Multivector ss = psi * pr;
  b.sigma = ss.c[0];
  b.omega = ss.c[E0123];
  b.J = (psi * Multivector::gen(0) * pr).grade(1);
  b.S = (psi * gamma21() * pr).grade(2);
  b.K = (psi * Multivector::gen(3) * pr).grade(1);
  return b;
}

LounestoClass classify(const BilinearSet& b, double scale2, LounestoTable t) {
  const double tol = 1e-10 * scale2;
  const bool sz = std::abs(b.sigma) <= tol, oz = std::abs(b.omega) <= tol;
  const bool Sz = b.S.norm() <= tol, Kz = b.K.norm() <= tol, Jz = b.J.norm() <= tol;
  LounestoClass c;
  c.b = b;
  if (Jz) return c;  // J vanishes only for the zero spinor
  if (!sz && !oz) c.cls = 1;
  else if (!sz) c.cls = 2;
  else if (!oz) c.cls = 3;
  else if (t == LounestoTable::standard) c.cls = (!Kz && !Sz) ? 4 : (Kz && !Sz) ? 5 : (!Kz && Sz) ? 6 : 0;
  else c.cls = !Sz ? 5 : 6;
  return c;
}

LounestoClass classify(const Multivector& psi, LounestoTable t) {
  const double n2 = psi.norm() * psi.norm();
  if (n2 == 0) throw std::invalid_argument("classify: zero spinor");
  return classify(bilinears(psi), n2, t);
}

Lightlike lightlike_check(const BilinearSet& b, double scale2) {
  const double tol = 1e-10 * scale2 * std::max(1.0, scale2);
  Lightlike l;
  l.J_null = std::abs((b.J * b.J).scalar()) <= tol;
  l.K_null = std::abs((b.K * b.K).scalar()) <= tol;
  l.J_nonzero = b.J.norm() > 1e-10 * scale2;
  l.K_nonzero = b.K.norm() > 1e-10 * scale2;
  l.J0 = b.J.c[E0];
  return l;
}

}  // namespace sta::fields
