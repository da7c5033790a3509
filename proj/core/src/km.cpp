#include "sta/km.hpp"

#include <cmath>
#include <stdexcept>

namespace sta::km {

using ga::blade_sign;
using ga::gamma21;
using modes::ElkoType;
using modes::Label;

namespace {

double dot4(const std::array<double, 4>& p, const Point& x) {
  return p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3];
}

Multivector rotor(double theta) { return Multivector(std::cos(theta)) + gamma21() * std::sin(theta); }

bool same_wave(const CVMode& a, const CVMode& b, double tol) {
  for (int k = 0; k < 4; ++k)
    if (std::abs(a.eps * a.p[k] - b.eps * b.p[k]) > tol * (1 + std::abs(a.p[k]))) return false;
  return true;
}

CV mode_at(const CVMode& m, const Point& x) { return m.A * CV::spacetime(rotor(m.eps * dot4(m.p, x))); }

CMV cmul(const CMV& a, const CMV& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CMV cadd(const CMV& a, const CMV& b) { return {a.re + b.re, a.im + b.im}; }

// complex 2x2 image of each even internal blade
using C2 = std::array<std::array<cplx, 2>, 2>;
C2 c2mul(const C2& a, const C2& b) {
  C2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}
C2 pauli_c2(int k) {
  const cplx I(0, 1);
  if (k == 1) return C2{{{0, 1}, {1, 0}}};
  if (k == 2) return C2{{{0, -I}, {I, 0}}};
  return C2{{{1, 0}, {0, -1}}};
}
C2 blade_image(unsigned mask) {
  const cplx I(0, 1);
  switch (mask) {
    case 0: return C2{{{1, 0}, {0, 1}}};
    case 15: return C2{{{I, 0}, {0, I}}};
    default: break;
  }
  if (ga::grade_of(mask) != 2) throw std::invalid_argument("matrix_correspondence: odd internal part");
  int a = -1, b = -1;
  for (int mu = 0; mu < 4; ++mu)
    if (mask & (1u << mu)) (a < 0 ? a : b) = mu;
  C2 r;
  if (a == 0) {
    // Gamma_0 Gamma_k = -tau_k
    r = pauli_c2(b);
    for (auto& row : r)
      for (auto& v : row) v = -v;
  } else {
    // Gamma_i Gamma_j = -tau_i tau_j
    r = c2mul(pauli_c2(a), pauli_c2(b));
    for (auto& row : r)
      for (auto& v : row) v = -v;
  }
  return r;
}

}  // namespace

Multivector tau(int i) { return Multivector::gen(i) * Multivector::gen(0); }
Multivector frak_i() { return ga::pseudoscalar(); }

const std::array<Multivector, 8>& internal_basis() {
  static const std::array<Multivector, 8> b = {Multivector(1.0), tau(1),        tau(2),        tau(3),
                                               tau(1) * tau(2),  tau(2) * tau(3), tau(3) * tau(1), frak_i()};
  return b;
}

Multivector internal_reverse(const Multivector& x) {
  const Multivector g0 = Multivector::gen(0);
  return g0 * x.reverse() * g0;
}

CV CV::tensor(const Multivector& st, const Multivector& in) {
  CV r;
  for (unsigned J = 0; J < 16; ++J)
    if (in.c[J] != 0.0) r.part[J] = in.c[J] * st;
  return r;
}

CV& CV::operator+=(const CV& o) {
  for (int J = 0; J < 16; ++J) part[J] += o.part[J];
  return *this;
}
CV& CV::operator-=(const CV& o) {
  for (int J = 0; J < 16; ++J) part[J] -= o.part[J];
  return *this;
}
CV& CV::operator*=(double s) {
  for (auto& p : part) p *= s;
  return *this;
}

CV CV::reverse() const {
  CV r;
  for (unsigned J = 0; J < 16; ++J) {
    if (part[J].norm() == 0.0) continue;
    r += tensor(part[J].reverse(), internal_reverse(Multivector::blade(J)));
  }
  return r;
}

double CV::norm() const {
  double s = 0;
  for (const auto& p : part) s += p.norm() * p.norm();
  return std::sqrt(s);
}

bool CV::spacetime_grade(int r, double tol) const {
  for (const auto& p : part)
    if ((p - p.grade(r)).norm() > tol) return false;
  return true;
}

CV operator+(CV a, const CV& b) { return a += b; }
CV operator-(CV a, const CV& b) { return a -= b; }
CV operator*(double s, CV a) { return a *= s; }
CV operator*(const CV& a, const CV& b) {
  CV r;
  for (unsigned I = 0; I < 16; ++I) {
    if (a.part[I].norm() == 0.0) continue;
    for (unsigned J = 0; J < 16; ++J) {
      if (b.part[J].norm() == 0.0) continue;
      r.part[I ^ J] += blade_sign(I, J) * (a.part[I] * b.part[J]);
    }
  }
  return r;
}

Mat2MV matrix_correspondence(const CV& x) {
  Mat2MV m{};
  for (unsigned J = 0; J < 16; ++J) {
    if (x.part[J].norm() == 0.0) continue;
    const C2 b = blade_image(J);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m[i][j].re += b[i][j].real() * x.part[J];
        m[i][j].im += b[i][j].imag() * x.part[J];
      }
  }
  return m;
}

Mat2MV matmul(const Mat2MV& a, const Mat2MV& b) {
  Mat2MV r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = cadd(cmul(a[i][0], b[0][j]), cmul(a[i][1], b[1][j]));
  return r;
}

Mat2MV real_matrix(const Multivector& a, const Multivector& b, const Multivector& c, const Multivector& d) {
  Mat2MV r{};
  r[0][0].re = a;
  r[0][1].re = b;
  r[1][0].re = c;
  r[1][1].re = d;
  return r;
}

double mat_distance(const Mat2MV& a, const Mat2MV& b) {
  double s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double r = (a[i][j].re - b[i][j].re).norm(), m = (a[i][j].im - b[i][j].im).norm();
      s += r * r + m * m;
    }
  return std::sqrt(s);
}

CV CVField::operator()(const Point& x) const {
  CV out;
  for (const auto& m : modes) out += mode_at(m, x);
  return out;
}

CVField& CVField::operator+=(const CVField& o) {
  modes.insert(modes.end(), o.modes.begin(), o.modes.end());
  return *this;
}

CVField CVField::scaled(double s) const {
  CVField r = *this;
  for (auto& m : r.modes) m.A *= s;
  return r;
}

CVField CVField::right(const CV& rt) const {
  CVField r = *this;
  for (auto& m : r.modes) m.A = m.A * rt;
  return r;
}

CVField CVField::left(const CV& l) const {
  CVField r = *this;
  for (auto& m : r.modes) m.A = l * m.A;
  return r;
}

CVField CVField::merged(double tol) const {
  CVField r;
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

double CVField::amp_norm() const {
  double s = 0;
  for (const auto& m : merged().modes) s += m.A.norm() * m.A.norm();
  return std::sqrt(s);
}

CVField operator+(CVField a, const CVField& b) { return a += b; }
CVField operator-(CVField a, const CVField& b) { return a += b.scaled(-1.0); }

CVField apply_dirac(const CVField& f) {
  CVField r = f;
  for (auto& m : r.modes) {
    const CV pv = CV::spacetime(Multivector::vector(m.p[0], m.p[1], m.p[2], m.p[3]));
    m.A = double(m.eps) * (pv * m.A * CV::spacetime(gamma21()));
  }
  return r;
}

CVField lift(const fields::PlaneWaveField& f, const Multivector& internal) {
  CVField r;
  for (const auto& m : f.modes) r.modes.push_back({CV::tensor(m.A, internal), m.p, m.eps});
  return r;
}

static Multivector i_tau2() { return frak_i() * tau(2); }

static void check_momenta(const fields::PlaneWaveField& a, const fields::PlaneWaveField& b) {
  const auto ma = a.merged().modes, mb = b.merged().modes;
  bool ok = ma.size() == mb.size();
  for (std::size_t i = 0; ok && i < ma.size(); ++i)
    for (int k = 0; k < 4; ++k)
      if (std::abs(ma[i].p[k] - mb[i].p[k]) > 1e-12 * (1 + std::abs(ma[i].p[k]))) ok = false;
  if (!ok) throw std::invalid_argument("build_K/build_M: mismatched momenta");
}

CVField build_K(const fields::Octet& o) {
  check_momenta(o.at(ElkoType::lambda_s, Label::minus_plus), o.at(ElkoType::rho_a, Label::plus_minus));
  return lift(o.at(ElkoType::lambda_s, Label::minus_plus), Multivector(1.0)) -
         lift(o.at(ElkoType::rho_a, Label::plus_minus), i_tau2());
}

CVField build_M(const fields::Octet& o) {
  check_momenta(o.at(ElkoType::lambda_s, Label::plus_minus), o.at(ElkoType::rho_a, Label::minus_plus));
  return lift(o.at(ElkoType::lambda_s, Label::plus_minus), Multivector(1.0)) -
         lift(o.at(ElkoType::rho_a, Label::minus_plus), i_tau2());
}

CVField build(const fields::Octet& o, Kind k) { return k == Kind::K ? build_K(o) : build_M(o); }

static double mass_sign(Kind k) { return k == Kind::K ? -1.0 : 1.0; }

CVField km_residual(const CVField& f, Kind k, double m) {
  const CV mass = CV::tensor(Multivector::gen(0), i_tau2());
  return (apply_dirac(f).right(CV::spacetime(gamma21())) + f.right(mass).scaled(mass_sign(k) * m)).merged();
}

CVField projector(const CVField& f) {
  return f.right(CV::internal(0.5 * (Multivector(1.0) + tau(3))));
}

CVField projector_residual(const CVField& f, Kind k, double m) {
  const CVField P = projector(f);
  // the internal factor i tau_2 multiplies from the left
  const CVField mass = P.left(CV::internal(i_tau2())).right(CV::spacetime(Multivector::gen(0)));
  return (apply_dirac(P).right(CV::spacetime(gamma21())) + mass.scaled(-mass_sign(k) * m)).merged();
}

CVMode literal_solution_mode(Kind k, const std::array<double, 4>& p, int eps, const CV& seed, double m) {
  // per mode the equation reads L(A) = R(A) with L(A) = eps p A and R(A) = s m A i tau_2 g0;
  // L^2 = p^2, R^2 = -m^2 and L R = R L, so (L + R) B is a solution when p^2 = -m^2
  const CV pv = CV::spacetime(Multivector::vector(p[0], p[1], p[2], p[3]));
  const CV rt = CV::tensor(Multivector::gen(0), i_tau2());
  const CV A = double(eps) * (pv * seed) + (mass_sign(k) * m) * (seed * rt);
  return {A, p, eps};
}

CV current(const CVField& f, const Point& x) {
  const CV t = CV::tensor(Multivector::gen(0), tau(1));
  const CV F = f(x);
  return F * t * F.reverse();
}

CV current_divergence(const CVField& f, const Point& x) {
  const CV t = CV::tensor(gamma21() * Multivector::gen(0), tau(1));
  CV out;
  for (const auto& a : f.modes) {
    const CV Fa = mode_at(a, x);
    for (const auto& b : f.modes) {
      const CV term = Fa * t * mode_at(b, x).reverse();
      for (int mu = 0; mu < 4; ++mu) {
        const double k = eta(mu) * (a.eps * a.p[mu] - b.eps * b.p[mu]);  // covariant component
        if (k == 0.0) continue;
        const Multivector gu = Multivector::gen_up(mu);
        for (unsigned J = 0; J < 16; ++J)
          if (term.part[J].norm() != 0.0) out.part[J] += k * ga::left_contraction(gu, term.part[J]);
      }
    }
  }
  return out;
}

CV current_divergence_fd(const CVField& f, const Point& x, double h) {
  CV out;
  for (int mu = 0; mu < 4; ++mu) {
    Point xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    const CV d = (1.0 / (2 * h)) * (current(f, xp) - current(f, xm));
    const Multivector gu = Multivector::gen_up(mu);
    for (unsigned J = 0; J < 16; ++J) out.part[J] += ga::left_contraction(gu, d.part[J]);
  }
  return out;
}

static CV scalar_part(const CV& x) {
  CV r;
  for (unsigned J = 0; J < 16; ++J) r.part[J] = x.part[J].grade(0);
  return r;
}

static CV internal_reverse_only(const CV& x) {
  CV r;
  for (unsigned J = 0; J < 16; ++J)
    if (x.part[J].norm() != 0.0) r += CV::tensor(x.part[J], internal_reverse(Multivector::blade(J)));
  return r;
}

ConservationSteps conservation_steps(const CVField& f, Kind k, double m, const Point& x) {
  const double s = -mass_sign(k);
  const CV F = f(x), Fr = F.reverse();
  CVField d = apply_dirac(f);
  const CV dF = d(x);
  const Multivector g012 = Multivector::blade(ga::E012);
  ConservationSteps out;
  out.first_order = (dF - (s * m) * (F * CV::tensor(g012, frak_i() * tau(2)))).norm();
  const CV X = scalar_part(dF * CV::tensor(Multivector::gen(0), tau(1)) * Fr);
  out.split = (current_divergence(f, x) - (X + internal_reverse_only(X))).norm();
  const CV Y = scalar_part(F * CV::tensor(Multivector::blade(ga::E12), tau(3)) * Fr);
  out.substituted = (X - (s * m) * Y).norm();
  out.vanishing = (Y + internal_reverse_only(Y)).norm();
  return out;
}

CV GaugePotential::field() const {
  CV r;
  for (int i = 0; i < 3; ++i) r += CV::tensor(A[i], tau(i + 1));
  return r;
}

CVField gauge_residual(const CVField& f, Kind k, const GaugePotential& a, double q, double m) {
  const CV coupling = q * (CV::internal(frak_i()) * a.field());
  return (km_residual(f, k, m) + f.left(coupling)).merged();
}

Multivector gauge_generator(const std::array<double, 3>& theta, double q) {
  Multivector g;
  for (int i = 0; i < 3; ++i) g += (q * theta[i]) * (frak_i() * Multivector::gen(i + 1) * Multivector::gen(0));
  return g;
}

GaugeTransformed gauge_transform(const CVField& f, const GaugePotential& a, const std::array<double, 3>& theta,
                                 double q) {
  GaugeTransformed out;
  out.U = ga::exp_bivector_like(gauge_generator(theta, q));
  const Multivector Ui = out.U.reverse();  // U is a unit rotor of the tau frame
  out.f = f.left(CV::internal(out.U));
  // U calA U^-1 = A^j U tau_j U^-1, re-expanded on tau_i
  for (int j = 0; j < 3; ++j) {
    const Multivector r = out.U * tau(j + 1) * Ui;
    for (int i = 0; i < 3; ++i) out.a.A[i] += (r * tau(i + 1)).scalar() * a.A[j];
  }
  return out;
}

}  // namespace sta::km
