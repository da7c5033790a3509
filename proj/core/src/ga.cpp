#include "sta/ga.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sta::ga {

namespace {

// precomputed product table: result mask is a^b, sign stored here
struct Table {
  double s[16][16];
  Table() {
    for (unsigned a = 0; a < 16; ++a)
      for (unsigned b = 0; b < 16; ++b) {
        int swaps = 0;
        for (unsigned k = 0; k < 4; ++k)
          if (a >> k & 1u) swaps += __builtin_popcount(b & ((1u << k) - 1u));
        double sg = (swaps & 1) ? -1.0 : 1.0;
        unsigned common = a & b;
        for (int k = 0; k < 4; ++k)
          if (common >> k & 1u) sg *= eta(k);
        s[a][b] = sg;
      }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

const char* blade_name(unsigned m) {
  static const char* names[16] = {"1",    "g0",   "g1",   "g01",  "g2",   "g02",
                                  "g12",  "g012", "g3",   "g03",  "g13",  "g013",
                                  "g23",  "g023", "g123", "g0123"};
  return names[m];
}

}  // namespace

double blade_sign(unsigned a, unsigned b) { return table().s[a & 15u][b & 15u]; }

Multivector Multivector::vector(double v0, double v1, double v2, double v3) {
  Multivector m;
  m.c[E0] = v0;
  m.c[E1] = v1;
  m.c[E2] = v2;
  m.c[E3] = v3;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int i = 0; i < 16; ++i) c[i] += o.c[i];
  return *this;
}
Multivector& Multivector::operator-=(const Multivector& o) {
  for (int i = 0; i < 16; ++i) c[i] -= o.c[i];
  return *this;
}
Multivector& Multivector::operator*=(double s) {
  for (auto& x : c) x *= s;
  return *this;
}

Multivector Multivector::grade(int r) const {
  Multivector m;
  for (unsigned i = 0; i < 16; ++i)
    if (grade_of(i) == r) m.c[i] = c[i];
  return m;
}

Multivector Multivector::even() const {
  Multivector m;
  for (unsigned i = 0; i < 16; ++i)
    if (grade_of(i) % 2 == 0) m.c[i] = c[i];
  return m;
}

Multivector Multivector::odd() const { return *this - even(); }

Multivector Multivector::reverse() const {
  Multivector m;
  for (unsigned i = 0; i < 16; ++i) {
    int r = grade_of(i);
    m.c[i] = ((r * (r - 1) / 2) % 2) ? -c[i] : c[i];
  }
  return m;
}

Multivector Multivector::involute() const {
  Multivector m;
  for (unsigned i = 0; i < 16; ++i) m.c[i] = (grade_of(i) % 2) ? -c[i] : c[i];
  return m;
}

double Multivector::norm() const {
  double s = 0;
  for (double x : c) s += x * x;
  return std::sqrt(s);
}

bool Multivector::is_even(double tol) const {
  for (unsigned i = 0; i < 16; ++i)
    if (grade_of(i) % 2 && std::abs(c[i]) > tol) return false;
  return true;
}

bool Multivector::finite() const {
  for (double x : c)
    if (!std::isfinite(x)) return false;
  return true;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator*(Multivector a, double s) { return a *= s; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  const auto& t = table();
  Multivector r;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.c[i] == 0.0) continue;
    for (unsigned j = 0; j < 16; ++j) {
      if (b.c[j] == 0.0) continue;
      r.c[i ^ j] += t.s[i][j] * a.c[i] * b.c[j];
    }
  }
  return r;
}

// blade-wise: A_r _| B_s = <A B>_{s-r} when A's factors are a subset of B's
Multivector left_contraction(const Multivector& a, const Multivector& b) {
  const auto& t = table();
  Multivector r;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.c[i] == 0.0) continue;
    for (unsigned j = 0; j < 16; ++j) {
      if (b.c[j] == 0.0 || (i & j) != i) continue;
      r.c[i ^ j] += t.s[i][j] * a.c[i] * b.c[j];
    }
  }
  return r;
}

Multivector exterior_product(const Multivector& a, const Multivector& b) {
  const auto& t = table();
  Multivector r;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.c[i] == 0.0) continue;
    for (unsigned j = 0; j < 16; ++j) {
      if (b.c[j] == 0.0 || (i & j) != 0) continue;
      r.c[i ^ j] += t.s[i][j] * a.c[i] * b.c[j];
    }
  }
  return r;
}

double scalar_product(const Multivector& a, const Multivector& b) {
  // only matching blades contribute to the scalar part
  const auto& t = table();
  const Multivector rb = b.reverse();
  double s = 0;
  for (unsigned i = 0; i < 16; ++i) s += t.s[i][i] * a.c[i] * rb.c[i];
  return s;
}

double dist(const Multivector& a, const Multivector& b) { return (a - b).norm(); }

std::string to_string(const Multivector& a, int prec) {
  std::ostringstream os;
  os.precision(prec);
  bool first = true;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.c[i] == 0.0) continue;
    if (!first) os << " + ";
    os << a.c[i] << "*" << blade_name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Multivector pseudoscalar() { return Multivector::blade(E0123); }

Multivector sigma(int k) {
  if (k < 1 || k > 3) throw std::out_of_range("sigma index");
  return Multivector::gen(k) * Multivector::gen(0);
}

Multivector gamma21() { return Multivector::gen(2) * Multivector::gen(1); }

Multivector exp_series(const Multivector& x, int terms) {
  Multivector sum(1.0), term(1.0);
  for (int n = 1; n < terms; ++n) {
    term = term * x * (1.0 / n);
    sum += term;
  }
  return sum;
}

Multivector exp_bivector_like(const Multivector& x, double tol) {
  const Multivector x2 = x * x;
  double off = 0;
  for (int i = 1; i < 16; ++i) off = std::max(off, std::abs(x2.c[i]));
  if (off > tol * (1.0 + std::abs(x2.c[0])))
    throw std::invalid_argument("exp_bivector_like: square is not a scalar");
  const double s = x2.c[0];
  if (s < 0) {
    const double k = std::sqrt(-s);
    return Multivector(std::cos(k)) + x * (std::sin(k) / k);
  }
  if (s > 0) {
    const double k = std::sqrt(s);
    return Multivector(std::cosh(k)) + x * (std::sinh(k) / k);
  }
  return Multivector(1.0) + x;
}

EvenMultivector EvenMultivector::from(const Multivector& m) {
  EvenMultivector e;
  for (int i = 0; i < 8; ++i) e.c[i] = m.c[masks[i]];
  return e;
}

Multivector EvenMultivector::mv() const {
  Multivector m;
  for (int i = 0; i < 8; ++i) m.c[masks[i]] = c[i];
  return m;
}

}  // namespace sta::ga

namespace sta::rep {

namespace {

Mat4 block(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  m << a, b, c, d;
  return m;
}

GammaRep make_standard() {
  GammaRep r;
  r.tag = Tag::standard;
  const Mat2 I = Mat2::Identity(), Z = Mat2::Zero();
  r.up[0] = block(I, Z, Z, -I);
  for (int k = 1; k <= 3; ++k) r.up[k] = block(Z, pauli(k), -pauli(k), Z);
  r.g5 = r.up[0] * r.up[1] * r.up[2] * r.up[3];
  r.S = change_of_basis();
  return r;
}

GammaRep make_weyl() {
  const GammaRep& s = standard();
  GammaRep r;
  r.tag = Tag::weyl;
  r.S = s.S;
  // S is its own inverse
  for (int mu = 0; mu < 4; ++mu) {
    r.up[mu] = s.S * s.up[mu] * s.S;
    // entries are 0, +-1, +-i; drop the rounding left by the 1/sqrt2 factors
    r.up[mu] = r.up[mu].unaryExpr([](cplx z) { return cplx(std::round(z.real()), std::round(z.imag())); });
  }
  r.g5 = r.up[0] * r.up[1] * r.up[2] * r.up[3];
  return r;
}

}  // namespace

const Mat2& pauli(int k) {
  static const std::array<Mat2, 4> p = [] {
    std::array<Mat2, 4> a;
    const cplx i(0, 1);
    a[0] << 1, 0, 0, 1;
    a[1] << 0, 1, 1, 0;
    a[2] << 0, -i, i, 0;
    a[3] << 1, 0, 0, -1;
    return a;
  }();
  return p.at(k);
}

Mat4 change_of_basis() {
  const Mat2 I = Mat2::Identity();
  return block(I, I, I, -I) / std::sqrt(2.0);
}

const GammaRep& standard() {
  static const GammaRep r = make_standard();
  return r;
}

const GammaRep& weyl() {
  static const GammaRep r = make_weyl();
  return r;
}

const GammaRep& get(Tag t) { return t == Tag::weyl ? weyl() : standard(); }

Mat4 GammaRep::slash(double E, double px, double py, double pz) const {
  return E * up[0] - px * up[1] - py * up[2] - pz * up[3];
}

namespace {

std::array<Mat4, 16> blade_images(const GammaRep& r) {
  std::array<Mat4, 16> basis;
  for (unsigned m = 0; m < 16; ++m) {
    Mat4 b = Mat4::Identity();
    for (int k = 0; k < 4; ++k)
      if (m >> k & 1u) b = b * r.lower(k);
    basis[m] = b;
  }
  return basis;
}

}  // namespace

Mat4 matrix_rep(const ga::Multivector& a, const GammaRep& r) {
  static const std::array<Mat4, 16> bs = blade_images(standard());
  static const std::array<Mat4, 16> bw = blade_images(weyl());
  const bool cached = &r == &standard() || &r == &weyl();
  const std::array<Mat4, 16> local = cached ? std::array<Mat4, 16>{} : blade_images(r);
  const auto& basis = &r == &standard() ? bs : (&r == &weyl() ? bw : local);
  Mat4 out = Mat4::Zero();
  for (unsigned m = 0; m < 16; ++m)
    if (a.c[m] != 0.0) out += a.c[m] * basis[m];
  return out;
}

}  // namespace sta::rep
