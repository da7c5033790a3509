#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace sta {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

// metric diag(+,-,-,-) on generator index 0..3
constexpr double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

namespace ga {

// blade masks: bit k set means gamma_k is a factor, ascending order
enum Blade : std::uint8_t {
  S = 0,
  E0 = 1, E1 = 2, E2 = 4, E3 = 8,
  E01 = 3, E02 = 5, E03 = 9, E12 = 6, E13 = 10, E23 = 12,
  E012 = 7, E013 = 11, E023 = 13, E123 = 14,
  E0123 = 15
};

inline int grade_of(unsigned mask) { return __builtin_popcount(mask); }

// sign of blade(a)*blade(b) in the canonical ordering, times metric factors
double blade_sign(unsigned a, unsigned b);

struct Multivector {
  std::array<double, 16> c{};

  Multivector() = default;
  explicit Multivector(double s) { c[0] = s; }

  static Multivector blade(unsigned mask, double coef = 1.0) {
    Multivector m;
    m.c[mask & 15u] = coef;
    return m;
  }
  // 1-vector with coefficient v[mu] on gamma_mu
  static Multivector vector(double v0, double v1, double v2, double v3);
  // generator gamma_mu (lower index)
  static Multivector gen(int mu) { return blade(1u << mu); }
  // gamma^mu = eta^{mu mu} gamma_mu
  static Multivector gen_up(int mu) { return blade(1u << mu, eta(mu)); }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  Multivector grade(int r) const;
  Multivector even() const;
  Multivector odd() const;
  Multivector reverse() const;
  Multivector involute() const;
  Multivector conjugate() const { return reverse().involute(); }

  double scalar() const { return c[0]; }
  double norm() const;  // euclidean norm of the coefficient vector
  bool is_even(double tol = 0.0) const;
  bool finite() const;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator-(Multivector a);
Multivector operator*(const Multivector& a, const Multivector& b);
Multivector operator*(double s, Multivector a);
Multivector operator*(Multivector a, double s);

inline Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }
Multivector left_contraction(const Multivector& a, const Multivector& b);
Multivector exterior_product(const Multivector& a, const Multivector& b);
inline Multivector reverse(const Multivector& a) { return a.reverse(); }

// <a reverse(b)>_0
double scalar_product(const Multivector& a, const Multivector& b);

double dist(const Multivector& a, const Multivector& b);

std::string to_string(const Multivector& a, int prec = 6);

// frequently used elements
Multivector pseudoscalar();       // i = gamma_0 gamma_1 gamma_2 gamma_3
Multivector sigma(int k);         // sigma_k = gamma_k gamma_0, k = 1..3
Multivector gamma21();            // gamma_2 gamma_1

// exp of x where x*x is a real scalar
Multivector exp_bivector_like(const Multivector& x, double tol = 1e-12);
Multivector exp_series(const Multivector& x, int terms = 30);

// Even subalgebra, 8 coefficients: 1, e01, e02, e03, e12, e13, e23, e0123
struct EvenMultivector {
  std::array<double, 8> c{};
  static constexpr std::array<unsigned, 8> masks{S, E01, E02, E03, E12, E13, E23, E0123};

  static EvenMultivector from(const Multivector& m);  // drops odd part
  Multivector mv() const;
};

}  // namespace ga

namespace rep {

enum class Tag { standard, weyl };

struct GammaRep {
  Tag tag = Tag::standard;
  std::array<Mat4, 4> up;  // gamma^mu
  Mat4 g5;                 // gamma^0 gamma^1 gamma^2 gamma^3
  Mat4 S;                  // standard -> weyl change of basis, self inverse

  Mat4 lower(int mu) const { return eta(mu) * up[mu]; }
  Mat4 slash(double E, double px, double py, double pz) const;  // p_mu gamma^mu from contravariant p
};

const Mat2& pauli(int k);  // k = 0 identity, 1..3 Pauli
const GammaRep& standard();
const GammaRep& weyl();
const GammaRep& get(Tag t);
Mat4 change_of_basis();

Mat4 matrix_rep(const ga::Multivector& a, const GammaRep& r = standard());

}  // namespace rep
}  // namespace sta
