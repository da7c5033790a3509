#pragma once

#include <array>
#include <vector>

#include "sta/fields.hpp"

namespace sta::km {

using fields::Point;
using ga::Multivector;

// Internal algebra elements live in a second copy of Cl(1,3) with generators
// Gamma_mu; only its even part is used. tau_i = Gamma_i Gamma_0.
Multivector tau(int i);
Multivector frak_i();  // tau_1 tau_2 tau_3 = Gamma_5
// 1, tau1, tau2, tau3, tau1tau2, tau2tau3, tau3tau1, frak_i
const std::array<Multivector, 8>& internal_basis();
// reversion of the Pauli algebra: tau_i fixed, products reversed
Multivector internal_reverse(const Multivector& x);

// sum over internal blades J of part[J] (x) Gamma_J
struct CV {
  std::array<Multivector, 16> part{};

  static CV tensor(const Multivector& spacetime, const Multivector& internal);
  static CV internal(const Multivector& x) { return tensor(Multivector(1.0), x); }
  static CV spacetime(const Multivector& x) { return tensor(x, Multivector(1.0)); }

  CV& operator+=(const CV& o);
  CV& operator-=(const CV& o);
  CV& operator*=(double s);
  CV reverse() const;
  double norm() const;
  bool spacetime_grade(int r, double tol) const;  // every part has pure grade r
};

CV operator+(CV a, const CV& b);
CV operator-(CV a, const CV& b);
CV operator*(double s, CV a);
CV operator*(const CV& a, const CV& b);

// spacetime multivector with a complex coefficient: re + i im
struct CMV {
  Multivector re, im;
};
// Pauli matrices for tau_k, frak_i -> i I, so frak_i tau_2 -> [[0,1],[-1,0]].
// Throws on odd internal parts.
using Mat2MV = std::array<std::array<CMV, 2>, 2>;
Mat2MV matrix_correspondence(const CV& x);
Mat2MV matmul(const Mat2MV& a, const Mat2MV& b);
Mat2MV real_matrix(const Multivector& a, const Multivector& b, const Multivector& c, const Multivector& d);
double mat_distance(const Mat2MV& a, const Mat2MV& b);

struct CVMode {
  CV A;
  std::array<double, 4> p{};
  int eps = -1;
};

struct CVField {
  std::vector<CVMode> modes;

  CV operator()(const Point& x) const;
  CVField& operator+=(const CVField& o);
  CVField scaled(double s) const;
  CVField right(const CV& r) const;  // r must commute with gamma_21 in its spacetime part
  CVField left(const CV& l) const;   // spacetime part of l must be constant in x
  CVField merged(double tol = 1e-12) const;
  double amp_norm() const;
};

CVField operator+(CVField a, const CVField& b);
CVField operator-(CVField a, const CVField& b);

CVField apply_dirac(const CVField& f);
CVField lift(const fields::PlaneWaveField& f, const Multivector& internal);

enum class Kind { K, M };

// K = lambda^s_{-+} (x) 1 - rho^a_{+-} (x) i tau_2, M uses lambda^s_{+-} and rho^a_{-+}
CVField build_K(const fields::Octet& o);
CVField build_M(const fields::Octet& o);
CVField build(const fields::Octet& o, Kind k);

// d F g21 - m F i tau_2 g0 for K, d F g21 + m F i tau_2 g0 for M
CVField km_residual(const CVField& f, Kind k, double m);
// F (1 + tau_3)/2
CVField projector(const CVField& f);
// d P g21 + i m tau_2 P g0 for K, d P g21 - i m tau_2 P g0 for M, P = projector(F)
CVField projector_residual(const CVField& f, Kind k, double m);

// solutions of km_residual = 0: single modes need p^2 = -m^2; A = (L + R) B.
// An odd spacetime seed B gives an even amplitude A; seeds in span{1, frak_i tau_2} keep that span.
CVMode literal_solution_mode(Kind k, const std::array<double, 4>& p, int eps, const CV& seed, double m);

// J = F tau_1 g0 reverse(F)
CV current(const CVField& f, const Point& x);
// d _| J in closed form from the mode sum
CV current_divergence(const CVField& f, const Point& x);
CV current_divergence_fd(const CVField& f, const Point& x, double h = 1e-5);

// Steps of the conservation argument at one point, each as a residual norm:
//   first_order: d F - s i m F tau_2 g012 (s = +1 for K, -1 for M)
//   split:       d_|J - (X + internal reverse of X), X = <(dF) tau_1 g0 rev(F)>_0
//   substituted: <(dF) tau_1 g0 rev(F)>_0 - s m <F tau_3 g12 rev(F)>_0
//   vanishing:   <F tau_3 g12 rev(F)>_0 + its internal reverse
struct ConservationSteps {
  double first_order = 0, split = 0, substituted = 0, vanishing = 0;
};
ConservationSteps conservation_steps(const CVField& f, Kind k, double m, const Point& x);

struct GaugePotential {
  std::array<Multivector, 3> A{};  // constant 1-vectors A^i
  CV field() const;                // A^i (x) tau_i
};

// d F g21 -/+ m F Gamma_5 Gamma_20 g0 + q Gamma_5 calA F
CVField gauge_residual(const CVField& f, Kind k, const GaugePotential& a, double q, double m);
Multivector gauge_generator(const std::array<double, 3>& theta, double q);  // Gamma_5 q theta^i Gamma_i0
struct GaugeTransformed {
  CVField f;
  GaugePotential a;
  Multivector U;
};
GaugeTransformed gauge_transform(const CVField& f, const GaugePotential& a, const std::array<double, 3>& theta,
                                 double q);

}  // namespace sta::km
