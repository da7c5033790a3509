#pragma once

#include <array>
#include <map>
#include <vector>

#include "sta/modes.hpp"

namespace sta::fields {

using ga::Multivector;
using modes::ElkoType;
using modes::Label;
using Point = std::array<double, 4>;  // contravariant x^mu

// A exp(gamma_21 eps p_mu x^mu) with p given by contravariant components
struct Mode {
  Multivector A;
  std::array<double, 4> p{};
  int eps = -1;

  double phase(const Point& x) const;
  Multivector p_vec() const { return Multivector::vector(p[0], p[1], p[2], p[3]); }
  double p2() const { return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3]; }
};

struct PlaneWaveField {
  std::vector<Mode> modes;

  Multivector operator()(const Point& x) const;
  PlaneWaveField& operator+=(const PlaneWaveField& o);
  PlaneWaveField operator*(const Multivector& right) const;  // right multiplication
  PlaneWaveField scaled(double s) const;
  // merge modes sharing (p, eps); exponentials with distinct (eps p) are independent
  PlaneWaveField merged(double tol = 1e-12) const;
  // sqrt(sum |A|^2) after merging; zero iff the field vanishes identically
  double amp_norm() const;
};

PlaneWaveField operator+(PlaneWaveField a, const PlaneWaveField& b);
PlaneWaveField operator-(PlaneWaveField a, const PlaneWaveField& b);
PlaneWaveField left_mul(const Multivector& left, const PlaneWaveField& f);

PlaneWaveField single(const Multivector& A, const modes::OnShellMomentum& p, int eps);

// closed form: per mode eps p A gamma_21
PlaneWaveField apply_dirac_operator(const PlaneWaveField& f);
// gamma^mu d_mu f by central differences
Multivector dirac_fd(const PlaneWaveField& f, const Point& x, double h = 1e-5);

// d psi gamma_21 - m psi gamma_0
PlaneWaveField dh_residual(const PlaneWaveField& f, double m);

// Covariant plane waves sum_k a_k exp(i eps p.x)
struct CovMode {
  Vec4 a = Vec4::Zero();
  std::array<double, 4> p{};
  int eps = -1;
};
using CovField = std::vector<CovMode>;
// i gamma^mu d_mu psi - m psi, per mode (standard rep)
CovField dirac_residual_covariant(const CovField& f, double m);
CovField to_covariant(const PlaneWaveField& f);
// the operator residual R read through the dictionary as (R gamma_0)
CovField dh_residual_as_covariant(const PlaneWaveField& r);
double cov_distance(const CovField& a, const CovField& b);
CovField cov_merged(const CovField& f, double tol = 1e-12);

// box f + m^2 f
PlaneWaveField kg_residual(const PlaneWaveField& f, double m);

// Elko octet keyed by (type, label)
using Key = std::pair<ElkoType, Label>;
struct Octet {
  std::map<Key, PlaneWaveField> f;
  double m = 1.0;
  const PlaneWaveField& at(ElkoType t, Label l) const;
};

// frequency signs: lambda^s and rho^a use -1, lambda^a and rho^s use +1
int frequency_sign(ElkoType t);
Octet build_octet(const modes::OnShellMomentum& p);
// superpose several momenta into one octet
Octet build_octet(const std::vector<modes::OnShellMomentum>& ps, const std::vector<double>& weights);

// one first-order line: d X gamma_21 + s m Y gamma_0 = 0
struct FirstOrderLine {
  Key x, y;
  int sign;
};
const std::array<FirstOrderLine, 8>& first_order_lines();
PlaneWaveField first_order_line_residual(const Octet& o, const FirstOrderLine& l);
std::array<PlaneWaveField, 8> first_order_residual(const Octet& o);
// covariant form i gamma.d X + s m Y, through the dictionary
CovField first_order_line_residual_covariant(const Octet& o, const FirstOrderLine& l);

// octet with lambda^s_{-+} given the opposite frequency sign
Octet kg_not_first_order_witness(const modes::OnShellMomentum& p);

// For R_x = d X g21 + s_x m Y g0 and R_y = d Y g21 + s_y m X g0 the identity
//   d R_x + s_x m R_y g21 g0 = (box X + s_x s_y m^2 X) g21
// holds for arbitrary X, Y. Returns (lhs, rhs).
std::pair<PlaneWaveField, PlaneWaveField> first_order_composition(const PlaneWaveField& X, const PlaneWaveField& Y,
                                                              int s_x, int s_y, double m);
// box f (closed form, per mode -p^2 A)
PlaneWaveField box(const PlaneWaveField& f);

struct BilinearSet {
  double sigma = 0, omega = 0;
  Multivector J, S, K;
};
enum class LounestoTable { standard, flagpole_nonzero_K };
struct LounestoClass {
  int cls = 0;
  BilinearSet b;
};
BilinearSet bilinears(const Multivector& psi);
LounestoClass classify(const BilinearSet& b, double scale2, LounestoTable t = LounestoTable::standard);
LounestoClass classify(const Multivector& psi, LounestoTable t = LounestoTable::standard);

struct Lightlike {
  bool J_null, K_null, J_nonzero, K_nonzero;
  double J0;
};
Lightlike lightlike_check(const BilinearSet& b, double scale2);

}  // namespace sta::fields
