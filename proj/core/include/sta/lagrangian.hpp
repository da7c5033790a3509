#pragma once

#include <functional>
#include <map>

#include "sta/fields.hpp"

namespace sta::lagrangian {

using fields::Key;
using fields::Point;
using ga::Multivector;

// The kinetic fields are lambda^s_{+-}, lambda^a_{-+}, rho^a_{+-}, rho^s_{-+};
// the mass terms also pull in rho^a_{-+} and rho^s_{+-}.
struct FieldConfiguration {
  std::map<Key, fields::PlaneWaveField> f;
  double m = 1.0;

  static FieldConfiguration from_octet(const fields::Octet& o);
};

const std::array<Key, 4>& kinetic_fields();

// values and d-images of every field at one point
struct PointValues {
  std::map<Key, Multivector> v, d;
};
PointValues evaluate(const FieldConfiguration& c, const Point& x);

// A . B is <A reverse(B)>_0
double density(const PointValues& pv, double m);
double lagrangian_density(const FieldConfiguration& c, const Point& x);

enum class Slot { value, gradient };
using Density = std::function<double(const PointValues&)>;

// Central differences over the 16 coefficients of the selected slot,
// assembled as sum_i dL/dc_i e_i / (e_i . e_i). The density is quadratic, so
// a large step costs no truncation error and keeps roundoff small.
Multivector multiform_derivative(const Density& L, const PointValues& base, const Key& k, Slot s,
                                 double h = 1e-2);

// closed forms: d_X L = 1/2 dX i g3 -/+ m partner, d_{dX} L = -1/2 X i g3
Multivector analytic_value_derivative(const PointValues& pv, const Key& k, double m);
Multivector analytic_gradient_derivative(const PointValues& pv, const Key& k);

// d_X L - d(d_{dX} L) with the outer d by central differences in x
Multivector euler_lagrange_residual(const FieldConfiguration& c, const Key& k, const Point& x,
                                    double hx = 1e-4);

// index into fields::first_order_lines() of the first-order line whose leading
// field is k
int matching_line(const Key& k);
// value at x of that line evaluated on the configuration
Multivector line_value(const FieldConfiguration& c, const Key& k, const Point& x);

}  // namespace sta::lagrangian
