#include "sta/lagrangian.hpp"

#include <cmath>
#include <stdexcept>

namespace sta::lagrangian {

using namespace ga;
using fields::ElkoType;
using fields::Label;

namespace {

const Key LS_PM{ElkoType::lambda_s, Label::plus_minus};
const Key LA_MP{ElkoType::lambda_a, Label::minus_plus};
const Key RA_PM{ElkoType::rho_a, Label::plus_minus};
const Key RS_MP{ElkoType::rho_s, Label::minus_plus};
const Key RA_MP{ElkoType::rho_a, Label::minus_plus};
const Key RS_PM{ElkoType::rho_s, Label::plus_minus};

Multivector i_g3() { return pseudoscalar() * Multivector::gen(3); }

// mass partner and the sign of its term in d_X L
bool mass_partner(const Key& k, Key& partner, double& sign) {
  if (k == LS_PM) { partner = RA_MP; sign = -1; return true; }
  if (k == LA_MP) { partner = RS_PM; sign = +1; return true; }
  if (k == RA_MP) { partner = LS_PM; sign = -1; return true; }
  if (k == RS_PM) { partner = LA_MP; sign = +1; return true; }
  return false;
}

const Multivector& get(const std::map<Key, Multivector>& m, const Key& k) {
  static const Multivector zero;
  auto it = m.find(k);
  return it == m.end() ? zero : it->second;
}

}  // namespace

const std::array<Key, 4>& kinetic_fields() {
  static const std::array<Key, 4> k{LS_PM, LA_MP, RA_PM, RS_MP};
  return k;
}

FieldConfiguration FieldConfiguration::from_octet(const fields::Octet& o) {
  FieldConfiguration c;
  c.m = o.m;
  c.f = o.f;
  return c;
}

PointValues evaluate(const FieldConfiguration& c, const Point& x) {
  PointValues pv;
  for (const auto& [k, f] : c.f) {
    pv.v[k] = f(x);
    pv.d[k] = fields::apply_dirac_operator(f)(x);
  }
  return pv;
}

double density(const PointValues& pv, double m) {
  const Multivector ig3 = i_g3();
  double kin = 0;
  for (const Key& k : kinetic_fields()) kin += scalar_product(get(pv.d, k) * ig3, get(pv.v, k));
  const double mass = -2 * m * scalar_product(get(pv.v, LS_PM), get(pv.v, RA_MP)) +
                      2 * m * scalar_product(get(pv.v, LA_MP), get(pv.v, RS_PM));
  return 0.5 * (kin + mass);
}

double lagrangian_density(const FieldConfiguration& c, const Point& x) { return density(evaluate(c, x), c.m); }

Multivector multiform_derivative(const Density& L, const PointValues& base, const Key& k, Slot s, double h) {
  Multivector g;
  PointValues pv = base;
  auto& slot = s == Slot::value ? pv.v[k] : pv.d[k];
  const Multivector x0 = slot;
  const double scale = std::max(1.0, x0.norm());
  for (unsigned i = 0; i < 16; ++i) {
    const double step = h * scale;
    slot = x0;
    slot.c[i] += step;
    const double up = L(pv);
    slot = x0;
    slot.c[i] -= step;
    const double dn = L(pv);
    const double dl = (up - dn) / (2 * step);
    if (!std::isfinite(dl)) throw std::domain_error("multiform_derivative: non-finite density");
    const Multivector e = Multivector::blade(i);
    g += e * (dl / scalar_product(e, e));
  }
  slot = x0;
  return g;
}

Multivector analytic_value_derivative(const PointValues& pv, const Key& k, double m) {
  Multivector out;
  for (const Key& q : kinetic_fields())
    if (q == k) out = 0.5 * get(pv.d, k) * i_g3();
  Key partner;
  double sign;
  if (mass_partner(k, partner, sign)) out += sign * m * get(pv.v, partner);
  return out;
}

Multivector analytic_gradient_derivative(const PointValues& pv, const Key& k) {
  for (const Key& q : kinetic_fields())
    if (q == k) return -0.5 * get(pv.v, k) * i_g3();
  return Multivector();
}

Multivector euler_lagrange_residual(const FieldConfiguration& c, const Key& k, const Point& x, double hx) {
  const Density L = [m = c.m](const PointValues& pv) { return density(pv, m); };
  const Multivector dv = multiform_derivative(L, evaluate(c, x), k, Slot::value);
  Multivector div;
  for (int mu = 0; mu < 4; ++mu) {
    Point a = x, b = x;
    a[mu] += hx;
    b[mu] -= hx;
    const Multivector ga_ = multiform_derivative(L, evaluate(c, a), k, Slot::gradient);
    const Multivector gb = multiform_derivative(L, evaluate(c, b), k, Slot::gradient);
    div += Multivector::gen_up(mu) * ((ga_ - gb) * (0.5 / hx));
  }
  return dv - div;
}

int matching_line(const Key& k) {
  const auto& lines = fields::first_order_lines();
  for (int i = 0; i < 8; ++i)
    if (lines[i].x == k) return i;
  throw std::invalid_argument("matching_line");
}

Multivector line_value(const FieldConfiguration& c, const Key& k, const Point& x) {
  fields::Octet o;
  o.m = c.m;
  o.f = c.f;
  const auto& l = fields::first_order_lines()[matching_line(k)];
  if (!o.f.count(l.y)) o.f[l.y] = {};
  return fields::first_order_line_residual(o, l)(x);
}

}  // namespace sta::lagrangian
