#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "sta/harness/check.hpp"
#include "sta/modes.hpp"

namespace sta::harness::util {

inline ga::Multivector random_mv(Context& c) {
  ga::Multivector m;
  for (auto& x : m.c) x = c.uniform(-1, 1);
  return m;
}

inline ga::Multivector random_even(Context& c) { return random_mv(c).even(); }

inline ga::Multivector random_vector(Context& c) { return random_mv(c).grade(1); }

inline Vec4 random_vec4(Context& c) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v[i] = cplx(c.uniform(-1, 1), c.uniform(-1, 1));
  return v;
}

inline Vec2 random_vec2(Context& c) {
  Vec2 v;
  for (int i = 0; i < 2; ++i) v[i] = cplx(c.uniform(-1, 1), c.uniform(-1, 1));
  return v;
}

inline std::array<double, 3> random_dir(Context& c) {
  for (;;) {
    std::array<double, 3> d{c.uniform(-1, 1), c.uniform(-1, 1), c.uniform(-1, 1)};
    const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (n > 0.1 && n <= 1) return {d[0] / n, d[1] / n, d[2] / n};
  }
}

// on-shell momentum with |p| <= pmax * m, never exactly at rest
inline modes::OnShellMomentum random_momentum(Context& c, double m = 1.0, double pmax = 3.0) {
  const auto d = random_dir(c);
  const double a = c.uniform(0.05, pmax) * m;
  return {m, a * d[0], a * d[1], a * d[2]};
}

inline std::array<double, 4> random_point(Context& c, double scale = 2.0) {
  return {c.uniform(-scale, scale), c.uniform(-scale, scale), c.uniform(-scale, scale), c.uniform(-scale, scale)};
}

inline double mat_err(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Outcome max_of(double r) { return {r, {}, -1}; }

}  // namespace sta::harness::util
