#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sta/ga.hpp"
#include "sta/modes.hpp"

namespace sta::test {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed = 20240917) : g(seed) {}
  double operator()(double a = -1, double b = 1) { return std::uniform_real_distribution<double>(a, b)(g); }

  ga::Multivector mv() {
    ga::Multivector m;
    for (auto& x : m.c) x = (*this)();
    return m;
  }
  Vec4 vec4() {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = cplx((*this)(), (*this)());
    return v;
  }
  Vec2 vec2() {
    Vec2 v;
    for (int i = 0; i < 2; ++i) v[i] = cplx((*this)(), (*this)());
    return v;
  }
  std::array<double, 3> dir() {
    for (;;) {
      std::array<double, 3> d{(*this)(), (*this)(), (*this)()};
      const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
      if (n > 0.1 && n <= 1) return {d[0] / n, d[1] / n, d[2] / n};
    }
  }
  modes::OnShellMomentum momentum(double m = 1.0, double pmax = 3.0) {
    const auto d = dir();
    const double a = (*this)(0.05, pmax) * m;
    return {m, a * d[0], a * d[1], a * d[2]};
  }
  std::array<double, 4> point(double s = 2.0) { return {(*this)(-s, s), (*this)(-s, s), (*this)(-s, s), (*this)(-s, s)}; }
};

inline double mat_err(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace sta::test
