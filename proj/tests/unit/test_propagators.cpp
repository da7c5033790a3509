#include <stdexcept>

#include "sta/propagators.hpp"
#include "test_util.hpp"

using namespace sta;
using km::CV;
using test::Rng;

namespace {

CV random_cv(Rng& r) {
  CV x;
  for (const auto& b : km::internal_basis()) x += CV::tensor(r.mv(), b);
  return x;
}

prop::Four off_shell(Rng& r, double m) {
  for (;;) {
    const prop::Four p{r(-3, 3), r(-3, 3), r(-3, 3), r(-3, 3)};
    if (std::abs(p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3] - m * m) > 0.1) return p;
  }
}

}  // namespace

TEST_CASE("kernel solves its defining equation off shell and refuses the pole") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const double m = r(0.5, 2);
    const CV P = random_cv(r);
    CHECK(prop::defining_residual(off_shell(r, m), P, m) < 1e-12 * P.norm());
  }
  CHECK_THROWS_AS(prop::kernel_apply({std::sqrt(2.0), 1, 0, 0}, random_cv(r), 1.0), std::domain_error);
}

TEST_CASE("pole residues match the causal split") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const CV P = random_cv(r);
    CHECK(prop::residue_mismatch({r(-2, 2), r(-2, 2), r(-2, 2)}, r(0.5, 2), P) < 1e-8 * P.norm());
  }
}

TEST_CASE("Dirac kernel and the first rewriting identity") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const double m = r(0.5, 2);
    const auto p = off_shell(r, m);
    CHECK(prop::dirac_kernel_inverse_residual(p, m) < 1e-12);
    const Vec4 l = r.vec4(), rho = r.vec4();
    CHECK(prop::rewriting_residual(p, l, rho, m).first < 1e-12 * (l.norm() + rho.norm()));
    // the second identity as printed is off by 2m rho
    CHECK(std::abs(prop::rewriting_residual(p, l, rho, m).second - 2 * m * rho.norm()) < 1e-12 * rho.norm());
  }
}

TEST_CASE("G field and the Clifford channel basis") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const prop::Three p{r(-2, 2), r(-2, 2), r(-2, 2)};
    const Mat4 G = prop::build_G(p);
    CHECK(test::mat_err(G * G, Mat4::Identity()) < 1e-14);
    const auto coeffs = prop::project_channels(G);
    const auto phi = std::atan2(p[1], p[0]);
    CHECK(std::abs(coeffs[prop::channel_index("g5g1")] - cplx(-std::sin(phi))) < 1e-14);
    CHECK(std::abs(coeffs[prop::channel_index("g5g2")] - cplx(std::cos(phi))) < 1e-14);
  }
  const auto& ch = prop::channels();
  CHECK(ch.size() == 16);
  for (std::size_t a = 0; a < ch.size(); ++a)
    for (std::size_t b = 0; b < ch.size(); ++b) {
      const cplx t = (ch[a].B * ch[b].B.adjoint()).trace();
      CHECK(std::abs(t - cplx(a == b ? 4.0 : 0.0)) < 1e-13);
    }
  CHECK_THROWS_AS(prop::build_G({0, 0, 1}), std::domain_error);
}

TEST_CASE("radial Bessel integral closed form against quadrature") {
  // int_0^P p J1(p r) exp(-eps p^2) dp by composite Simpson, P deep in the Gaussian tail
  for (double eps : {0.1, 0.05, 0.0125})
    for (double rr : {0.3, 1.0, 2.5, 6.0}) {
      const double P = std::sqrt(40 / eps);
      const int n = 200000;
      const double h = P / n;
      double s = 0;
      for (int i = 0; i <= n; ++i) {
        const double p = i * h, f = p * std::cyl_bessel_j(1.0, p * rr) * std::exp(-eps * p * p);
        s += f * (i == 0 || i == n ? 1 : i % 2 ? 4 : 2);
      }
      s *= h / 3;
      CHECK(std::abs(prop::radial_bessel_closed_form(rr, eps) - s) < 1e-9 * std::max(1.0, std::abs(s)));
    }
}

TEST_CASE("Fourier grid configuration validation") {
  prop::FourierGridConfig c;
  CHECK_NOTHROW(c.validate());
  auto bad = c;
  bad.eps = {0.1, -0.05};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.grid = 100;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.grid = 2 * prop::FourierGridConfig::max_grid;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.eps.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(c.required_grid() <= 256);
}

TEST_CASE("transform at a small grid keeps channel content and parity") {
  prop::FourierGridConfig c;
  c.grid = 64;
  c.eps = {0.1};
  c.threads = 1;
  const Mat4 a = prop::fourier_G({0.7, 0.2, 0}, 0.1, c);
  const Mat4 b = prop::fourier_G({-0.7, -0.2, 0}, 0.1, c);
  CHECK(test::mat_err(a, -b) < 1e-12 * a.norm());
  const auto co = prop::project_channels(a);
  double other = 0;
  for (std::size_t k = 0; k < co.size(); ++k)
    if (prop::channels()[k].name != "g5g1" && prop::channels()[k].name != "g5g2") other = std::max(other, std::abs(co[k]));
  CHECK(other < 1e-12 * a.norm());
}
