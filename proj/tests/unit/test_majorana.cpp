#include "sta/majorana.hpp"
#include "test_util.hpp"

using namespace sta;
using grassmann::Element;
using grassmann::QC;
using test::Rng;

TEST_CASE("Grassmann generators anticommute and square to zero") {
  const int n = 4;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element a = Element::generator(n, i), b = Element::generator(n, j);
      CHECK((a * b + b * a).is_zero());
    }
  std::mt19937_64 g(3);
  for (int k = 0; k < 20; ++k) {
    const Element x = grassmann::random_element(n, g), y = grassmann::random_element(n, g),
                  z = grassmann::random_element(n, g);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    const Element o = grassmann::random_element(n, g, 1);
    CHECK((o * o).is_zero());
  }
}

TEST_CASE("Grassmann involutions: antilinear, product rule, double star") {
  const int n = 4;
  std::mt19937_64 g(5);
  for (const auto& inv : {grassmann::Involution::self_conjugate(n), grassmann::Involution::self_conjugate_order_preserving(n)}) {
    for (int k = 0; k < 20; ++k) {
      const Element x = grassmann::random_element(n, g), y = grassmann::random_element(n, g);
      CHECK((x + y).star(inv) == x.star(inv) + y.star(inv));
      CHECK((QC::I() * x).star(inv) == QC(0, -1) * x.star(inv));
      CHECK(x.star(inv).star(inv) == x);
      const Element want = inv.reverses_products ? y.star(inv) * x.star(inv) : x.star(inv) * y.star(inv);
      CHECK((x * y).star(inv) == want);
    }
  }
}

TEST_CASE("exact rational rank") {
  using grassmann::Q;
  CHECK(grassmann::rank({{1, 2}, {2, 4}}) == 1);
  CHECK(grassmann::rank({{1, 2, 3}, {0, 1, Q(1, 3)}, {1, 3, Q(10, 3)}}) == 2);
  CHECK(grassmann::rank({{1, 0}, {0, 1}}) == 2);
}

TEST_CASE("complex Majorana and Dirac conditions only admit zero") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const auto c = majorana::majorana_dirac_compatibility(r.vec2());
    CHECK(c.null_dim_plus == 0);
    CHECK(c.null_dim_minus == 0);
    CHECK_FALSE(c.compatible);
  }
  CHECK(majorana::majorana_dirac_compatibility(Vec2::Zero()).compatible);
}

TEST_CASE("Majorana condition and its preservation under boosts") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const Vec4 psi = majorana::majorana_spinor(r.vec2());
    // i gamma'^2 psi^* = psi, computed directly
    CHECK((cplx(0, 1) * rep::weyl().up[2] * psi.conjugate() - psi).norm() < 1e-13);
    CHECK(majorana::majorana_condition_residual(psi) < 1e-13);
    const Vec4 b = modes::half_boost_weyl({r(-1, 1), r(-1, 1), r(-1, 1)}) * psi;
    CHECK(majorana::majorana_condition_residual(b) < 1e-12 * b.norm());
  }
}

TEST_CASE("quantized Majorana rest and boosted spinors") {
  const double h = 1.0 / std::sqrt(2.0);
  const auto q = majorana::quantum_majorana_rest();
  CHECK(q.u0[0] == Vec4(h, 0, h, 0));
  CHECK(q.u0[1] == Vec4(0, h, 0, h));
  CHECK(q.v0[0] == Vec4(0, h, 0, -h));
  CHECK(q.v0[1] == Vec4(-h, 0, h, 0));
  CHECK(majorana::rest_parity_residual(q) == 0.0);
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const auto p = r.momentum(r(0.5, 2), 5);
    for (int s : {1, -1}) {
      const auto d = majorana::momentum_dirac_residual(p, s, majorana::VBoost::corrected);
      CHECK(d.u < 1e-12);
      CHECK(d.v < 1e-12);
      const Mat4 ps = p.slash(rep::weyl());
      const Vec4 u = majorana::boosted_u(p, s);
      CHECK((ps * u - p.m * u).norm() < 1e-12);
    }
  }
}

TEST_CASE("Grassmann-valued Majorana field has zero vector current") {
  std::mt19937_64 g(11);
  const auto rep = majorana::grassmann_majorana_check(grassmann::Involution::self_conjugate(4), g, 3);
  CHECK(rep.axioms);
  CHECK(rep.star_star_identity);
  CHECK(rep.chain_steps);
  CHECK(rep.current_zero);
  CHECK(rep.axial_nonzero);
}
