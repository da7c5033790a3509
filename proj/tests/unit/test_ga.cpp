#include <vector>

#include "test_util.hpp"

using namespace sta;
using ga::Multivector;
using test::Rng;

namespace {

// product of two basis blades from the generator lists, by bubble sort with the metric
std::pair<unsigned, double> oracle_blade_product(unsigned a, unsigned b) {
  std::vector<int> g;
  for (int k = 0; k < 4; ++k)
    if (a & (1u << k)) g.push_back(k);
  for (int k = 0; k < 4; ++k)
    if (b & (1u << k)) g.push_back(k);
  double sign = 1;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      if (g[i] > g[i + 1]) {
        std::swap(g[i], g[i + 1]);
        sign = -sign;
        swapped = true;
      } else if (g[i] == g[i + 1]) {
        sign *= eta(g[i]);
        g.erase(g.begin() + i, g.begin() + i + 2);
        swapped = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int k : g) mask |= 1u << k;
  return {mask, sign};
}

Multivector oracle_product(const Multivector& x, const Multivector& y) {
  Multivector r;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      const auto [m, s] = oracle_blade_product(a, b);
      r.c[m] += s * x.c[a] * y.c[b];
    }
  return r;
}

}  // namespace

TEST_CASE("geometric product matches the generator-list oracle") {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      const auto [m, s] = oracle_blade_product(a, b);
      const Multivector p = Multivector::blade(a) * Multivector::blade(b);
      CHECK(p.c[m] == s);
      CHECK(ga::blade_sign(a, b) == s);
    }
  Rng r;
  for (int i = 0; i < 50; ++i) {
    const Multivector x = r.mv(), y = r.mv();
    CHECK(ga::dist(x * y, oracle_product(x, y)) < 1e-14);
  }
}

TEST_CASE("generators anticommute with the metric") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Multivector a = Multivector::gen(mu), b = Multivector::gen(nu);
      CHECK(ga::dist(a * b + b * a, Multivector(mu == nu ? 2 * eta(mu) : 0.0)) == 0.0);
    }
  for (int k = 1; k <= 3; ++k) CHECK(ga::dist(ga::sigma(k) * ga::sigma(k), Multivector(1.0)) == 0.0);
  const Multivector i = ga::pseudoscalar();
  CHECK(ga::dist(i * i, Multivector(-1.0)) == 0.0);
  CHECK(ga::dist(ga::sigma(1) * ga::sigma(2) * ga::sigma(3), i) == 0.0);
}

TEST_CASE("algebra properties on random multivectors") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const Multivector a = r.mv(), b = r.mv(), c = r.mv();
    CHECK(ga::dist((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(ga::dist(a * (b + c), a * b + a * c) < 1e-13);
    CHECK(ga::dist((a * b).reverse(), b.reverse() * a.reverse()) < 1e-13);
    CHECK(ga::dist(a.reverse().reverse(), a) == 0.0);
    CHECK(ga::dist((a * b).involute(), a.involute() * b.involute()) < 1e-13);
    // (KL).M = K.(M rev L)
    CHECK(std::abs(ga::scalar_product(a * b, c) - ga::scalar_product(a, c * b.reverse())) < 1e-13);
    // grade decomposition is complete and reverse acts by (-1)^{r(r-1)/2}
    Multivector sum;
    for (int g = 0; g <= 4; ++g) {
      sum += a.grade(g);
      const double s = (g * (g - 1) / 2) % 2 ? -1.0 : 1.0;
      CHECK(ga::dist(a.grade(g).reverse(), s * a.grade(g)) == 0.0);
    }
    CHECK(ga::dist(sum, a) == 0.0);
    CHECK(ga::dist(a.even() + a.odd(), a) == 0.0);
  }
}

TEST_CASE("vector contraction and exterior product split the geometric product") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const Multivector a = r.mv().grade(1), B = r.mv();
    const Multivector lc = 0.5 * (a * B - B.involute() * a);
    const Multivector ex = 0.5 * (a * B + B.involute() * a);
    CHECK(ga::dist(ga::left_contraction(a, B), lc) < 1e-14);
    CHECK(ga::dist(ga::exterior_product(a, B), ex) < 1e-14);
    CHECK(ga::dist(ga::left_contraction(a, B) + ga::exterior_product(a, B), a * B) < 1e-14);
  }
}

TEST_CASE("matrix representations are faithful homomorphisms") {
  Rng r;
  for (auto* rp : {&rep::standard(), &rep::weyl()}) {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const Mat4 ac = rp->up[mu] * rp->up[nu] + rp->up[nu] * rp->up[mu];
        CHECK(test::mat_err(ac, Mat4::Identity() * (mu == nu ? 2 * eta(mu) : 0.0)) < 1e-15);
      }
    CHECK(test::mat_err(rp->g5, rp->up[0] * rp->up[1] * rp->up[2] * rp->up[3]) < 1e-15);
    for (int i = 0; i < 30; ++i) {
      const Multivector a = r.mv(), b = r.mv();
      CHECK(test::mat_err(rep::matrix_rep(a * b, *rp), rep::matrix_rep(a, *rp) * rep::matrix_rep(b, *rp)) < 1e-13);
    }
  }
  const Mat4 S = rep::change_of_basis();
  CHECK(test::mat_err(S * S, Mat4::Identity()) < 1e-15);
  for (int mu = 0; mu < 4; ++mu) CHECK(test::mat_err(S * rep::standard().up[mu] * S, rep::weyl().up[mu]) < 1e-15);
}

TEST_CASE("closed-form exponential agrees with the series") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const double th = r(-3, 3);
    const Multivector rot = th * ga::gamma21();
    const Multivector want = Multivector(std::cos(th)) + std::sin(th) * ga::gamma21();
    CHECK(ga::dist(ga::exp_bivector_like(rot), want) < 1e-14);
    const Multivector boost = r(-2, 2) * ga::sigma(1 + i % 3);
    CHECK(ga::dist(ga::exp_bivector_like(boost), ga::exp_series(boost, 40)) < 1e-12);
    const Multivector e = ga::exp_bivector_like(rot);
    CHECK(ga::dist(e * e.reverse(), Multivector(1.0)) < 1e-14);
  }
}
