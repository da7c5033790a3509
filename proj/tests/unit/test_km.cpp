#include "sta/km.hpp"
#include "test_util.hpp"

using namespace sta;
using km::CV;
using km::CVField;
using km::Kind;
using test::Rng;

namespace {

const ga::Multivector& i_tau2() {
  static const ga::Multivector v = km::frak_i() * km::tau(2);
  return v;
}

CV random_cv(Rng& r) {
  CV x;
  for (const auto& b : km::internal_basis()) x += CV::tensor(r.mv(), b);
  return x;
}

std::array<double, 4> spacelike(Rng& r, double m) {
  const auto d = r.dir();
  const double p0 = r(-2, 2), a = std::sqrt(p0 * p0 + m * m);
  return {p0, a * d[0], a * d[1], a * d[2]};
}

CVField solution(Rng& r, Kind k, double m, int n) {
  CVField f;
  for (int i = 0; i < n; ++i) {
    const CV seed = CV::tensor(r.mv().odd(), ga::Multivector(1.0)) + CV::tensor(r.mv().odd(), i_tau2());
    f.modes.push_back(km::literal_solution_mode(k, spacelike(r, m), i % 2 ? 1 : -1, seed, m));
  }
  return f;
}

}  // namespace

TEST_CASE("internal algebra") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(ga::dist(km::tau(i) * km::tau(j) + km::tau(j) * km::tau(i), ga::Multivector(i == j ? 2.0 : 0.0)) == 0.0);
  CHECK(ga::dist(km::frak_i() * km::frak_i(), ga::Multivector(-1.0)) == 0.0);
  for (const auto& b : km::internal_basis()) {
    CHECK(ga::dist(km::frak_i() * b, b * km::frak_i()) == 0.0);
    CHECK(ga::dist(km::internal_reverse(km::internal_reverse(b)), b) == 0.0);
  }
}

TEST_CASE("tensor products: associativity, reverse and the matrix correspondence") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const CV a = random_cv(r), b = random_cv(r), c = random_cv(r);
    CHECK(((a * b) * c - a * (b * c)).norm() < 1e-12 * a.norm() * b.norm() * c.norm());
    CHECK(((a * b).reverse() - b.reverse() * a.reverse()).norm() < 1e-12 * a.norm() * b.norm());
    CHECK(km::mat_distance(km::matrix_correspondence(a * b),
                           km::matmul(km::matrix_correspondence(a), km::matrix_correspondence(b))) <
          1e-12 * a.norm() * b.norm());
  }
  // frak_i tau_2 -> [[0, 1], [-1, 0]]
  const auto m = km::matrix_correspondence(CV::internal(i_tau2()));
  CHECK(km::mat_distance(m, km::real_matrix(ga::Multivector(0.0), ga::Multivector(1.0), ga::Multivector(-1.0),
                                            ga::Multivector(0.0))) < 1e-15);
}

TEST_CASE("exact plane-wave solutions of the K and M equations") {
  Rng r;
  const double m = 1.3;
  for (int i = 0; i < 20; ++i)
    for (Kind k : {Kind::K, Kind::M}) {
      const CVField F = solution(r, k, m, 3);
      CHECK(km::km_residual(F, k, m).amp_norm() < 1e-12 * F.amp_norm());
      // the projected field solves the projected equation with the sign of the other kind
      const Kind other = k == Kind::K ? Kind::M : Kind::K;
      CHECK(km::projector_residual(F, other, m).amp_norm() < 1e-12 * F.amp_norm());
    }
}

TEST_CASE("current conservation: closed form, finite differences and the argument steps") {
  Rng r;
  const double m = 1.3;
  for (int i = 0; i < 20; ++i)
    for (Kind k : {Kind::K, Kind::M}) {
      const CVField F = solution(r, k, m, 2);
      const auto x = r.point();
      const double scale = std::max(1.0, F.amp_norm() * F.amp_norm());
      CHECK(km::current_divergence(F, x).norm() < 1e-12 * scale);
      CHECK(km::current_divergence_fd(F, x).norm() < 1e-6 * scale);
      const auto st = km::conservation_steps(F, k, m, x);
      CHECK(st.vanishing < 1e-12 * scale);
    }
}

TEST_CASE("global gauge transformations map solutions to solutions") {
  Rng r;
  const double m = 1.3;
  for (int i = 0; i < 50; ++i) {
    const Kind k = i % 2 ? Kind::M : Kind::K;
    const CVField F = solution(r, k, m, 2);
    const std::array<double, 3> th{r(-3, 3), r(-3, 3), r(-3, 3)};
    const double q = r(-2, 2);
    const auto T = km::gauge_transform(F, {}, th, q);
    CHECK(km::gauge_residual(T.f, k, T.a, q, m).amp_norm() < 1e-12 * F.amp_norm());
    CHECK(ga::dist(T.U * T.U.reverse(), ga::Multivector(1.0)) < 1e-12);
  }
}
