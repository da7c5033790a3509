#include "sta/fields.hpp"
#include "test_util.hpp"

using namespace sta;
using fields::PlaneWaveField;
using ga::Multivector;
using test::Rng;

namespace {

PlaneWaveField random_field(Rng& r, int n) {
  PlaneWaveField f;
  for (int k = 0; k < n; ++k) {
    fields::Mode md;
    md.A = r.mv().even();
    md.p = {r(-2, 2), r(-2, 2), r(-2, 2), r(-2, 2)};
    md.eps = k % 2 ? 1 : -1;
    f.modes.push_back(md);
  }
  return f;
}

}  // namespace

TEST_CASE("Dirac operator: closed form against finite differences") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const PlaneWaveField f = random_field(r, 3);
    const auto x = r.point();
    const Multivector cf = fields::apply_dirac_operator(f)(x);
    CHECK(ga::dist(fields::dirac_fd(f, x), cf) < 1e-7 * std::max(1.0, cf.norm()));
    // the square of the Dirac operator is the d'Alembertian
    CHECK((fields::apply_dirac_operator(fields::apply_dirac_operator(f)) - fields::box(f)).amp_norm() < 1e-12);
  }
}

TEST_CASE("Dirac-Hestenes residual of u modes and its dictionary image") {
  Rng r;
  for (int i = 0; i < 50; ++i) {
    const double m = r(0.5, 2);
    const auto p = r.momentum(m);
    const auto d = modes::dirac_modes(p, 1 + i % 2);
    const PlaneWaveField u = fields::single(d.u, p, -1);
    CHECK(fields::dh_residual(u, m).amp_norm() < 1e-12);
    // residuals agree with i g.d psi - m psi on the covariant side for arbitrary fields
    const PlaneWaveField f = random_field(r, 2);
    const auto cov = fields::cov_merged(fields::dirac_residual_covariant(fields::to_covariant(f), m));
    const auto op = fields::cov_merged(fields::dh_residual_as_covariant(fields::dh_residual(f, m)));
    CHECK(fields::cov_distance(cov, op) < 1e-12);
  }
}

TEST_CASE("composition identity for coupled first-order lines") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const PlaneWaveField X = random_field(r, 2), Y = random_field(r, 2);
    for (int sx : {-1, 1})
      for (int sy : {-1, 1}) {
        const auto [lhs, rhs] = fields::first_order_composition(X, Y, sx, sy, 1.3);
        CHECK((lhs - rhs).amp_norm() < 1e-12);
      }
  }
}

TEST_CASE("octet fields are on shell and the witness separates KG from the first-order system") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const auto p = r.momentum(1.0);
    const auto o = fields::build_octet(p);
    CHECK(o.f.size() == 8);
    for (const auto& [k, f] : o.f) CHECK(fields::kg_residual(f, o.m).amp_norm() < 1e-12 * std::max(1.0, f.amp_norm()));
    const auto w = fields::kg_not_first_order_witness(p);
    double worst = 0, scale = 0;
    for (const auto& [k, f] : w.f) {
      CHECK(fields::kg_residual(f, w.m).amp_norm() < 1e-12 * std::max(1.0, f.amp_norm()));
      scale = std::max(scale, f.amp_norm());
    }
    for (const auto& res : fields::first_order_residual(w)) worst = std::max(worst, res.amp_norm());
    CHECK(worst > 0.1 * w.m * scale);
  }
}

TEST_CASE("bilinear covariants obey the Fierz identities") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const Multivector psi = r.mv().even();
    const auto b = fields::bilinears(psi);
    const double J2 = (b.J * b.J).scalar(), K2 = (b.K * b.K).scalar();
    const double n4 = std::pow(psi.norm(), 4);
    CHECK(std::abs(J2 - (b.sigma * b.sigma + b.omega * b.omega)) < 1e-12 * n4);
    CHECK(std::abs(K2 + J2) < 1e-12 * n4);
    CHECK(std::abs((b.J * b.K).scalar()) < 1e-12 * n4);
    CHECK(fields::classify(psi).cls >= 1);
  }
}

TEST_CASE("Elko bilinears fall in class 5 with a null current") {
  Rng r;
  for (int i = 0; i < 30; ++i) {
    const auto e = modes::elko_construct(r.momentum(1.0), modes::ElkoType::lambda_s, modes::Label::minus_plus);
    const Multivector psi = e.op();
    const double n2 = psi.norm() * psi.norm();
    const auto b = fields::bilinears(psi);
    CHECK(std::abs(b.sigma) < 1e-12 * n2);
    CHECK(std::abs(b.omega) < 1e-12 * n2);
    CHECK(fields::classify(psi).cls == 5);
    const auto ll = fields::lightlike_check(b, n2);
    CHECK(ll.J_null);
    CHECK(ll.J_nonzero);
  }
}
