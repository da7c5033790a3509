#include "sta/spinor.hpp"
#include "test_util.hpp"

using namespace sta;
using spinor::CovariantSpinor;
using spinor::DictKind;
using test::Rng;

TEST_CASE("operator map round trips in both representations") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const Vec4 v = r.vec4();
    for (auto tag : {rep::Tag::standard, rep::Tag::weyl}) {
      const CovariantSpinor s{v, tag};
      const auto psi = spinor::to_operator(s);
      CHECK(psi.is_even(0.0));
      CHECK((spinor::to_covariant(psi).to(tag).v - v).norm() < 1e-14);
    }
    const ga::Multivector e = r.mv().even();
    CHECK(ga::dist(spinor::to_operator(spinor::to_covariant(e)), e) < 1e-14);
  }
}

TEST_CASE("dictionary lines commute with the matrix representation") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const ga::Multivector psi = r.mv().even();
    const Vec4 v = spinor::to_covariant(psi).to(rep::Tag::standard).v;
    for (auto k : {DictKind::gamma_mu, DictKind::mult_i, DictKind::i_gamma5, DictKind::conjugate}) {
      for (int mu = 0; mu < (k == DictKind::gamma_mu ? 4 : 1); ++mu) {
        CHECK(spinor::dictionary_residual(k, psi, mu) < 1e-12);
        const Vec4 lhs = spinor::to_covariant(spinor::dictionary_apply(k, psi, mu)).to(rep::Tag::standard).v;
        CHECK((lhs - spinor::dictionary_matrix(k, v, mu)).norm() < 1e-12);
      }
    }
    for (auto k : {DictKind::bar, DictKind::dagger}) CHECK(spinor::dictionary_residual(k, psi) < 1e-12);
    // gamma_mu line against the explicit matrix product
    for (int mu = 0; mu < 4; ++mu)
      CHECK((spinor::dictionary_matrix(DictKind::gamma_mu, v, mu) - rep::standard().lower(mu) * v).norm() < 1e-13);
    // i is represented by right multiplication with gamma_21
    CHECK((spinor::dictionary_matrix(DictKind::mult_i, v) - cplx(0, 1) * v).norm() < 1e-14);
  }
}

TEST_CASE("charge conjugation agrees on both sides and is an involution") {
  Rng r;
  for (int i = 0; i < 100; ++i) {
    const Vec4 v = r.vec4();
    const CovariantSpinor s{v, rep::Tag::standard};
    const Vec4 want = -rep::standard().up[2] * v.conjugate();
    CHECK((spinor::charge_conjugate(s).v - want).norm() < 1e-14);
    const auto psi = spinor::to_operator(s);
    const Vec4 via_op = spinor::to_covariant(spinor::charge_conjugate(psi)).to(rep::Tag::standard).v;
    CHECK((via_op - want).norm() < 1e-13);
    CHECK(ga::dist(spinor::charge_conjugate(spinor::charge_conjugate(psi)), psi) < 1e-13);
  }
}

TEST_CASE("parity operators") {
  Rng r;
  for (int i = 0; i < 50; ++i) {
    const ga::Multivector psi = r.mv().even();
    CHECK(ga::dist(spinor::parity_rest(spinor::parity_rest(psi)), psi) < 1e-14);
    const auto p = r.momentum(1.3);
    const Mat4 P = spinor::parity_matrix(p.E(), p.p[0], p.p[1], p.p[2], rep::standard());
    const Mat4 Pw = spinor::parity_matrix(p.E(), p.p[0], p.p[1], p.p[2], rep::weyl());
    const Mat4 S = rep::change_of_basis();
    CHECK(test::mat_err(S * P * S, Pw) < 1e-12);
    // the ideal projection is idempotent
    const auto q = spinor::ideal_projection(psi);
    CHECK(ga::dist(spinor::ideal_projection(q), q) < 1e-14);
  }
}
