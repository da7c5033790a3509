#include "sta/fields.hpp"
#include "util.hpp"

namespace sta::harness {

using ga::Multivector;
using spinor::CovariantSpinor;
using namespace util;

namespace {

// random superposition of u modes (negative frequency sign) and v modes (positive)
fields::PlaneWaveField random_dirac_solution(Context& c, double m) {
  fields::PlaneWaveField f;
  for (int k = 0; k < 3; ++k) {
    const auto p = random_momentum(c, m);
    const auto d = modes::dirac_modes(p, 1 + k % 2);
    f += fields::single(c.uniform(-1, 1) * d.u, p, -1);
    f += fields::single(c.uniform(-1, 1) * d.v, p, +1);
  }
  return f;
}

}  // namespace

void add_spinor_checks(std::vector<CheckDef>& out) {
  const std::string mod = "spinor_repr";

  out.push_back({"spinor.round_trip", mod, "spinor-map", 1e-14, Compare::at_most, 2, false, [](Context& c) {
                   double r = ga::dist(spinor::to_operator({Vec4(1, 0, 0, 0)}), Multivector(1.0));
                   r = std::max(r, ga::dist(spinor::to_operator({Vec4(cplx(0, 1), 0, 0, 0)}),
                                            ga::pseudoscalar() * ga::sigma(3)));
                   for (int s = 0; s < c.samples; ++s) {
                     const CovariantSpinor v{random_vec4(c)};
                     r = std::max(r, (spinor::to_covariant(spinor::to_operator(v)).v - v.v).norm());
                     const Multivector psi = random_even(c);
                     r = std::max(r, ga::dist(spinor::to_operator(spinor::to_covariant(psi)), psi));
                   }
                   return max_of(r);
                 }});

  const spinor::DictKind kinds[] = {spinor::DictKind::gamma_mu, spinor::DictKind::mult_i,
                                    spinor::DictKind::i_gamma5, spinor::DictKind::bar,
                                    spinor::DictKind::dagger,   spinor::DictKind::conjugate};
  for (auto k : kinds) {
    out.push_back({std::string("spinor.dictionary_") + spinor::name(k), mod, "spinor-dictionary", 1e-12,
                   Compare::at_most, 2, false, [k](Context& c) {
                     double r = 0;
                     for (int s = 0; s < c.samples; ++s) {
                       const Multivector psi = random_even(c);
                       const int mus = k == spinor::DictKind::gamma_mu ? 4 : 1;
                       for (int mu = 0; mu < mus; ++mu) r = std::max(r, spinor::dictionary_residual(k, psi, mu));
                     }
                     return max_of(r);
                   }});
  }

  out.push_back({"spinor.dictionary_examples", mod, "spinor-dictionary", 0, Compare::at_most, 0, false,
                 [](Context& c) {
                   // i acting on 1 is gamma_21 from the right; bar applied twice is the identity
                   double r = ga::dist(spinor::dictionary_apply(spinor::DictKind::mult_i, Multivector(1.0)),
                                       ga::gamma21());
                   const Multivector psi = random_even(c);
                   const auto bar = [](const Multivector& x) { return spinor::dictionary_apply(spinor::DictKind::bar, x); };
                   r = std::max(r, ga::dist(bar(bar(psi)), psi));
                   return max_of(r);
                 }});

  out.push_back({"spinor.charge_conjugation", mod, "charge-conjugation", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   // involutive on both sides, the two sides agree, and it commutes with the change of basis
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Multivector psi = random_even(c);
                     r = std::max(r, ga::dist(spinor::charge_conjugate(spinor::charge_conjugate(psi)), psi));
                     const CovariantSpinor v = spinor::to_covariant(psi);
                     r = std::max(r, (spinor::to_covariant(spinor::charge_conjugate(psi)).v -
                                      spinor::charge_conjugate(v).v).norm());
                     const CovariantSpinor w = v.to(rep::Tag::weyl);
                     r = std::max(r, (spinor::charge_conjugate(w).to(rep::Tag::standard).v -
                                      spinor::charge_conjugate(v).v).norm());
                   }
                   return max_of(r);
                 }});

  out.push_back({"spinor.parity_eigenmodes", mod, "parity-operator", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   const double m = 1.0;
                   const modes::OnShellMomentum rest(m, 0, 0, 0);
                   const Multivector psi0 = random_even(c);
                   double r = ga::dist(spinor::parity_momentum(rest.vec(), psi0), spinor::parity_rest(psi0));
                   for (int s = 0; s < c.samples; ++s) {
                     const auto p = random_momentum(c, m);
                     for (int rr = 1; rr <= 2; ++rr) {
                       const auto d = modes::dirac_modes(p, rr);
                       r = std::max(r, ga::dist(spinor::parity_momentum(p.vec(), d.u), d.u));
                       r = std::max(r, ga::dist(spinor::parity_momentum(p.vec(), d.v), -d.v));
                     }
                     const Multivector psi = random_even(c);
                     r = std::max(r, ga::dist(spinor::parity_momentum(p.vec(), spinor::parity_momentum(p.vec(), psi)), psi));
                     // representation independence of (1/m) p gamma
                     const auto q = p.contravariant();
                     const Mat4 S = rep::change_of_basis();
                     r = std::max(r, mat_err(S * spinor::parity_matrix(q[0], q[1], q[2], q[3], rep::standard()) * S,
                                             spinor::parity_matrix(q[0], q[1], q[2], q[3], rep::weyl())));
                   }
                   return max_of(r);
                 }});

  out.push_back({"spinor.ideal_spinors", mod, "ideal-spinors", 1e-12, Compare::at_most, 0, false, [](Context& c) {
                   const Multivector half = 0.5 * (Multivector(1.0) + Multivector::gen(0));
                   double r = ga::dist(spinor::ideal_projection(Multivector(1.0)), half);
                   for (int s = 0; s < c.samples; ++s) {
                     const Multivector psi = random_even(c);
                     const Multivector Psi = spinor::ideal_projection(psi);
                     r = std::max(r, ga::dist(spinor::ideal_projection(Psi), Psi));
                     // boosted rest parity L P0 L^-1 equals (1/m) p on ideal spinors
                     const auto p = random_momentum(c);
                     const Multivector L = modes::boost_clifford(p);
                     const Multivector boosted = L * spinor::parity_rest(L.reverse() * Psi);
                     r = std::max(r, ga::dist(boosted, spinor::parity_momentum(p.vec(), Psi)));
                     r = std::max(r, ga::dist(boosted, (1.0 / p.m) * p.vec() * Psi));
                   }
                   return max_of(r);
                 }});

  out.push_back({"spinor.dirac_hestenes_equivalence", mod, "dirac-hestenes", 1e-12, Compare::at_most, 2, false,
                 [](Context& c) {
                   // the two residuals correspond through the dictionary for arbitrary plane waves,
                   // and both vanish on u and v modes with their frequency signs
                   const double m = 1.0;
                   double r = 0;
                   for (int s = 0; s < std::max(1, c.samples / 5); ++s) {
                     fields::PlaneWaveField f;
                     for (int k = 0; k < 3; ++k)
                       f += fields::single(random_even(c), random_momentum(c, m), k % 2 ? 1 : -1);
                     const auto cov = fields::dirac_residual_covariant(fields::to_covariant(f), m);
                     const auto op = fields::dh_residual_as_covariant(fields::dh_residual(f, m));
                     r = std::max(r, fields::cov_distance(cov, op));
                     const auto sol = random_dirac_solution(c, m);
                     r = std::max(r, fields::dh_residual(sol, m).amp_norm());
                     for (const auto& md : fields::dirac_residual_covariant(fields::to_covariant(sol), m))
                       r = std::max(r, md.a.norm());
                   }
                   return max_of(r);
                 }});
}

}  // namespace sta::harness
