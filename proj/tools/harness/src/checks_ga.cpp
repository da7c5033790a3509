#include <Eigen/SVD>

#include "util.hpp"

namespace sta::harness {

using ga::Multivector;
using namespace util;

void add_ga_checks(std::vector<CheckDef>& out) {
  const std::string mod = "ga_core";

  out.push_back({"ga.generator_anticommutation", mod, "generator-relations", 0, Compare::at_most, 1, false,
                 [](Context&) {
                   double r = 0;
                   for (int mu = 0; mu < 4; ++mu)
                     for (int nu = 0; nu < 4; ++nu) {
                       const Multivector a = Multivector::gen_up(mu), b = Multivector::gen_up(nu);
                       const Multivector expect(mu == nu ? 2 * eta(mu) : 0.0);
                       r = std::max(r, ga::dist(a * b + b * a, expect));
                     }
                   return max_of(r);
                 }});

  out.push_back({"ga.pauli_relations", mod, "pauli-subalgebra", 0, Compare::at_most, 1, false, [](Context&) {
                   // sigma_i sigma_j = delta_ij + eps_ijk i sigma_k, i squares to -1 and commutes with the sigmas
                   const Multivector I = ga::pseudoscalar();
                   double r = ga::dist(I * I, Multivector(-1.0));
                   for (int i = 1; i <= 3; ++i) {
                     r = std::max(r, ga::dist(I * ga::sigma(i), ga::sigma(i) * I));
                     for (int j = 1; j <= 3; ++j) {
                       Multivector expect(i == j ? 1.0 : 0.0);
                       for (int k = 1; k <= 3; ++k) {
                         const int e = (i - j) * (j - k) * (k - i) / 2;  // Levi-Civita on 1..3
                         if (e) expect += double(e) * (I * ga::sigma(k));
                       }
                       r = std::max(r, ga::dist(ga::sigma(i) * ga::sigma(j), expect));
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"ga.contraction_plus_exterior", mod, "contraction-exterior", 1e-12, Compare::at_most, 1, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Multivector u = random_vector(c);
                     for (unsigned b = 0; b < 16; ++b) {
                       const Multivector B = Multivector::blade(b);
                       const Multivector lc = ga::left_contraction(u, B), ex = ga::exterior_product(u, B);
                       r = std::max(r, ga::dist(u * B, lc + ex));
                       const int g = ga::grade_of(b);
                       if (g > 0) r = std::max(r, ga::dist(lc, lc.grade(g - 1)));
                       r = std::max(r, ga::dist(ex, g < 4 ? ex.grade(g + 1) : Multivector()));
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"ga.reverse_antiautomorphism", mod, "reverse", 1e-12, Compare::at_most, 1, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Multivector a = random_mv(c), b = random_mv(c);
                     r = std::max(r, ga::dist((a * b).reverse(), b.reverse() * a.reverse()));
                     r = std::max(r, ga::dist(a.reverse().reverse(), a));
                   }
                   return max_of(r);
                 }});

  out.push_back({"ga.scalar_product_identity", mod, "scalar-product", 1e-12, Compare::at_most, 1, false,
                 [](Context& c) {
                   double r = 0;
                   for (int s = 0; s < c.samples; ++s) {
                     const Multivector K = random_mv(c), L = random_mv(c), M = random_mv(c);
                     r = std::max(r, std::abs(ga::scalar_product(K * L, M) - ga::scalar_product(K, M * L.reverse())));
                     r = std::max(r, std::abs(ga::scalar_product(K, L) - ga::scalar_product(L, K)));
                   }
                   return max_of(r);
                 }});

  out.push_back({"ga.gamma_matrix_relations", mod, "gamma-matrices", 1e-12, Compare::at_most, 0, false,
                 [](Context&) {
                   double r = 0;
                   for (const auto* g : {&rep::standard(), &rep::weyl()})
                     for (int mu = 0; mu < 4; ++mu)
                       for (int nu = 0; nu < 4; ++nu) {
                         const Mat4 ac = g->up[mu] * g->up[nu] + g->up[nu] * g->up[mu];
                         const Mat4 expect = (mu == nu ? 2 * eta(mu) : 0.0) * Mat4::Identity();
                         r = std::max(r, mat_err(ac, expect));
                       }
                   const Mat4 S = rep::change_of_basis();
                   r = std::max(r, mat_err(S * S, Mat4::Identity()));
                   for (int mu = 0; mu < 4; ++mu)
                     r = std::max(r, mat_err(rep::weyl().up[mu], S * rep::standard().up[mu] * S));
                   return max_of(r);
                 }});

  out.push_back({"ga.matrix_homomorphism", mod, "matrix-representation", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = mat_err(rep::matrix_rep(Multivector(1.0)), Mat4::Identity());
                   for (const auto* g : {&rep::standard(), &rep::weyl()}) {
                     const Mat4 g5 = g->up[0] * g->up[1] * g->up[2] * g->up[3];
                     r = std::max(r, mat_err(g->g5, g5));
                     for (int s = 0; s < c.samples; ++s) {
                       const Multivector a = random_mv(c), b = random_mv(c);
                       r = std::max(r, mat_err(rep::matrix_rep(a * b, *g), rep::matrix_rep(a, *g) * rep::matrix_rep(b, *g)));
                     }
                   }
                   return max_of(r);
                 }});

  out.push_back({"ga.matrix_rep_injective", mod, "matrix-representation", 1e-6, Compare::at_least, 0, false,
                 [](Context&) {
                   // smallest singular value of the 16 blade images as vectors in C^16
                   Eigen::MatrixXcd G(16, 16);
                   for (unsigned b = 0; b < 16; ++b) {
                     const Mat4 m = rep::matrix_rep(Multivector::blade(b));
                     for (int k = 0; k < 16; ++k) G(k, b) = m(k / 4, k % 4);
                   }
                   Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
                   return max_of(svd.singularValues().minCoeff());
                 }});

  out.push_back({"ga.exponential_closed_form", mod, "exponential", 1e-12, Compare::at_most, 0, false,
                 [](Context& c) {
                   double r = ga::dist(ga::exp_bivector_like(Multivector()), Multivector(1.0));
                   const double th = 0.7;
                   r = std::max(r, ga::dist(ga::exp_bivector_like(th * ga::gamma21()),
                                            Multivector(std::cos(th)) + std::sin(th) * ga::gamma21()));
                   for (int s = 0; s < c.samples; ++s) {
                     // simple blades of every signature: timelike and spacelike bivectors, pseudoscalar
                     const unsigned masks[] = {ga::E12, ga::E01, ga::E0123, ga::E23, ga::E03};
                     const Multivector x = ga::Multivector::blade(masks[s % 5], c.uniform(-3.14159, 3.14159));
                     r = std::max(r, ga::dist(ga::exp_bivector_like(x), ga::exp_series(x, 40)));
                   }
                   return max_of(r);
                 }});
}

}  // namespace sta::harness
