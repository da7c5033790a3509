#pragma once

#include "sta/ga.hpp"

namespace sta::spinor {

using ga::Multivector;

// Column spinor in C^4 tagged with the gamma-matrix convention it lives in.
struct CovariantSpinor {
  Vec4 v = Vec4::Zero();
  rep::Tag tag = rep::Tag::standard;

  CovariantSpinor to(rep::Tag t) const;
  const rep::GammaRep& gammas() const { return rep::get(tag); }
};

// Even multivector psi = (m0 + m^k i sigma_k) + (n0 + n^k i sigma_k) sigma_3.
using OperatorSpinor = Multivector;

OperatorSpinor to_operator(const CovariantSpinor& s);
CovariantSpinor to_covariant(const OperatorSpinor& psi);

// Row readout e1^T rho(psi); used for the bar and dagger lines, which are
// row spinors on the matrix side.
Eigen::RowVector4cd row_readout(const OperatorSpinor& psi);

enum class DictKind { gamma_mu, mult_i, i_gamma5, bar, dagger, conjugate };

const char* name(DictKind k);

// Clifford side of the dictionary. mu is used only for gamma_mu.
OperatorSpinor dictionary_apply(DictKind k, const OperatorSpinor& psi, int mu = 0);

// Matrix side for the column lines (gamma_mu, mult_i, i_gamma5, conjugate).
Vec4 dictionary_matrix(DictKind k, const Vec4& v, int mu = 0);
// Matrix side for bar and dagger.
Eigen::RowVector4cd dictionary_matrix_row(DictKind k, const Vec4& v);

// max deviation between the two sides of one dictionary line
double dictionary_residual(DictKind k, const OperatorSpinor& psi, int mu = 0);

// Charge conjugation. Clifford side psi gamma_2 gamma_0, matrix side -gamma^2 psi^*.
OperatorSpinor charge_conjugate(const OperatorSpinor& psi);
CovariantSpinor charge_conjugate(const CovariantSpinor& s);

// gamma_0 psi gamma_0
OperatorSpinor parity_rest(const OperatorSpinor& psi);
// (1/m) p psi gamma_0 with p = p^mu gamma_mu; m is read off p
OperatorSpinor parity_momentum(const Multivector& p, const OperatorSpinor& psi);
Mat4 parity_matrix(double E, double px, double py, double pz, const rep::GammaRep& r);

// psi (1 + gamma_0)/2
Multivector ideal_projection(const Multivector& psi);

}  // namespace sta::spinor
