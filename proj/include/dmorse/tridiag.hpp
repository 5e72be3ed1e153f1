#pragma once

#include <Eigen/Dense>

#include "dmorse/model.hpp"

// The square-integrable spinor basis, the analytic tridiagonal matrix
// elements of the wave operator H - eps in that basis, the p/q recursion
// parameters, the three-term recursion coefficients for the expansion
// coefficients, and a quadrature route that evaluates <psi_n|H-eps|psi_m>
// by direct integration to certify tridiagonality.

namespace dmorse::tridiag {

//! Parameters of one basis family. beta is fixed to 1 and zeta to
//! sign(A)/2 by the tridiagonality constraints; zeta_offset exists solely as
//! a fault-injection hook for the negative-control tests.
struct BasisParams {
  double alpha = 1.0;  // > 0; nu = 2 alpha - 1
  double mu = 0.0;
  double tau = 0.0;
  ASign a_sign = ASign::positive;
  double zeta_offset = 0.0;

  BasisParams(double alpha_, double mu_, double tau_, ASign a_sign_);

  double beta() const { return 1.0; }
  double zeta() const {
    return (a_sign == ASign::positive ? 0.5 : -0.5) + zeta_offset;
  }
  double sign() const { return a_sign == ASign::positive ? 1.0 : -1.0; }
};

//! p(eps) = 4 tau^2 (C + eps - omega/tau), q = 2 tau (mu omega - xi).
struct RecursionParams {
  double p = 0.0;
  double q = 0.0;
};

//! Symmetric tridiagonal slice of H - eps: diag[n] = (H-eps)_{n,n},
//! offdiag[n] = (H-eps)_{n+1,n}.
struct TridiagonalOperator {
  int size = 0;
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;

  //! Component-wise image of the operator applied to a coefficient vector.
  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
};

//! Upper basis component sqrt(omega n! / Gamma(n+2a)) z^a e^{-z/2} L_n^{2a-1}(z).
double phi_basis(const ModelParams& params, const BasisParams& bp, int n, double z);

//! Lower basis component in its closed form (the printed bracket with
//! L_{n-1}^{2a} for A > 0 and L_n^{2a} for A < 0; L_{-1} = 0).
double theta_basis(const ModelParams& params, const BasisParams& bp, int n, double z);

//! Same function obtained by applying the differential relation
//! -2 lambda tau (mu + zeta z + z d/dz) to phi_n through the Laguerre
//! identities; independent evaluation route (honors zeta_offset).
double theta_basis_from_operator(const ModelParams& params, const BasisParams& bp,
                                 int n, double z);

RecursionParams pq(const ModelParams& params, const BasisParams& bp, double epsilon);

//! (H - eps)_{n,m} from the closed forms; exactly 0 for |n - m| >= 2.
double matrix_element_analytic(const ModelParams& params, const BasisParams& bp,
                               double epsilon, int n, int m);

//! (H - eps)_{n,m} assembled term by term from the five inner products of the
//! wave-operator expansion, each evaluated with a Gauss-Laguerre rule of
//! matching exponent. Exact for order >= n + m + 3.
double matrix_element_quadrature(const ModelParams& params, const BasisParams& bp,
                                 double epsilon, int n, int m, int order);

//! Coefficients of the three-term recursion diag*f_n = sub*f_{n-1} +
//! super*f_{n+1} satisfied by the expansion coefficients f_n.
struct RecursionCoeffs {
  double diag = 0.0;
  double sub = 0.0;
  double super = 0.0;
};

//! Recursion acting on the unnormalized coefficients f_n.
RecursionCoeffs recursion_coefficients(const ModelParams& params, const BasisParams& bp,
                                       double epsilon, int n);
//! Same rows rewritten for Q_n = sqrt(n! / Gamma(n+2a)) f_n.
RecursionCoeffs recursion_coefficients_q(const ModelParams& params, const BasisParams& bp,
                                         double epsilon, int n);

//! First `size` analytic rows of H - eps.
TridiagonalOperator operator_rows(const ModelParams& params, const BasisParams& bp,
                                  double epsilon, int size);

}  // namespace dmorse::tridiag
