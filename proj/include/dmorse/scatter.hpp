#pragma once

#include <Eigen/Dense>

#include "dmorse/model.hpp"
#include "dmorse/specfun.hpp"
#include "dmorse/tridiag.hpp"

// Scattering-state (|eps| > 1) series solution: the kinetic-balanced basis
// parameters, the continuous dual Hahn arguments carried by the energy, the
// expansion coefficients f_n, the energy normalization, the truncated series
// wavefunction, its nonrelativistic-limit counterpart, and the asymptotic
// Chebyshev tail property of the coefficient recursion.

namespace dmorse::scatter {

//! mu = xi/omega, tau = (omega/2)/(C + eps). Throws at the eps = -C pole.
std::pair<double, double> balanced_params(const ModelParams& params, double epsilon);

//! Basis family satisfying kinetic balance exactly at this energy.
tridiag::BasisParams balanced_basis(const ModelParams& params, double epsilon, double alpha);

//! lambda = a = alpha, y^2 = (eps^2 - 1)/(lambda_c omega)^2, and the A-sign
//! branch of b(eps). Valid for any eps (y^2 < 0 is the bound-state
//! continuation).
specfun::CDHArgs cdh_args_of_energy(const ModelParams& params, double epsilon, double alpha);

//! The general-basis arguments (arbitrary mu, tau) that reduce to
//! cdh_args_of_energy under kinetic balance.
specfun::CDHArgs cdh_args_general(const ModelParams& params, const tridiag::BasisParams& bp,
                                  double epsilon);

//! f_n = sqrt(Gamma(n+2 alpha)/Gamma(n+1)) S_n^alpha(y^2; alpha, b) for
//! n = 0..n_terms-1; the Gamma ratio is taken in log space.
Eigen::VectorXd expansion_coefficients(const ModelParams& params, double epsilon,
                                       double alpha, int n_terms);

struct Normalization {
  double value = 0.0;
  //! Set when b <= 0 places the weight outside the positive-measure regime;
  //! the printed formula is still evaluated.
  bool weight_regime_warning = false;
};

//! N^alpha(eps) = sqrt(rho^alpha(y) dy/deps). Throws std::domain_error within
//! 1e-12 of the |eps| = 1 threshold, where dy/deps diverges.
Normalization normalization(const ModelParams& params, double epsilon, double alpha);

//! One built solution: coefficients, CDH arguments, and normalization.
struct ScatterSolution {
  double epsilon = 0.0;
  double alpha = 1.0;
  specfun::CDHArgs cdh;
  int n_terms = 0;
  Eigen::VectorXd coefficients;
  double normalization = 0.0;
  bool weight_regime_warning = false;
};

ScatterSolution solve(const ModelParams& params, double epsilon, double alpha, int n_terms);

//! Summation filter for evaluating the series. `none` is the plain truncated
//! sum. `cosine_taper` damps coefficient n by cos^2(pi n / 2 N); the series
//! converges only conditionally in the pointwise sense, and the taper is the
//! standard way to evaluate it on compacta.
enum class SumFilter { none, cosine_taper };

//! Unnormalized series value (both spinor components, rotated frame).
SpinorSample evaluate_series(const ModelParams& params, const ScatterSolution& sol,
                             double x, SumFilter filter = SumFilter::none);

//! Magnitude of the last retained term relative to the accumulated upper
//! component; a crude truncation indicator at the point x.
double tail_estimate(const ModelParams& params, const ScatterSolution& sol, double x);

//! N^alpha(eps) times the plain truncated series at x.
SpinorSample wavefunction(const ModelParams& params, double epsilon, double alpha,
                          int n_terms, double x);

//! Truncated series solution of the nonrelativistic problem obtained from the
//! parameter map at the rest-mass reference point: coefficients
//! S_n^alpha(2E/omega^2; alpha, -D/omega) against the upper basis components.
double nonrel_series(const ModelParams& params, double E, double alpha, int n_terms,
                     double x);

//! Residual of the asymptotic Chebyshev relation for the coefficient
//! recursion at this energy, u = 1 - (y/N)^2/2; see
//! specfun::chebyshev_tail_residual.
double chebyshev_tail(const ModelParams& params, double epsilon, double alpha,
                      int big_n, int window);

}  // namespace dmorse::scatter
