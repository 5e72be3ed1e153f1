#pragma once

#include <Eigen/Dense>

// Special-function kernel: log-gamma (real and complex modulus), generalized
// Laguerre polynomials, generalized Gauss-Laguerre quadrature, and the
// continuous dual Hahn polynomial family with its orthogonality weight.
// All routines are pure functions of their arguments.

namespace dmorse::specfun {

//! ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

//! ln |Gamma(re + i*im)|, any point except the poles on the real axis.
//! Lanczos approximation on Re z >= 0.5, reflection formula elsewhere.
double log_abs_gamma_complex(double re, double im);

//! Generalized Laguerre polynomial L_n^nu(x) by upward three-term recursion.
//! Requires nu > -1; L_{-1} is taken to be identically zero.
double laguerre(int n, double nu, double x);

//! All of L_0^nu(x) .. L_n^nu(x) in one upward sweep.
Eigen::VectorXd laguerre_all(int n, double nu, double x);

//! x * d/dx L_n^nu(x) = n L_n^nu(x) - (n+nu) L_{n-1}^nu(x).
double laguerre_x_ddx(int n, double nu, double x);

//! Nodes and weights of the rule integrating f against x^nu e^{-x} dx on
//! (0, inf), exact for polynomials of degree <= 2*order - 1.
struct QuadratureRule {
  int order = 0;
  double nu = 0.0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  //! Sum of w_i * f(x_i).
  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < order; ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

//! Generalized Gauss-Laguerre rule via eigen-decomposition of the symmetric
//! Jacobi matrix of the three-term recursion (Golub-Welsch).
QuadratureRule gauss_laguerre(int order, double nu);

//! Arguments (lambda; a, b | y^2) of a continuous dual Hahn evaluation.
//! y2 < 0 is the bound-state analytic continuation; all arithmetic stays real.
struct CDHArgs {
  double lambda = 1.0;
  double a = 0.0;
  double b = 0.0;
  double y2 = 0.0;
};

//! S_0 .. S_{n_max} of the continuous dual Hahn family by upward recursion.
//! Throws if a leading recursion coefficient (n+lambda+a)(n+lambda+b) vanishes.
Eigen::VectorXd cdh_recursion(const CDHArgs& args, int n_max);

//! S_n as the terminating 3F2 sum at unit argument. The conjugate Pochhammer
//! pair (lambda+iy)_k (lambda-iy)_k is accumulated as the real product of
//! (lambda+j)^2 + y^2, which stays valid for y2 < 0.
double cdh_3f2(const CDHArgs& args, int n);

//! Orthogonality weight rho^lambda(y) for lambda, a, b > 0 and y >= 0.
//! Returns 0 at y = 0 (the |Gamma(2iy)| pole in the denominator).
double cdh_weight(double lambda, double a, double b, double y);

namespace detail {
//! Weight formula without the positive-parameter validation; used where the
//! parameters leave the positive-measure regime but the expression is still
//! finite (scattering normalization with b < 0).
double cdh_weight_unchecked(double lambda, double a, double b, double y);
}  // namespace detail

//! Residual of the asymptotic Chebyshev relation 2u Q_{N+k} = Q_{N+k-1} +
//! Q_{N+k+1}, u = 1 - (y/N)^2 / 2, maximized over k in [1, window] and
//! normalized by the largest |Q| in the window. The recursion is rescaled
//! internally, so overflow of the raw sequence is harmless.
double chebyshev_tail_residual(double lambda, double a, double b, double y,
                               int big_n, int window);

}  // namespace dmorse::specfun
