#include "dmorse/scatter.hpp"

#include <cmath>
#include <stdexcept>

namespace dmorse::scatter {

std::pair<double, double> balanced_params(const ModelParams& params, double epsilon) {
  const double c = params.C();
  if (std::abs(c + epsilon) < 1e-14)
    throw std::domain_error("balanced_params: pole at epsilon = -C");
  return {params.xi() / params.omega(), 0.5 * params.omega() / (c + epsilon)};
}

tridiag::BasisParams balanced_basis(const ModelParams& params, double epsilon, double alpha) {
  const auto [mu, tau] = balanced_params(params, epsilon);
  return tridiag::BasisParams(alpha, mu, tau, params.a_sign());
}

specfun::CDHArgs cdh_args_of_energy(const ModelParams& params, double epsilon, double alpha) {
  const double lw = params.lambda_c() * params.omega();
  const double r = params.xi() / (params.C() * params.omega());
  specfun::CDHArgs args;
  args.lambda = alpha;
  args.a = alpha;
  args.b = params.A() > 0 ? -r * epsilon : 1.0 + r * epsilon;
  args.y2 = (epsilon * epsilon - 1.0) / (lw * lw);
  return args;
}

specfun::CDHArgs cdh_args_general(const ModelParams& params, const tridiag::BasisParams& bp,
                                  double epsilon) {
  const auto r = tridiag::pq(params, bp, epsilon);
  if (r.p == 0.0) throw std::domain_error("cdh_args_general: singular representation, p = 0");
  const double lam = params.lambda_c(), om = params.omega(), xi = params.xi(),
               c = params.C();
  const double g = (r.q + om * xi / c) / r.p;
  specfun::CDHArgs args;
  args.lambda = bp.alpha;
  args.a = bp.alpha;
  args.b = params.A() > 0 ? bp.mu + g : 1.0 - bp.mu - g;
  // The mu(mu + 2q/p) subtraction holds for both signs of A, matching the
  // closed-form matrix elements.
  args.y2 = (c - epsilon) / (lam * lam * r.p) - bp.mu * (bp.mu + 2.0 * r.q / r.p);
  return args;
}

Eigen::VectorXd expansion_coefficients(const ModelParams& params, double epsilon,
                                       double alpha, int n_terms) {
  if (n_terms < 1) throw std::domain_error("expansion_coefficients: requires n_terms >= 1");
  const auto args = cdh_args_of_energy(params, epsilon, alpha);
  const Eigen::VectorXd s = specfun::cdh_recursion(args, n_terms - 1);
  Eigen::VectorXd f(n_terms);
  for (int n = 0; n < n_terms; ++n)
    f[n] = std::exp(0.5 * (std::lgamma(n + 2.0 * alpha) - std::lgamma(n + 1.0))) * s[n];
  return f;
}

Normalization normalization(const ModelParams& params, double epsilon, double alpha) {
  if (std::abs(epsilon) - 1.0 < 1e-12)
    throw std::domain_error("normalization: diverges at the |epsilon| = 1 threshold");
  const auto args = cdh_args_of_energy(params, epsilon, alpha);
  const double y = std::sqrt(args.y2);
  const double lw = params.lambda_c() * params.omega();
  const double dy_deps = std::abs(epsilon) / (lw * std::sqrt(epsilon * epsilon - 1.0));
  Normalization out;
  out.weight_regime_warning = args.b <= 0.0;
  const double rho = specfun::detail::cdh_weight_unchecked(args.lambda, args.a, args.b, y);
  out.value = std::sqrt(rho * dy_deps);
  return out;
}

ScatterSolution solve(const ModelParams& params, double epsilon, double alpha, int n_terms) {
  if (!(std::abs(epsilon) > 1.0))
    throw std::domain_error("scatter::solve: requires |epsilon| > 1");
  ScatterSolution sol;
  sol.epsilon = epsilon;
  sol.alpha = alpha;
  sol.cdh = cdh_args_of_energy(params, epsilon, alpha);
  sol.n_terms = n_terms;
  sol.coefficients = expansion_coefficients(params, epsilon, alpha, n_terms);
  const auto norm = normalization(params, epsilon, alpha);
  sol.normalization = norm.value;
  sol.weight_regime_warning = norm.weight_regime_warning;
  return sol;
}

SpinorSample evaluate_series(const ModelParams& params, const ScatterSolution& sol,
                             double x, SumFilter filter) {
  const auto bp = balanced_basis(params, sol.epsilon, sol.alpha);
  const double z = z_of_x(params, x);
  SpinorSample acc;
  acc.frame = Frame::rotated;
  for (int n = 0; n < sol.n_terms; ++n) {
    double w = 1.0;
    if (filter == SumFilter::cosine_taper) {
      const double t = std::cos(0.5 * M_PI * n / sol.n_terms);
      w = t * t;
    }
    const double fn = w * sol.coefficients[n];
    acc.upper += fn * tridiag::phi_basis(params, bp, n, z);
    acc.lower += fn * tridiag::theta_basis(params, bp, n, z);
  }
  return acc;
}

double tail_estimate(const ModelParams& params, const ScatterSolution& sol, double x) {
  const auto bp = balanced_basis(params, sol.epsilon, sol.alpha);
  const double z = z_of_x(params, x);
  const int n = sol.n_terms - 1;
  const double last = sol.coefficients[n] * tridiag::phi_basis(params, bp, n, z);
  const double total = evaluate_series(params, sol, x).upper;
  return std::abs(last) / std::max(std::abs(total), 1e-300);
}

SpinorSample wavefunction(const ModelParams& params, double epsilon, double alpha,
                          int n_terms, double x) {
  const auto sol = solve(params, epsilon, alpha, n_terms);
  SpinorSample s = evaluate_series(params, sol, x);
  s.upper *= sol.normalization;
  s.lower *= sol.normalization;
  return s;
}

double nonrel_series(const ModelParams& params, double E, double alpha, int n_terms,
                     double x) {
  if (!(E > 0.0)) throw std::domain_error("nonrel_series: requires E > 0");
  if (n_terms < 1) throw std::domain_error("nonrel_series: requires n_terms >= 1");
  const NonRelMap map = nonrel_map(params, 1.0);  // rest-mass reference point
  const double om = params.omega();
  specfun::CDHArgs args;
  args.lambda = alpha;
  args.a = alpha;
  args.b = -map.D / om;
  args.y2 = 2.0 * E / (om * om);
  const Eigen::VectorXd s = specfun::cdh_recursion(args, n_terms - 1);

  const double z = z_of_x(params, x);
  const double env = std::pow(z, alpha) * std::exp(-0.5 * z) * std::sqrt(om);
  const Eigen::VectorXd lag = specfun::laguerre_all(n_terms - 1, 2.0 * alpha - 1.0, z);
  // sqrt(Gamma(n+2a)/n!) from the coefficient cancels the basis norm exactly.
  double acc = 0.0;
  for (int n = 0; n < n_terms; ++n) acc += s[n] * lag[n];
  return env * acc;
}

double chebyshev_tail(const ModelParams& params, double epsilon, double alpha,
                      int big_n, int window) {
  const auto args = cdh_args_of_energy(params, epsilon, alpha);
  if (!(args.y2 > 0.0))
    throw std::domain_error("chebyshev_tail: requires |epsilon| > 1");
  return specfun::chebyshev_tail_residual(args.lambda, args.a, args.b,
                                          std::sqrt(args.y2), big_n, window);
}

}  // namespace dmorse::scatter
