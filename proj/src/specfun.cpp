#include "dmorse/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace dmorse::specfun {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

namespace {

// Lanczos g = 7, 9-term coefficients (Godfrey); relative accuracy ~1e-14 on
// Re z >= 0.5.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_abs_gamma_lanczos(std::complex<double> z) {
  // valid for Re z >= 0.5
  std::complex<double> sum(kLanczos[0], 0.0);
  for (int k = 1; k < 9; ++k) sum += kLanczos[k] / (z - 1.0 + double(k));
  const std::complex<double> t = z + (kLanczosG - 0.5);
  const std::complex<double> lg =
      0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t + std::log(sum);
  return lg.real();
}

// ln |sin(pi z)|, stable for large |Im z|.
double log_abs_sin_pi(double x, double y) {
  const double ay = M_PI * std::abs(y);
  if (ay > 20.0) {
    // |sin pi z|^2 = (e^{2ay} / 4) * (1 - 2 cos(2 pi x) e^{-2ay} + e^{-4ay})
    return ay - std::log(2.0) +
           0.5 * std::log1p(std::exp(-4.0 * ay) -
                            2.0 * std::cos(2.0 * M_PI * x) * std::exp(-2.0 * ay));
  }
  const double s = std::sin(M_PI * x);
  const double sh = std::sinh(M_PI * y);
  return 0.5 * std::log(s * s + sh * sh);
}

}  // namespace

double log_abs_gamma_complex(double re, double im) {
  if (im == 0.0 && re <= 0.0 && re == std::floor(re))
    throw std::domain_error("log_abs_gamma_complex: pole of Gamma");
  if (re >= 0.5) return log_abs_gamma_lanczos({re, im});
  // |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1-z)|)
  return std::log(M_PI) - log_abs_sin_pi(re, im) -
         log_abs_gamma_lanczos({1.0 - re, -im});
}

namespace {
void check_laguerre_args(int n, double nu) {
  if (n < 0) throw std::domain_error("laguerre: requires n >= 0");
  if (!(nu > -1.0)) throw std::domain_error("laguerre: requires nu > -1");
}
}  // namespace

double laguerre(int n, double nu, double x) {
  check_laguerre_args(n, nu);
  if (n == 0) return 1.0;
  double lm = 1.0;            // L_0
  double lc = 1.0 + nu - x;   // L_1
  for (int k = 1; k < n; ++k) {
    const double ln = ((2.0 * k + nu + 1.0 - x) * lc - (k + nu) * lm) / (k + 1.0);
    lm = lc;
    lc = ln;
  }
  return lc;
}

Eigen::VectorXd laguerre_all(int n, double nu, double x) {
  check_laguerre_args(n, nu);
  Eigen::VectorXd out(n + 1);
  out[0] = 1.0;
  if (n >= 1) out[1] = 1.0 + nu - x;
  for (int k = 1; k < n; ++k)
    out[k + 1] = ((2.0 * k + nu + 1.0 - x) * out[k] - (k + nu) * out[k - 1]) / (k + 1.0);
  return out;
}

double laguerre_x_ddx(int n, double nu, double x) {
  check_laguerre_args(n, nu);
  if (n == 0) return 0.0;
  return n * laguerre(n, nu, x) - (n + nu) * laguerre(n - 1, nu, x);
}

QuadratureRule gauss_laguerre(int order, double nu) {
  if (order < 1) throw std::domain_error("gauss_laguerre: requires order >= 1");
  if (!(nu > -1.0)) throw std::domain_error("gauss_laguerre: requires nu > -1");

  Eigen::VectorXd diag(order), sub(std::max(order - 1, 0));
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + nu + 1.0;
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(k * (k + nu));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gauss_laguerre: tridiagonal eigen-solver failed");

  QuadratureRule rule;
  rule.order = order;
  rule.nu = nu;
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(order);
  const double mu0 = std::exp(std::lgamma(nu + 1.0));  // zeroth moment
  for (int i = 0; i < order; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

namespace {
// Both evaluation routes accumulate in extended precision: near the corner of
// the supported parameter range (y^2 ~ 25, small lambda+a, n ~ 30) the
// intermediate terms exceed the result by ~1e10, and plain double would lose
// six digits to cancellation in either route.
#if defined(__SIZEOF_FLOAT128__)
using wide_t = __float128;
#else
using wide_t = long double;
#endif
}  // namespace

Eigen::VectorXd cdh_recursion(const CDHArgs& args, int n_max) {
  if (n_max < 0) throw std::domain_error("cdh_recursion: requires n_max >= 0");
  const wide_t lam = args.lambda, a = args.a, b = args.b, y2 = args.y2;
  if (!(args.lambda > 0.0)) throw std::domain_error("cdh_recursion: requires lambda > 0");

  Eigen::VectorXd out(n_max + 1);
  out[0] = 1.0;
  if (n_max == 0) return out;

  // n = 0 instance of the recursion fixes S_1.
  const wide_t c0 = (lam + a) * (lam + b);
  if (c0 == wide_t(0))
    throw std::domain_error("cdh_recursion: degenerate recursion, (lambda+a)(lambda+b) = 0");
  wide_t prev = 1;
  wide_t cur = wide_t(1) - (lam * lam + y2) / c0;
  out[1] = double(cur);

  for (int n = 1; n < n_max; ++n) {
    const wide_t lead = (wide_t(n) + lam + a) * (wide_t(n) + lam + b);
    if (lead == wide_t(0))
      throw std::domain_error("cdh_recursion: degenerate recursion, leading coefficient vanished");
    const wide_t mid = lead + wide_t(n) * (wide_t(n) + a + b - 1) - lam * lam - y2;
    const wide_t next = (mid * cur - wide_t(n) * (wide_t(n) + a + b - 1) * prev) / lead;
    prev = cur;
    cur = next;
    out[n + 1] = double(cur);
  }
  return out;
}

double cdh_3f2(const CDHArgs& args, int n) {
  if (n < 0) throw std::domain_error("cdh_3f2: requires n >= 0");
  const wide_t lam = args.lambda, a = args.a, b = args.b, y2 = args.y2;

  wide_t sum = 1;
  wide_t term = 1;
  for (int k = 0; k < n; ++k) {
    const wide_t den = (lam + a + k) * (lam + b + k) * wide_t(k + 1);
    if (den == wide_t(0)) throw std::domain_error("cdh_3f2: zero denominator Pochhammer");
    // (-n)_{k+1} / (-n)_k = (k - n); conjugate pair contributes (lam+k)^2 + y2.
    term *= wide_t(k - n) * ((lam + wide_t(k)) * (lam + wide_t(k)) + y2) / den;
    sum += term;
  }
  return double(sum);
}

namespace detail {
double cdh_weight_unchecked(double lambda, double a, double b, double y) {
  if (y == 0.0) return 0.0;
  const double log_num = log_abs_gamma_complex(lambda, y) +
                         log_abs_gamma_complex(a, y) +
                         log_abs_gamma_complex(b, y);
  const double log_den = std::lgamma(lambda + a) + std::lgamma(lambda + b) +
                         log_abs_gamma_complex(0.0, 2.0 * y);
  return std::exp(2.0 * (log_num - log_den)) / (2.0 * M_PI);
}
}  // namespace detail

double cdh_weight(double lambda, double a, double b, double y) {
  if (!(lambda > 0.0 && a > 0.0 && b > 0.0))
    throw std::domain_error("cdh_weight: requires lambda, a, b > 0");
  if (y < 0.0) throw std::domain_error("cdh_weight: requires y >= 0");
  return detail::cdh_weight_unchecked(lambda, a, b, y);
}

double chebyshev_tail_residual(double lambda, double a, double b, double y,
                               int big_n, int window) {
  if (big_n < 2 || window < 1 || window + 2 > big_n)
    throw std::domain_error("chebyshev_tail_residual: need 1 <= window << N");

  // Upward recursion with periodic rescaling; only Q_{N-1} .. Q_{N+window+1}
  // are retained, all on a single common scale.
  const double y2 = y * y;
  const int last = big_n + window + 1;
  const int keep_from = big_n - 1;
  std::vector<double> kept;
  kept.reserve(window + 3);

  double prev = 1.0;
  double cur = 1.0 - (lambda * lambda + y2) / ((lambda + a) * (lambda + b));
  if (keep_from <= 0) kept.push_back(prev);
  if (keep_from <= 1) kept.push_back(cur);
  for (int n = 1; n < last; ++n) {
    const double lead = (n + lambda + a) * (n + lambda + b);
    if (lead == 0.0)
      throw std::domain_error("chebyshev_tail_residual: degenerate recursion");
    const double mid = lead + n * (n + a + b - 1.0) - lambda * lambda - y2;
    const double next = (mid * cur - n * (n + a + b - 1.0) * prev) / lead;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > 1e250) {
      prev /= mag;
      cur /= mag;
      for (double& v : kept) v /= mag;
    }
    if (n + 1 >= keep_from) kept.push_back(cur);
  }

  const double u = 1.0 - 0.5 * (y / big_n) * (y / big_n);
  double q_max = 0.0;
  for (double v : kept) q_max = std::max(q_max, std::abs(v));
  double res = 0.0;
  for (int k = 1; k + 1 < int(kept.size()); ++k)
    res = std::max(res, std::abs(2.0 * u * kept[k] - kept[k - 1] - kept[k + 1]));
  return res / q_max;
}

}  // namespace dmorse::specfun
