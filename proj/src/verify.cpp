#include "dmorse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dmorse/bound.hpp"
#include "dmorse/oracle.hpp"
#include "dmorse/scatter.hpp"
#include "dmorse/specfun.hpp"
#include "dmorse/tridiag.hpp"

namespace dmorse::verify {

namespace {

using specfun::CDHArgs;

struct Recorder {
  std::vector<CheckResult>& out;
  std::string suite;

  void add(const std::string& name, double measured, double tolerance) {
    out.push_back({suite, name, measured <= tolerance, measured, tolerance});
  }
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// recursion; used for the y-integrals of the weight-function checks.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

void laguerre_suite(Recorder& rec) {
  // three-term family identities on a grid
  double worst_a4 = 0.0, worst_a5 = 0.0, worst_a2 = 0.0;
  for (double nu : {-0.5, 0.0, 0.5, 2.3}) {
    for (int n = 0; n <= 15; ++n) {
      for (double x : {0.1, 0.7, 2.0, 5.5, 13.0, 27.0, 50.0}) {
        const double ln = specfun::laguerre(n, nu, x);
        const double lnm = n >= 1 ? specfun::laguerre(n - 1, nu, x) : 0.0;
        // x L_n^nu = (n+nu) L_n^{nu-1} - (n+1) L_{n+1}^{nu-1}
        if (nu - 1.0 > -1.0) {
          const double lhs = x * ln;
          const double rhs = (n + nu) * specfun::laguerre(n, nu - 1.0, x) -
                             (n + 1.0) * specfun::laguerre(n + 1, nu - 1.0, x);
          worst_a4 = std::max(worst_a4,
                              std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        // L_n^nu = L_n^{nu+1} - L_{n-1}^{nu+1}
        const double rhs5 = specfun::laguerre(n, nu + 1.0, x) -
                            (n >= 1 ? specfun::laguerre(n - 1, nu + 1.0, x) : 0.0);
        worst_a5 = std::max(worst_a5,
                            std::abs(ln - rhs5) / std::max(1.0, std::abs(ln)));
        // terminating 1F1 sum against the scaled polynomial; extended
        // precision keeps the alternating sum meaningful at the larger x
        long double term = 1.0L, sum = 1.0L;
        for (int k = 0; k < n; ++k) {
          term *= (k - n) * (long double)(x) / ((nu + 1.0L + k) * (k + 1.0L));
          sum += term;
        }
        const double scaled = ln * std::exp(std::lgamma(n + 1.0) + std::lgamma(nu + 1.0) -
                                            std::lgamma(n + nu + 1.0));
        worst_a2 = std::max(worst_a2, std::abs(scaled - double(sum)) /
                                          std::max(1.0, std::abs(double(sum))));
        (void)lnm;
      }
    }
  }
  rec.add("recurrence x L_n^nu in the nu-1 family", worst_a4, 1e-11);
  rec.add("recurrence L_n^nu as nu+1 difference", worst_a5, 1e-11);
  rec.add("terminating 1F1 representation", worst_a2, 1e-11);

  // differential equation, finite-difference limited
  double worst_a1 = 0.0;
  for (double nu : {0.0, 0.5, 2.3}) {
    for (int n : {1, 4, 9}) {
      for (double x : {0.5, 2.0, 8.0, 20.0}) {
        const double hh = 1e-4 * std::max(1.0, x);
        const auto f = [&](double t) { return specfun::laguerre(n, nu, t); };
        const double d1 = (f(x - 2 * hh) - 8 * f(x - hh) + 8 * f(x + hh) - f(x + 2 * hh)) /
                          (12 * hh);
        const double d2 = (-f(x - 2 * hh) + 16 * f(x - hh) - 30 * f(x) +
                           16 * f(x + hh) - f(x + 2 * hh)) /
                          (12 * hh * hh);
        const double res = x * d2 + (nu + 1.0 - x) * d1 + n * f(x);
        const double scale = std::max({std::abs(x * d2), std::abs(n * f(x)), 1.0});
        worst_a1 = std::max(worst_a1, std::abs(res) / scale);
      }
    }
  }
  rec.add("differential equation (finite differences)", worst_a1, 1e-6);

  // orthogonality through the quadrature rule
  double worst_orth = 0.0;
  for (double nu : {-0.5, 0.0, 0.5, 2.3}) {
    const auto rule = specfun::gauss_laguerre(14, nu);
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m <= 12; ++m) {
        const double val = rule.integrate([&](double x) {
          return specfun::laguerre(n, nu, x) * specfun::laguerre(m, nu, x);
        });
        const double expect =
            n == m ? std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0)) : 0.0;
        const double scale = std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0));
        worst_orth = std::max(worst_orth, std::abs(val - expect) / scale);
      }
    }
  }
  rec.add("orthogonality via Gauss-Laguerre", worst_orth, 1e-10);

  // rule invariants: increasing positive nodes, zeroth moment, monomial
  // moments. The full-degree moment test runs at moderate order; for large
  // rules the extreme-node weights are O(eps) absolutely and the top moments
  // are dominated by them, so only the zeroth moment is a fair check there.
  double worst_rule = 0.0, worst_mu0 = 0.0;
  for (double nu : {-0.5, 0.0, 0.7, 2.3}) {
    for (int order : {1, 2, 5, 8, 20, 40}) {
      const auto rule = specfun::gauss_laguerre(order, nu);
      for (int i = 0; i < order; ++i) {
        if (!(rule.nodes[i] > 0.0) || (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])))
          worst_rule = 1.0;
      }
      const double mu0 = rule.weights.sum();
      worst_mu0 = std::max(worst_mu0, std::abs(mu0 - std::exp(std::lgamma(nu + 1.0))) /
                                          std::exp(std::lgamma(nu + 1.0)));
      if (order > 8) continue;
      for (int k = 0; k <= 2 * order - 1; ++k) {
        const double mom = rule.integrate([&](double x) { return std::pow(x, k); });
        const double expect = std::exp(std::lgamma(nu + k + 1.0));
        worst_rule = std::max(worst_rule, std::abs(mom - expect) / expect);
      }
    }
  }
  rec.add("quadrature moments", worst_rule, 1e-12);
  rec.add("quadrature zeroth moment", worst_mu0, 1e-12);
}

void cdh_suite(Recorder& rec) {
  double worst_dual = 0.0;
  for (double lam : {0.5, 1.0, 2.5, 4.0}) {
    for (double a : {0.5, 1.0, 3.0}) {
      for (double b : {0.7, 2.0, 4.0}) {
        for (double y2 : {-4.0, -1.0, 0.25, 4.0, 25.0}) {
          const CDHArgs args{lam, a, b, y2};
          const Eigen::VectorXd s = specfun::cdh_recursion(args, 30);
          for (int n = 0; n <= 30; ++n) {
            const double ref = specfun::cdh_3f2(args, n);
            worst_dual = std::max(worst_dual, std::abs(s[n] - ref) /
                                                  std::max(1.0, std::abs(ref)));
          }
        }
      }
    }
  }
  rec.add("recursion vs terminating 3F2", worst_dual, 1e-10);

  // orthogonality against the printed weight, positive-measure regime only
  const double lam = 1.0, a = 1.0, b = 2.0;
  double rho_max = 0.0, cutoff = 1.0;
  for (double y = 0.05; y < 80.0; y += 0.25) {
    const double r = specfun::cdh_weight(lam, a, b, y);
    rho_max = std::max(rho_max, r);
    // keep integrating until even y^16-weighted contributions are negligible
    if (r * std::pow(std::max(y, 1.0), 16) > 1e-20 * std::max(rho_max, 1e-300))
      cutoff = y + 0.5;
  }
  std::vector<double> gx, gw;
  gauss_legendre(20, gx, gw);
  const int n_pan = int(std::ceil(2.0 * cutoff));
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(5, 5);
  for (int p = 0; p < n_pan; ++p) {
    const double lo = cutoff * p / n_pan, hi = cutoff * (p + 1) / n_pan;
    for (int i = 0; i < 20; ++i) {
      const double y = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gx[i];
      const double w = 0.5 * (hi - lo) * gw[i] * specfun::cdh_weight(lam, a, b, y);
      const Eigen::VectorXd s = specfun::cdh_recursion({lam, a, b, y * y}, 4);
      gram += w * s * s.transpose();
    }
  }
  double worst_orth = 0.0;
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const double expect =
          n == m ? std::exp(std::lgamma(n + 1.0) + std::lgamma(n + a + b) -
                            std::lgamma(n + lam + a) - std::lgamma(n + lam + b))
                 : 0.0;
      worst_orth = std::max(worst_orth, std::abs(gram(n, m) - expect));
    }
  }
  rec.add("orthogonality against the printed weight", worst_orth, 1e-8);

  double w0 = specfun::cdh_weight(lam, a, b, 1e-9);
  rec.add("weight vanishes at y = 0", std::abs(w0), 1e-8);
}

void tridiag_suite(const ModelParams& params, Recorder& rec, double zeta_fault) {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  double worst_far = 0.0, worst_sym = 0.0, worst_match = 0.0;
  for (ASign sign : {ASign::positive, ASign::negative}) {
    const ModelParams p = sign == params.a_sign()
                              ? params
                              : ModelParams(-params.A(), params.omega(), params.xi(),
                                            params.lambda_c());
    for (double alpha : {0.3, 1.0, 2.7}) {
      for (int k = 0; k < 3; ++k) {
        const double eps = 1.05 + 1.5 * uni(rng);
        tridiag::BasisParams bp = k == 0 ? scatter::balanced_basis(p, eps, alpha)
                                         : tridiag::BasisParams(alpha, 0.4 + uni(rng),
                                                                0.15 + 0.4 * uni(rng),
                                                                p.a_sign());
        bp.zeta_offset = zeta_fault;
        double scale = 0.0;
        Eigen::MatrixXd quad(7, 7);
        for (int n = 0; n < 7; ++n)
          for (int m = 0; m <= n; ++m) {
            const int order = (n + m) / 2 + 3;  // near-minimal exact order
            quad(n, m) = tridiag::matrix_element_quadrature(p, bp, eps, n, m, order);
            quad(m, n) = tridiag::matrix_element_quadrature(p, bp, eps, m, n, order);
            scale = std::max(scale, std::abs(quad(n, m)));
          }
        for (int n = 0; n < 7; ++n)
          for (int m = 0; m < 7; ++m) {
            if (std::abs(n - m) >= 2)
              worst_far = std::max(worst_far, std::abs(quad(n, m)) / scale);
            worst_sym = std::max(worst_sym, std::abs(quad(n, m) - quad(m, n)) / scale);
            if (zeta_fault == 0.0) {
              const double ana = tridiag::matrix_element_analytic(p, bp, eps, n, m);
              worst_match =
                  std::max(worst_match, std::abs(quad(n, m) - ana) / scale);
            }
          }
      }
    }
  }
  rec.add("quadrature elements vanish for |n-m| >= 2", worst_far, 1e-10);
  rec.add("quadrature symmetry", worst_sym, 1e-12);
  if (zeta_fault == 0.0)
    rec.add("analytic vs quadrature elements", worst_match, 1e-8);

  // boundary-free integration by parts: the integral of d/dz (phi_n theta_m)
  // vanishes. The product is z^{2a} e^{-z} P(z) with P polynomial, so the
  // integrand relative to the z^{2a-1} e^{-z} measure is P' z + (2a - z) P,
  // with P' taken through the derivative identity z L' = n L_n - (n+nu) L_{n-1}.
  double worst_ibp = 0.0;
  const auto bp = scatter::balanced_basis(params, 1.25, 1.0);
  const double a = bp.alpha, nu = 2.0 * a - 1.0;
  const bool pos = params.A() > 0;
  const auto lag_prime = [&](int k, double dnu, double x) {
    if (k == 0) return 0.0;
    return (k * specfun::laguerre(k, dnu, x) -
            (k + dnu) * specfun::laguerre(k - 1, dnu, x)) /
           x;
  };
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const auto rule = specfun::gauss_laguerre((n + m) / 2 + 3, nu);
      const double val = rule.integrate([&](double x) {
        const double ln = specfun::laguerre(n, nu, x);
        const int mb = pos ? m - 1 : m;
        const double lmb = mb >= 0 ? specfun::laguerre(mb, nu + 1.0, x) : 0.0;
        const double bm = (bp.mu + a) * specfun::laguerre(m, nu, x) - x * lmb;
        const double dln = lag_prime(n, nu, x);
        const double dbm = (bp.mu + a) * lag_prime(m, nu, x) - lmb -
                           x * (mb >= 0 ? lag_prime(mb, nu + 1.0, x) : 0.0);
        const double poly = ln * bm;
        const double dpoly = dln * bm + ln * dbm;
        return dpoly * x + (2.0 * a - x) * poly;
      });
      worst_ibp = std::max(worst_ibp, std::abs(val));
    }
  }
  rec.add("boundary-free integration by parts", worst_ibp, 1e-10);
}

void spectrum_suite(const ModelParams& params, Recorder& rec) {
  double worst_diag = 0.0, worst_deg = 0.0, worst_edge = 0.0, worst_ann = 0.0;
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  for (int draw = 0; draw < 8; ++draw) {
    ModelParams p = params;
    if (draw > 0) {
      const double lam = 0.5 + uni(rng);
      const double om = 0.3 + 0.7 * uni(rng);
      const double lx = 0.3 + 0.6 * uni(rng);
      const double a_mag = 0.5 + 2.5 * uni(rng);
      p = ModelParams((draw % 2 ? 1.0 : -1.0) * a_mag, om, lx / lam, lam);
    }

    const auto closed = bound::spectrum(p);
    const auto diag = bound::diagonalization_spectrum(p);
    for (std::size_t i = 0; i < closed.size(); ++i)
      worst_diag = std::max(worst_diag, std::abs(closed[i].epsilon - diag[i].epsilon));

    const ModelParams neg = p.A() < 0 ? p
                                      : ModelParams(-p.A(), p.omega(), p.xi(), p.lambda_c());
    for (const auto& st : bound::spectrum(neg)) {
      const auto partner = bound::degeneracy_partner(neg, st);
      worst_deg = std::max(worst_deg, std::abs(st.epsilon + partner.epsilon));
    }

    const ModelParams pos = p.A() > 0 ? p
                                      : ModelParams(-p.A(), p.omega(), p.xi(), p.lambda_c());
    for (const auto& st : bound::spectrum(pos)) {
      if (st.n == 0)
        worst_edge = std::max(worst_edge,
                              std::abs(std::abs(st.epsilon) - pos.C()));
      if (!st.valid) continue;
      // the terminating coefficient vector is annihilated by the operator rows
      const auto bp = scatter::balanced_basis(pos, st.epsilon, st.alpha_n);
      const int rows = st.n + 3;
      const auto op = tridiag::operator_rows(pos, bp, st.epsilon, rows);
      Eigen::VectorXd f = Eigen::VectorXd::Zero(rows);
      for (int m = 0; m <= st.n; ++m)
        f[m] = std::exp(0.5 * (std::lgamma(m + 2.0 * st.alpha_n) - std::lgamma(m + 1.0)));
      const Eigen::VectorXd residual = op.apply(f);
      double scale = f.norm() * (op.diag.cwiseAbs().maxCoeff() +
                                 (rows > 1 ? op.offdiag.cwiseAbs().maxCoeff() : 0.0));
      worst_ann = std::max(worst_ann, residual.norm() / scale);
    }
  }
  rec.add("diagonalization route equals the closed form", worst_diag, 1e-12);
  rec.add("A<0 spectrum negates the shifted A>0 spectrum", worst_deg, 1e-15);
  rec.add("edge states sit at |eps| = C", worst_edge, 1e-15);
  rec.add("operator annihilates terminating coefficients", worst_ann, 1e-10);
}

void balance_suite(const ModelParams& params, Recorder& rec) {
  double worst_op = 0.0, worst_num = 0.0, worst_bound = 0.0;
  for (double eps : {1.1, 1.25, 2.0}) {
    for (double alpha : {0.6, 1.0, 2.2}) {
      const auto bp = scatter::balanced_basis(params, eps, alpha);
      for (int n = 0; n <= 10; ++n) {
        double scale = 0.0;
        for (double z = 0.5; z <= 20.0; z += 0.75)
          scale = std::max(scale, std::abs(tridiag::theta_basis(params, bp, n, z)));
        for (double z = 0.5; z <= 20.0; z += 0.75) {
          const double direct = tridiag::theta_basis(params, bp, n, z);
          const double via_op = tridiag::theta_basis_from_operator(params, bp, n, z);
          worst_op = std::max(worst_op, std::abs(direct - via_op) / scale);
          const double x = x_of_z(params, z);
          const double numeric = kinetic_balance_apply(
              params, eps,
              [&](double xx) {
                return tridiag::phi_basis(params, bp, n, z_of_x(params, xx));
              },
              x);
          worst_num = std::max(worst_num, std::abs(direct - numeric) / scale);
        }
      }
    }
  }
  rec.add("closed-form theta equals its operator route", worst_op, 1e-9);
  rec.add("numeric kinetic balance reproduces theta", worst_num, 1e-6);

  for (const auto& st : bound::spectrum(params)) {
    if (!st.valid) continue;
    double scale = 0.0;
    for (double z = 0.5; z <= 20.0; z += 1.3)
      scale = std::max(scale, std::abs(bound::bound_spinor(params, st, z).lower));
    if (scale == 0.0) continue;
    for (double z = 0.5; z <= 20.0; z += 1.3) {
      const double x = x_of_z(params, z);
      const double numeric = kinetic_balance_apply(
          params, st.epsilon,
          [&](double xx) {
            return bound::bound_spinor(params, st, z_of_x(params, xx)).upper;
          },
          x);
      worst_bound = std::max(worst_bound,
                             std::abs(numeric - bound::bound_spinor(params, st, z).lower) /
                                 scale);
    }
  }
  rec.add("bound pairs satisfy kinetic balance", worst_bound, 1e-6);
}

void scatter_suite(const ModelParams& params, Recorder& rec) {
  double worst_rec = 0.0;
  for (double eps : {1.1, 1.25, 2.0, -1.5}) {
    const double alpha = 1.0;
    const Eigen::VectorXd f = scatter::expansion_coefficients(params, eps, alpha, 62);
    const auto bp = scatter::balanced_basis(params, eps, alpha);
    for (int n = 1; n <= 59; ++n) {
      const auto rc = tridiag::recursion_coefficients(params, bp, eps, n);
      const double lhs = rc.diag * f[n] - rc.sub * f[n - 1] - rc.super * f[n + 1];
      const double scale = std::abs(rc.diag * f[n]) + std::abs(rc.sub * f[n - 1]) +
                           std::abs(rc.super * f[n + 1]);
      worst_rec = std::max(worst_rec, std::abs(lhs) / std::max(scale, 1e-300));
    }
  }
  rec.add("coefficients satisfy the three-term recursion", worst_rec, 1e-9);

  // substitution identity: general arguments reduce to the balanced ones
  double worst_sub = 0.0;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double eps = 1.05 + 2.0 * uni(rng);
    const double alpha = 0.4 + 2.0 * uni(rng);
    const auto bp = scatter::balanced_basis(params, eps, alpha);
    const auto general = scatter::cdh_args_general(params, bp, eps);
    const auto direct = scatter::cdh_args_of_energy(params, eps, alpha);
    worst_sub = std::max({worst_sub,
                          std::abs(general.b - direct.b) / std::max(1.0, std::abs(direct.b)),
                          std::abs(general.y2 - direct.y2) /
                              std::max(1.0, std::abs(direct.y2))});
  }
  rec.add("general CDH arguments reduce under kinetic balance", worst_sub, 1e-13);
}

void limits_suite(const ModelParams& params, Recorder& rec) {
  // spectrum: (eps_n - 1)/lam^2 approaches the Morse energies at order >= 1.9
  const double om = params.omega();
  const double xi_over_om = params.xi() / params.omega();
  double worst_order = 10.0;
  for (int n = 0; n <= 1; ++n) {
    double err[2];
    int i = 0;
    for (double lam : {1e-2, 1e-3}) {
      const ModelParams p(std::abs(params.A()), om, xi_over_om * om, lam);
      if (n > bound::n_max(p)) continue;
      const auto states = bound::spectrum(p);
      double eps_n = 0.0;
      for (const auto& st : states)
        if (st.n == n && st.branch == bound::Branch::plus) eps_n = st.epsilon;
      const double target = -0.5 * om * om * (xi_over_om - n) * (xi_over_om - n);
      err[i++] = std::abs((eps_n - 1.0) / (lam * lam) - target);
    }
    if (i == 2 && err[1] > 0.0)
      worst_order = std::min(worst_order, std::log10(err[0] / err[1]));
  }
  rec.add("nonrelativistic spectrum limit order", 1.9 - worst_order, 0.0);

  // series: the relativistic sum approaches the nonrelativistic one as lam^2
  const double E = 0.28;
  const double alpha = 1.0;
  double dev[2];
  int i = 0;
  for (double lam : {1e-2, 1e-3}) {
    const ModelParams p(std::abs(params.A()), om, xi_over_om * om, lam);
    const double eps = 1.0 + lam * lam * E;
    const auto sol = scatter::solve(p, eps, alpha, 24);
    double worst = 0.0;
    for (double z = 1.0; z <= 8.0; z += 0.5) {
      const double x = x_of_z(p, z);
      const double rel = scatter::evaluate_series(p, sol, x).upper;
      const double nr = scatter::nonrel_series(p, E, alpha, 24, x);
      worst = std::max(worst, std::abs(rel - nr));
    }
    dev[i++] = worst;
  }
  const double order = std::log10(dev[0] / dev[1]);
  rec.add("series nonrelativistic limit order", 1.9 - order, 0.0);
}

void chebyshev_suite(const ModelParams& params, Recorder& rec) {
  const double r100 = specfun::chebyshev_tail_residual(1.0, 1.0, 2.0, 50.0, 100, 16);
  const double r200 = specfun::chebyshev_tail_residual(1.0, 1.0, 2.0, 100.0, 200, 16);
  const double r400 = specfun::chebyshev_tail_residual(1.0, 1.0, 2.0, 200.0, 400, 16);
  rec.add("tail residual decreases, fixed polynomial parameters",
          (r200 < r100 && r400 < r200) ? 0.0 : 1.0, 0.5);

  const double lw = params.lambda_c() * params.omega();
  const auto eps_of = [&](double y) { return std::sqrt(1.0 + lw * lw * y * y); };
  const double s100 = scatter::chebyshev_tail(params, eps_of(5.0), 1.0, 100, 16);
  const double s400 = scatter::chebyshev_tail(params, eps_of(20.0), 1.0, 400, 16);
  rec.add("tail residual shrinks along the energy-tied family",
          s400 < s100 ? 0.0 : 1.0, 0.5);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"laguerre", "cdh", "tridiag", "spectrum", "balance", "scatter", "limits",
          "chebyshev"};
}

std::vector<CheckResult> run_checks(const ModelParams& params, const VerifyOptions& options) {
  std::vector<CheckResult> results;
  const auto want = [&](const std::string& name) {
    return options.only.empty() || options.only == name;
  };

  if (want("laguerre")) {
    Recorder rec{results, "laguerre"};
    laguerre_suite(rec);
  }
  if (want("cdh")) {
    Recorder rec{results, "cdh"};
    cdh_suite(rec);
  }
  if (want("tridiag")) {
    Recorder rec{results, "tridiag"};
    tridiag_suite(params, rec, options.zeta_fault);
  }
  if (want("spectrum")) {
    Recorder rec{results, "spectrum"};
    spectrum_suite(params, rec);
  }
  if (want("balance")) {
    Recorder rec{results, "balance"};
    balance_suite(params, rec);
  }
  if (want("scatter")) {
    Recorder rec{results, "scatter"};
    scatter_suite(params, rec);
  }
  if (want("limits")) {
    Recorder rec{results, "limits"};
    limits_suite(params, rec);
  }
  if (want("chebyshev")) {
    Recorder rec{results, "chebyshev"};
    chebyshev_suite(params, rec);
  }
  return results;
}

}  // namespace dmorse::verify
