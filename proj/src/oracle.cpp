#include "dmorse/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace dmorse::oracle {

Grid::Grid(double x_min_, double x_max_, int n_points_)
    : x_min(x_min_), x_max(x_max_), n_points(n_points_) {
  if (!(x_min < x_max)) throw std::invalid_argument("Grid: requires x_min < x_max");
  if (n_points < 3) throw std::invalid_argument("Grid: requires n_points >= 3");
}

OdeSolution integrate_ode(double c2, double c1, double c0, double omega,
                          const Grid& grid, double init_value, double init_slope) {
  const int n = grid.n_points;
  const double h = grid.spacing();
  OdeSolution sol;
  sol.phi.resize(n);
  sol.dphi.resize(n);

  const auto g = [&](double x) {
    const double e1 = std::exp(-omega * x);
    return (c2 * e1 + c1) * e1 + c0;
  };

  double u = init_value, v = init_slope;
  sol.phi[0] = u;
  sol.dphi[0] = v;
  for (int i = 0; i + 1 < n; ++i) {
    const double x = grid.x(i);
    const double g0 = g(x), gh = g(x + 0.5 * h), g1 = g(x + h);
    const double k1u = v, k1v = g0 * u;
    const double k2u = v + 0.5 * h * k1v, k2v = gh * (u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = gh * (u + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = g1 * (u + h * k3u);
    u += h * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0;
    v += h * (k1v + 2.0 * k2v + 2.0 * k3v + k4v) / 6.0;
    const double mag = std::abs(u) + std::abs(v);
    if (mag > 1e200) {
      // keep all stored samples on one common scale
      for (int k = 0; k <= i; ++k) {
        sol.phi[k] /= mag;
        sol.dphi[k] /= mag;
      }
      u /= mag;
      v /= mag;
      sol.log_scale += std::log(mag);
    }
    sol.phi[i + 1] = u;
    sol.dphi[i + 1] = v;
  }
  return sol;
}

OdeSolution integrate_ode(const ModelParams& params, double epsilon,
                          const Grid& grid, double init_value, double init_slope) {
  const auto k = schrodinger_like_coeffs(params, epsilon);
  return integrate_ode(k.c2, k.c1, k.c0, params.omega(), grid, init_value, init_slope);
}

namespace {

// Classical turning points of the effective potential in the variable
// s = omega z / 2: s^2 - (omega + 2D) s - 2E = 0.
struct TurningPoints {
  double z_inner = 0.0;  // tail side (small z)
  double z_outer = 0.0;  // wall side (large z)
  bool exists = false;
};

TurningPoints turning_points(const ModelParams& params, double epsilon) {
  TurningPoints t;
  const auto map = nonrel_map(params, epsilon);
  const double b = params.omega() + 2.0 * map.D;
  const double disc = b * b + 8.0 * map.E;
  if (b <= 0.0 || disc <= 0.0 || map.E >= 0.0) return t;
  const double s_lo = 0.5 * (b - std::sqrt(disc));
  const double s_hi = 0.5 * (b + std::sqrt(disc));
  if (s_lo <= 0.0) return t;
  t.z_inner = 2.0 * s_lo / params.omega();
  t.z_outer = 2.0 * s_hi / params.omega();
  t.exists = true;
  return t;
}

}  // namespace

Grid shooting_grid(const ModelParams& params, double e_lo, double e_hi, int n_points) {
  double z_wall = 0.0, z_tail = 1e30;
  bool any = false;
  for (int k = 0; k < 9; ++k) {
    const double e = e_lo + (e_hi - e_lo) * k / 8.0;
    const auto t = turning_points(params, e);
    if (!t.exists) continue;
    any = true;
    z_wall = std::max(z_wall, t.z_outer);
    z_tail = std::min(z_tail, t.z_inner);
  }
  const double z_in = any ? std::max(50.0, 2.0 * z_wall) : 50.0;
  const double z_out = any ? 1e-3 * z_tail : 1e-3;
  return Grid(x_of_z(params, z_in), x_of_z(params, z_out), n_points);
}

namespace {

struct TwoSided {
  double u_left, v_left;    // at the matching point, from the wall side
  double u_right, v_right;  // at the matching point, from the tail side
  int nodes = 0;            // sign changes away from the matching point
};

// Integrate toward the matching index from both ends, rescaling as needed;
// only the direction ratios at the match (and the node count) matter.
TwoSided integrate_two_sided(const Eigen::VectorXd& g_node,
                             const Eigen::VectorXd& g_mid, double h, int im) {
  const int n = int(g_node.size());
  TwoSided r{};
  double u = 1.0, v = std::sqrt(std::max(g_node[0], 1e-12));
  for (int i = 0; i < im; ++i) {
    const double prev = u;
    const double g0 = g_node[i], gh = g_mid[i], g1 = g_node[i + 1];
    const double k1u = v, k1v = g0 * u;
    const double k2u = v + 0.5 * h * k1v, k2v = gh * (u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = gh * (u + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = g1 * (u + h * k3u);
    u += h * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0;
    v += h * (k1v + 2.0 * k2v + 2.0 * k3v + k4v) / 6.0;
    const double mag = std::abs(u) + std::abs(v);
    if (mag > 1e200) {
      u /= mag;
      v /= mag;
    }
    if (prev != 0.0 && u != 0.0 && std::signbit(prev) != std::signbit(u)) ++r.nodes;
  }
  r.u_left = u;
  r.v_left = v;

  u = 1.0;
  v = -std::sqrt(std::max(g_node[n - 1], 1e-12));
  for (int i = n - 1; i > im; --i) {
    const double prev = u;
    const double g0 = g_node[i], gh = g_mid[i - 1], g1 = g_node[i - 1];
    const double k1u = v, k1v = g0 * u;
    const double k2u = v - 0.5 * h * k1v, k2v = gh * (u - 0.5 * h * k1u);
    const double k3u = v - 0.5 * h * k2v, k3v = gh * (u - 0.5 * h * k2u);
    const double k4u = v - h * k3v, k4v = g1 * (u - h * k3u);
    u -= h * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0;
    v -= h * (k1v + 2.0 * k2v + 2.0 * k3v + k4v) / 6.0;
    const double mag = std::abs(u) + std::abs(v);
    if (mag > 1e200) {
      u /= mag;
      v /= mag;
    }
    if (prev != 0.0 && u != 0.0 && std::signbit(prev) != std::signbit(u)) ++r.nodes;
  }
  r.u_right = u;
  r.v_right = v;
  return r;
}

}  // namespace

ShootingResult shoot_spectrum(const ModelParams& params, double e_lo, double e_hi,
                              const Grid& grid) {
  if (!(e_lo < e_hi) || e_lo <= -1.0 || e_hi >= 1.0)
    throw std::invalid_argument("shoot_spectrum: window must lie inside (-1, 1)");
  if (grid.n_points < 16)
    throw std::invalid_argument("shoot_spectrum: grid is too coarse to match on");

  const int n = grid.n_points;
  const double h = grid.spacing();
  Eigen::VectorXd e1_node(n), e1_mid(n - 1);
  for (int i = 0; i < n; ++i) e1_node[i] = std::exp(-params.omega() * grid.x(i));
  for (int i = 0; i + 1 < n; ++i)
    e1_mid[i] = std::exp(-params.omega() * (grid.x(i) + 0.5 * h));

  // matching point near the middle of the classically allowed region
  double z_lo = 1e30, z_hi = 0.0;
  for (int k = 0; k < 9; ++k) {
    const auto t = turning_points(params, e_lo + (e_hi - e_lo) * k / 8.0);
    if (!t.exists) continue;
    z_lo = std::min(z_lo, t.z_inner);
    z_hi = std::max(z_hi, t.z_outer);
  }
  const double z_match = z_hi > 0.0 ? 0.5 * (z_lo + z_hi) : params.z_hat();
  const double x_match = x_of_z(params, z_match);
  const int im = std::clamp(int(std::lround((x_match - grid.x_min) / h)), 5, n - 6);

  Eigen::VectorXd g_node(n), g_mid(n - 1);
  const auto match = [&](double eps) {
    const auto k = schrodinger_like_coeffs(params, eps);
    for (int i = 0; i < n; ++i)
      g_node[i] = (k.c2 * e1_node[i] + k.c1) * e1_node[i] + k.c0;
    for (int i = 0; i + 1 < n; ++i)
      g_mid[i] = (k.c2 * e1_mid[i] + k.c1) * e1_mid[i] + k.c0;
    return integrate_two_sided(g_node, g_mid, h, im);
  };
  const auto wronskian = [&](double eps) {
    const auto t = match(eps);
    const double scale = (std::abs(t.u_left) + std::abs(t.v_left)) *
                         (std::abs(t.u_right) + std::abs(t.v_right));
    return (t.u_left * t.v_right - t.u_right * t.v_left) / scale;
  };

  ShootingResult result;
  const int n_scan = 1201;
  double w_prev = wronskian(e_lo);
  for (int k = 1; k < n_scan; ++k) {
    const double e = e_lo + (e_hi - e_lo) * k / (n_scan - 1.0);
    const double w = wronskian(e);
    if (w_prev == 0.0 || std::signbit(w) == std::signbit(w_prev)) {
      w_prev = w;
      continue;
    }
    double a = e_lo + (e_hi - e_lo) * (k - 1) / (n_scan - 1.0);
    double b = e;
    double wa = w_prev;
    for (int it = 0; it < 64 && b - a > 1e-13; ++it) {
      const double m = 0.5 * (a + b);
      const double wm = wronskian(m);
      if (std::signbit(wm) == std::signbit(wa)) {
        a = m;
        wa = wm;
      } else {
        b = m;
      }
    }
    const double root = 0.5 * (a + b);
    const auto converged = match(root);
    const double scale = (std::abs(converged.u_left) + std::abs(converged.v_left)) *
                         (std::abs(converged.u_right) + std::abs(converged.v_right));
    result.energies.push_back(root);
    result.residuals.push_back(std::abs(converged.u_left * converged.v_right -
                                        converged.u_right * converged.v_left) /
                               scale);
    result.node_counts.push_back(converged.nodes);
    w_prev = w;
  }
  return result;
}

double ode_residual(const ModelParams& params, double epsilon,
                    const std::function<double(double)>& wavefun, const Grid& grid) {
  const auto k = schrodinger_like_coeffs(params, epsilon);
  const int n = grid.n_points;
  const double h = grid.spacing();
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) f[i] = wavefun(grid.x(i));
  const double scale = f.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;

  double worst = 0.0;
  for (int i = 2; i + 2 < n; ++i) {
    const double d2 = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] +
                       16.0 * f[i + 1] - f[i + 2]) /
                      (12.0 * h * h);
    const double e1 = std::exp(-params.omega() * grid.x(i));
    const double res = -d2 + ((k.c2 * e1 + k.c1) * e1 + k.c0) * f[i];
    worst = std::max(worst, std::abs(res));
  }
  return worst / scale;
}

}  // namespace dmorse::oracle
