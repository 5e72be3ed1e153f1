#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "dmorse/model.hpp"

// Independent numerical verification: direct integration of the
// Schroedinger-like equation, bound-state search by shooting with two-sided
// matching, and finite-difference residual evaluation of candidate
// wavefunctions. Everything here deliberately avoids the closed forms it is
// meant to check.

namespace dmorse::oracle {

struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_points = 3;

  Grid() = default;
  Grid(double x_min_, double x_max_, int n_points_);
  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double x(int i) const { return x_min + i * spacing(); }
};

//! Sampled solution of -phi'' + (c2 e^{-2wx} + c1 e^{-wx} + c0) phi = 0.
//! If the integration had to be rescaled to avoid overflow, the stored
//! samples equal the true solution times e^{-log_scale}.
struct OdeSolution {
  Eigen::VectorXd phi;
  Eigen::VectorXd dphi;
  double log_scale = 0.0;
};

//! Classical RK4 on the first-order system, stepping on the grid.
OdeSolution integrate_ode(double c2, double c1, double c0, double omega,
                          const Grid& grid, double init_value, double init_slope);

//! Same, with the coefficients taken from the model at the given energy.
OdeSolution integrate_ode(const ModelParams& params, double epsilon,
                          const Grid& grid, double init_value, double init_slope);

struct ShootingResult {
  std::vector<double> energies;
  std::vector<int> node_counts;
  std::vector<double> residuals;  // normalized matching mismatch at convergence
};

//! Grid whose ends are placed from z-thresholds: the repulsive side at
//! z ~ max(50, 2 z_outer_turning) and the tail side at z ~ 1e-3 of the inner
//! turning point, over the worst case of the energy window.
Grid shooting_grid(const ModelParams& params, double e_lo, double e_hi, int n_points);

//! All eigen-energies in (e_lo, e_hi), located by sign changes of the
//! two-sided matching Wronskian on an energy scan and refined by bisection
//! to |d eps| <= 1e-9.
ShootingResult shoot_spectrum(const ModelParams& params, double e_lo, double e_hi,
                              const Grid& grid);

//! max over interior grid points of |-phi'' + (c2 e^{-2wx} + c1 e^{-wx} + c0) phi|
//! divided by max |phi|; the second derivative by 5-point central differences
//! on the grid spacing.
double ode_residual(const ModelParams& params, double epsilon,
                    const std::function<double(double)>& wavefun, const Grid& grid);

}  // namespace dmorse::oracle
