#pragma once

#include <vector>

#include "dmorse/model.hpp"

// Closed-form discrete spectrum, the state-dependent exponents alpha_n, the
// bound spinor wavefunctions, the A>0 / A<0 degeneracy relation, and the
// diagonalization-condition route that recovers the same spectrum from the
// tridiagonal representation.

namespace dmorse::bound {

enum class Branch { plus, minus };

struct BoundState {
  int n = 0;
  Branch branch = Branch::plus;
  double epsilon = 0.0;
  double alpha_n = 0.0;
  bool valid = false;  // square integrability, alpha_n > 0
};

//! Largest integer <= 1 / (lambda_c * C * omega).
int n_max(const ModelParams& params);

//! alpha_n = (xi/(C omega)) eps - n for A > 0, and
//! -(xi/(C omega)) eps - n - 1 for A < 0.
double alpha_n(const ModelParams& params, int n, double epsilon);

//! Both branches for n = 0..n_max (A > 0) or n = 0..n_max-1 (A < 0), sorted
//! by (n, branch). States with alpha_n <= 0 are kept and flagged invalid.
std::vector<BoundState> spectrum(const ModelParams& params);

//! For a state of the A < 0 problem, the (n+1, opposite-branch) state of the
//! sign-flipped problem carrying the exactly negated energy. Throws
//! std::domain_error when no partner exists.
BoundState degeneracy_partner(const ModelParams& params, const BoundState& state);

//! The closed-form spinor pair built on L_n^{2 alpha_n - 1}: the n-th basis
//! element of the kinetic-balanced basis at alpha = alpha_n. Rotated frame.
//! Note this pair is balance-consistent but for n >= 1 it is not the
//! eigenfunction of the second-order equation; see bound_eigenspinor.
SpinorSample bound_spinor(const ModelParams& params, const BoundState& state, double z);

//! The terminating-series eigen-spinor: upper component proportional to
//! z^alpha e^{-z/2} L_n^{2 alpha}(z) (the finite kinetic-balanced series
//! telescoped in closed form), lower component by exact kinetic balance.
//! This pair satisfies the wave equation pointwise. Rotated frame.
SpinorSample bound_eigenspinor(const ModelParams& params, const BoundState& state, double z);

//! Spectrum recovered by root-finding on the diagonalization conditions
//! n + alpha + b(eps) = 0 and y(eps)^2 = -alpha^2 instead of the closed form.
std::vector<BoundState> diagonalization_spectrum(const ModelParams& params);

}  // namespace dmorse::bound
