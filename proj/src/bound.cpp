#include "dmorse/bound.hpp"

#include <cmath>
#include <stdexcept>

#include "dmorse/specfun.hpp"

namespace dmorse::bound {

namespace {

// epsilon of one state from the closed form; k = n for A > 0, n+1 for A < 0.
double state_energy(const ModelParams& p, int n, Branch branch) {
  const double lam = p.lambda_c(), om = p.omega(), xi = p.xi(), c = p.C();
  const double k = p.A() > 0 ? double(n) : double(n + 1);
  const double t = lam * c * om * k;
  const double root = std::sqrt(std::max(1.0 - t * t, 0.0));
  const double s = branch == Branch::plus ? 1.0 : -1.0;
  const double drift = lam * lam * xi * om * k;
  return p.A() > 0 ? c * (drift + s * root) : c * (-drift + s * root);
}

BoundState make_state(const ModelParams& p, int n, Branch branch) {
  BoundState st;
  st.n = n;
  st.branch = branch;
  st.epsilon = state_energy(p, n, branch);
  st.alpha_n = alpha_n(p, n, st.epsilon);
  st.valid = st.alpha_n > 0.0;
  return st;
}

double balance_mu(const ModelParams& p) { return p.xi() / p.omega(); }

// Bracket of the kinetic-balance operator (mu + zeta z + z d/dz) applied to
// z^alpha e^{-z/2} L_n^nu(z), expressed in the same L^nu family.
double balance_bracket(const ModelParams& p, double alpha, double nu, int n, double z) {
  const double mu = balance_mu(p);
  const double zeta = 0.5 * p.sign();
  const double ln = specfun::laguerre(n, nu, z);
  const double lnm1 = n >= 1 ? specfun::laguerre(n - 1, nu, z) : 0.0;
  return (mu + alpha + n) * ln - (n + nu) * lnm1 + (zeta - 0.5) * z * ln;
}

}  // namespace

int n_max(const ModelParams& params) {
  return int(std::floor(1.0 / (params.lambda_c() * params.C() * params.omega())));
}

double alpha_n(const ModelParams& params, int n, double epsilon) {
  const double r = params.xi() / (params.C() * params.omega());
  return params.A() > 0 ? r * epsilon - n : -r * epsilon - n - 1;
}

std::vector<BoundState> spectrum(const ModelParams& params) {
  const int top = params.A() > 0 ? n_max(params) : n_max(params) - 1;
  std::vector<BoundState> states;
  states.reserve(2 * std::max(top + 1, 0));
  for (int n = 0; n <= top; ++n) {
    states.push_back(make_state(params, n, Branch::plus));
    states.push_back(make_state(params, n, Branch::minus));
  }
  return states;
}

BoundState degeneracy_partner(const ModelParams& params, const BoundState& state) {
  const ModelParams flipped(-params.A(), params.omega(), params.xi(), params.lambda_c());
  const Branch other = state.branch == Branch::plus ? Branch::minus : Branch::plus;
  if (params.A() < 0) {
    // eps_n^(+-)|_{A<0} = -eps_{n+1}^(-+)|_{A>0}; n+1 <= n_max always holds.
    return make_state(flipped, state.n + 1, other);
  }
  if (state.n == 0)
    throw std::domain_error("degeneracy_partner: the n = 0 states of the A > 0 problem are unpaired");
  return make_state(flipped, state.n - 1, other);
}

SpinorSample bound_spinor(const ModelParams& params, const BoundState& state, double z) {
  if (!state.valid)
    throw std::domain_error("bound_spinor: state is not square integrable (alpha_n <= 0)");
  if (!(z > 0.0)) throw std::domain_error("bound_spinor: requires z > 0");
  const double c = params.C();
  if (std::abs(c + state.epsilon) < 1e-14)
    throw std::domain_error("bound_spinor: pole at epsilon = -C");

  const double a = state.alpha_n;
  const double nu = 2.0 * a - 1.0;
  const int n = state.n;
  const double norm = std::sqrt(params.omega()) *
                      std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + 2.0 * a)));
  const double envelope = norm * std::pow(z, a) * std::exp(-0.5 * z);

  SpinorSample out;
  out.frame = Frame::rotated;
  out.upper = envelope * specfun::laguerre(n, nu, z);

  const double mu = balance_mu(params);
  const double lnm = n >= 1 ? specfun::laguerre(n - 1, nu + 1.0, z) : 0.0;
  const double bracket =
      params.A() > 0
          ? (a + mu) * specfun::laguerre(n, nu, z) - z * lnm
          : (a + mu) * specfun::laguerre(n, nu, z) - z * specfun::laguerre(n, nu + 1.0, z);
  out.lower = -params.lambda_c() * params.omega() / (c + state.epsilon) * envelope * bracket;
  return out;
}

SpinorSample bound_eigenspinor(const ModelParams& params, const BoundState& state, double z) {
  if (!state.valid)
    throw std::domain_error("bound_eigenspinor: state is not square integrable (alpha_n <= 0)");
  if (!(z > 0.0)) throw std::domain_error("bound_eigenspinor: requires z > 0");
  const double c = params.C();
  if (std::abs(c + state.epsilon) < 1e-14)
    throw std::domain_error("bound_eigenspinor: pole at epsilon = -C");

  const double a = state.alpha_n;
  const double nu = 2.0 * a;  // the telescoped series lives one superscript up
  const int n = state.n;
  const double norm = std::sqrt(params.omega()) *
                      std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + 2.0 * a + 1.0)));
  const double envelope = norm * std::pow(z, a) * std::exp(-0.5 * z);

  SpinorSample out;
  out.frame = Frame::rotated;
  out.upper = envelope * specfun::laguerre(n, nu, z);
  out.lower = -params.lambda_c() * params.omega() / (c + state.epsilon) * envelope *
              balance_bracket(params, a, nu, n, z);
  return out;
}

std::vector<BoundState> diagonalization_spectrum(const ModelParams& params) {
  const double lam = params.lambda_c(), om = params.omega(), xi = params.xi(), c = params.C();
  const double r = xi / (c * om);
  const bool pos = params.A() > 0;

  // G(eps) = y(eps)^2 + alpha(eps)^2 with alpha = -n - b(eps); a bound state
  // sits wherever both diagonalization conditions hold, i.e. at G = 0.
  const auto G = [&](int n, double e) {
    const double b = pos ? -r * e : 1.0 + r * e;
    const double al = -double(n) - b;
    const double y2 = (e * e - 1.0) / (lam * om * lam * om);
    return y2 + al * al;
  };

  const int top = pos ? n_max(params) : n_max(params) - 1;
  std::vector<BoundState> states;
  for (int n = 0; n <= top; ++n) {
    // G is exactly quadratic in eps: recover its coefficients by
    // interpolation at -1, 0, 1 and solve with the stable quadratic formula.
    const double g_m = G(n, -1.0), g_0 = G(n, 0.0), g_p = G(n, 1.0);
    const double c2 = 0.5 * (g_p + g_m) - g_0;
    const double c1 = 0.5 * (g_p - g_m);
    const double c0 = g_0;
    double disc = c1 * c1 - 4.0 * c2 * c0;
    const double scale = c1 * c1 + std::abs(4.0 * c2 * c0);
    if (disc < 0.0 && disc > -1e-12 * scale) disc = 0.0;  // boundary tangency
    if (disc < 0.0)
      throw std::runtime_error("diagonalization_spectrum: no real root found");
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
    double lo = q / c2, hi = (q != 0.0) ? c0 / q : lo;
    if (lo > hi) std::swap(lo, hi);

    for (Branch branch : {Branch::plus, Branch::minus}) {
      BoundState st;
      st.n = n;
      st.branch = branch;
      st.epsilon = branch == Branch::plus ? hi : lo;
      st.alpha_n = alpha_n(params, n, st.epsilon);
      st.valid = st.alpha_n > 0.0;
      states.push_back(st);
    }
  }
  return states;
}

}  // namespace dmorse::bound
