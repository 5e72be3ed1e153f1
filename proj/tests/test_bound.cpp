#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "dmorse/bound.hpp"
#include "dmorse/model.hpp"
#include "dmorse/oracle.hpp"
#include "dmorse/specfun.hpp"
#include "testutil.hpp"

using namespace dmorse;
using bound::Branch;

namespace {
ModelParams canonical() { return ModelParams(2.0, 0.5, 0.8, 1.0); }

const bound::BoundState& find_state(const std::vector<bound::BoundState>& states,
                                    int n, Branch branch) {
  for (const auto& st : states)
    if (st.n == n && st.branch == branch) return st;
  throw std::runtime_error("state not found");
}
}  // namespace

TEST_CASE("n_max: floor of 1/(lam C om)") {
  CHECK(bound::n_max(canonical()) == 3);  // 1/0.3
  // lam C om = 0.5 exactly: C = 0.6, lam = 1, om = 0.5/0.6
  CHECK(bound::n_max(ModelParams(2.0, 0.5 / 0.6, 0.8, 1.0)) == 2);
  // boundary lam C om = 1
  CHECK(bound::n_max(ModelParams(2.0, 1.0 / 0.6, 0.8, 1.0)) == 1);
}

TEST_CASE("spectrum: canonical worked values and ordering") {
  const auto p = canonical();
  const auto states = bound::spectrum(p);
  REQUIRE(states.size() == 8);  // n = 0..3, both branches

  CHECK(find_state(states, 0, Branch::plus).epsilon == p.C());
  CHECK(find_state(states, 0, Branch::minus).epsilon == -p.C());
  CHECK(find_state(states, 1, Branch::plus).epsilon ==
        doctest::Approx(0.812363520850167389).epsilon(1e-15));
  CHECK(find_state(states, 2, Branch::minus).epsilon ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-15));  // exact spectral zero
  CHECK(find_state(states, 3, Branch::plus).valid == false);
  CHECK(find_state(states, 1, Branch::plus).valid == true);

  for (std::size_t i = 1; i < states.size(); ++i) {
    const bool ordered = states[i].n > states[i - 1].n ||
                         (states[i].n == states[i - 1].n &&
                          states[i - 1].branch == Branch::plus);
    CHECK(ordered);
  }
}

TEST_CASE("alpha_n: worked values, boundary, and the A<0 mirror") {
  const auto p = canonical();
  CHECK(bound::alpha_n(p, 0, 0.6) == doctest::Approx(1.6).epsilon(1e-14));
  // n at the square-integrability boundary
  const double eps_b = 2.0 * (p.C() * p.omega()) / p.xi();
  CHECK(bound::alpha_n(p, 2, eps_b) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

  const ModelParams m(-2.0, 0.5, 0.8, 1.0);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> uni(-0.9, 0.9);
  for (int k = 0; k < 20; ++k) {
    const double eps = uni(rng);
    for (int n = 1; n <= 3; ++n)
      CHECK(bound::alpha_n(m, n - 1, -eps) ==
            doctest::Approx(bound::alpha_n(p, n, eps)).epsilon(1e-13));
  }
}

TEST_CASE("degeneracy_partner: sign-flip identity, unpaired states, involution") {
  const ModelParams p = canonical();
  const ModelParams m(-2.0, 0.5, 0.8, 1.0);

  const auto neg_states = bound::spectrum(m);
  REQUIRE(neg_states.size() == 6);  // n = 0..2
  for (const auto& st : neg_states) {
    const auto partner = bound::degeneracy_partner(m, st);
    CHECK(partner.n == st.n + 1);
    CHECK(partner.branch != st.branch);
    CHECK(st.epsilon + partner.epsilon == 0.0);  // exact floating-point negation
    // involution
    const auto back = bound::degeneracy_partner(p, partner);
    CHECK(back.n == st.n);
    CHECK(back.branch == st.branch);
    CHECK(back.epsilon == st.epsilon);
  }

  // the two n = 0 states of the A > 0 problem are unpaired
  const auto pos_states = bound::spectrum(p);
  CHECK_THROWS_AS(bound::degeneracy_partner(p, find_state(pos_states, 0, Branch::plus)),
                  std::domain_error);
  CHECK_THROWS_AS(bound::degeneracy_partner(p, find_state(pos_states, 0, Branch::minus)),
                  std::domain_error);
  // every other A > 0 state has a partner
  for (const auto& st : pos_states)
    if (st.n > 0) CHECK_NOTHROW(bound::degeneracy_partner(p, st));
}

TEST_CASE("bound_spinor: closed-form value, bracket reduction, guards") {
  const auto p = canonical();
  const auto states = bound::spectrum(p);
  const auto& ground = find_state(states, 0, Branch::plus);

  // frozen oracle value sqrt(0.5 / Gamma(3.2)) e^{-1/2}, cross-checked in place
  const auto s = bound::bound_spinor(p, ground, 1.0);
  const double expect = std::sqrt(0.5 / std::exp(std::lgamma(3.2))) * std::exp(-0.5);
  CHECK(s.upper == doctest::Approx(expect).epsilon(1e-13));
  CHECK(s.upper == doctest::Approx(0.275470150236686446).epsilon(1e-13));
  CHECK(s.frame == Frame::rotated);

  // n = 0 lower component carries the (alpha + xi/omega) bracket only
  const double pref = -p.lambda_c() * p.omega() / (p.C() + ground.epsilon);
  CHECK(s.lower ==
        doctest::Approx(pref * (ground.alpha_n + p.xi() / p.omega()) * s.upper)
            .epsilon(1e-13));

  CHECK_THROWS_AS(bound::bound_spinor(p, find_state(states, 3, Branch::plus), 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(bound::bound_spinor(p, ground, 0.0), std::domain_error);
}

TEST_CASE("bound pairs are kinetic-balance consistent") {
  const auto p = canonical();
  for (const auto& st : bound::spectrum(p)) {
    if (!st.valid) continue;
    for (double z = 0.5; z <= 20.0; z += 1.5) {
      const double x = x_of_z(p, z);
      const double lower = kinetic_balance_apply(
          p, st.epsilon,
          [&](double xx) { return bound::bound_spinor(p, st, z_of_x(p, xx)).upper; },
          x);
      const auto s = bound::bound_spinor(p, st, z);
      CHECK(lower == doctest::Approx(s.lower).epsilon(1e-6));

      const double lower_e = kinetic_balance_apply(
          p, st.epsilon,
          [&](double xx) {
            return bound::bound_eigenspinor(p, st, z_of_x(p, xx)).upper;
          },
          x);
      const auto se = bound::bound_eigenspinor(p, st, z);
      CHECK(lower_e == doctest::Approx(se.lower).epsilon(1e-6));
    }
  }
}

TEST_CASE("eigen-spinors satisfy the second-order equation at their energies") {
  for (bool positive : {true, false}) {
    const ModelParams p = positive ? canonical() : ModelParams(-2.0, 0.5, 0.8, 1.0);
    const oracle::Grid grid(x_of_z(p, 20.0), x_of_z(p, 0.5), 801);
    for (const auto& st : bound::spectrum(p)) {
      if (!st.valid) continue;
      const double res = oracle::ode_residual(
          p, st.epsilon,
          [&](double x) { return bound::bound_eigenspinor(p, st, z_of_x(p, x)).upper; },
          grid);
      CHECK(res <= 1e-8);
    }
  }
  // negative control: the single-element closed form is not an eigenfunction
  // for n >= 1 (its terminating series is), so its residual must be large
  const auto p = canonical();
  const auto& st1 = find_state(bound::spectrum(p), 1, Branch::plus);
  const oracle::Grid grid(x_of_z(p, 20.0), x_of_z(p, 0.5), 801);
  const double res1 = oracle::ode_residual(
      p, st1.epsilon,
      [&](double x) { return bound::bound_spinor(p, st1, z_of_x(p, x)).upper; }, grid);
  CHECK(res1 > 1e-3);
}

TEST_CASE("normalizability of every valid state") {
  for (bool positive : {true, false}) {
    const ModelParams p = positive ? canonical() : ModelParams(-2.0, 0.5, 0.8, 1.0);
    for (const auto& st : bound::spectrum(p)) {
      if (!st.valid) continue;
      const auto rule = specfun::gauss_laguerre(st.n + 30, 2.0 * st.alpha_n - 1.0);
      const double norm = rule.integrate([&](double z) {
        const auto s = bound::bound_spinor(p, st, z);
        const double env = std::pow(z, st.alpha_n) * std::exp(-0.5 * z);
        // strip the measure weight captured by the quadrature
        const double up = s.upper / env, lo = s.lower / env;
        return (up * up + lo * lo) / p.omega();
      });
      CHECK(std::isfinite(norm));
      CHECK(norm > 0.0);
      // the upper component alone is unit-normalized by construction
      const double upper_norm = rule.integrate([&](double z) {
        const double up = bound::bound_spinor(p, st, z).upper /
                          (std::pow(z, st.alpha_n) * std::exp(-0.5 * z));
        return up * up / p.omega();
      });
      CHECK(upper_norm == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("diagonalization route reproduces the closed-form spectrum") {
  std::mt19937 rng(31);
  for (int draw = 0; draw < 50; ++draw) {
    const ModelParams p = testutil::random_model(rng, draw % 2 == 0);
    const auto closed = bound::spectrum(p);
    const auto diag = bound::diagonalization_spectrum(p);
    REQUIRE(closed.size() == diag.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      CHECK(closed[i].n == diag[i].n);
      CHECK(closed[i].branch == diag[i].branch);
      CHECK(std::abs(closed[i].epsilon - diag[i].epsilon) <= 1e-12);
      CHECK(closed[i].valid == diag[i].valid);
    }
  }
  // the edge state comes out at exactly +C
  const auto diag = bound::diagonalization_spectrum(canonical());
  CHECK(find_state(diag, 0, Branch::plus).epsilon ==
        doctest::Approx(canonical().C()).epsilon(1e-14));
}

TEST_CASE("nonrelativistic limit of the plus-branch energies") {
  // (eps_n - 1)/lam^2 -> -om^2 (xi/om - n)^2 / 2 with xi/om held fixed
  const double om = 0.5, xi_over_om = 1.6;
  for (int n : {0, 1}) {
    const double target = -0.5 * om * om * (xi_over_om - n) * (xi_over_om - n);
    double err[2];
    int i = 0;
    for (double lam : {1e-2, 1e-3}) {
      const ModelParams p(2.0, om, xi_over_om * om, lam);
      const auto st = find_state(bound::spectrum(p), n, Branch::plus);
      err[i++] = std::abs((st.epsilon - 1.0) / (lam * lam) - target);
    }
    const double order = std::log10(err[0] / err[1]);
    CHECK(order >= 1.9);
  }
}
