#include "dmorse/model.hpp"

#include <cmath>
#include <stdexcept>

namespace dmorse {

ModelParams::ModelParams(double A, double omega, double xi, double lambda_c)
    : a_(A), omega_(omega), xi_(xi), lambda_c_(lambda_c) {
  if (A == 0.0) throw std::invalid_argument("ModelParams: A must be nonzero");
  if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
  if (!(xi > 0.0)) throw std::invalid_argument("ModelParams: xi must be > 0");
  if (!(lambda_c > 0.0)) throw std::invalid_argument("ModelParams: lambda_c must be > 0");
  const double lx = lambda_c * xi;
  if (!(lx < 1.0))
    throw std::invalid_argument("ModelParams: lambda_c * xi must be < 1");
  c_ = std::sqrt(1.0 - lx * lx);
  rot_angle_ = std::asin(lx);
  z_hat_ = 2.0 * c_ * std::abs(a_) / (omega_ * xi_);
}

double potential(const ModelParams& params, double x) {
  return -params.A() * std::exp(-params.omega() * x);
}

double z_of_x(const ModelParams& params, double x) {
  return params.z_hat() * std::exp(-params.omega() * x);
}

double x_of_z(const ModelParams& params, double z) {
  if (!(z > 0.0)) throw std::domain_error("x_of_z: requires z > 0");
  return -std::log(z / params.z_hat()) / params.omega();
}

SpinorSample rotate_spinor(const ModelParams& params, const SpinorSample& s) {
  if (s.frame != Frame::original)
    throw std::invalid_argument("rotate_spinor: input must be in the original frame");
  const double c = std::cos(0.5 * params.rot_angle());
  const double n = std::sin(0.5 * params.rot_angle());
  return {c * s.upper + n * s.lower, -n * s.upper + c * s.lower, Frame::rotated};
}

SpinorSample unrotate_spinor(const ModelParams& params, const SpinorSample& s) {
  if (s.frame != Frame::rotated)
    throw std::invalid_argument("unrotate_spinor: input must be in the rotated frame");
  const double c = std::cos(0.5 * params.rot_angle());
  const double n = std::sin(0.5 * params.rot_angle());
  return {c * s.upper - n * s.lower, n * s.upper + c * s.lower, Frame::original};
}

double kinetic_balance_apply(const ModelParams& params, double epsilon,
                             const std::function<double(double)>& phi_plus,
                             double x) {
  const double c = params.C();
  if (std::abs(c + epsilon) < 1e-14)
    throw std::domain_error("kinetic_balance_apply: pole at epsilon = -C");
  const double h = std::max(1e-5, 1e-5 * std::abs(x));
  const double dphi = (phi_plus(x - 2 * h) - 8.0 * phi_plus(x - h) +
                       8.0 * phi_plus(x + h) - phi_plus(x + 2 * h)) /
                      (12.0 * h);
  const double op = (-params.xi() + (c / params.xi()) * potential(params, x)) *
                        phi_plus(x) +
                    dphi;
  return params.lambda_c() / (c + epsilon) * op;
}

SchrodingerCoeffs schrodinger_like_coeffs(const ModelParams& params, double epsilon) {
  const double ca_xi = params.C() * params.A() / params.xi();
  SchrodingerCoeffs k;
  k.c2 = ca_xi * ca_xi;
  k.c1 = -ca_xi * (params.omega() + 2.0 * params.xi() * epsilon / params.C());
  k.c0 = -(epsilon * epsilon - 1.0) / (params.lambda_c() * params.lambda_c());
  return k;
}

double superpotential(const ModelParams& params, double epsilon, double x) {
  return (params.C() / params.xi()) * potential(params, x) +
         (params.xi() / params.C()) * epsilon;
}

NonRelMap nonrel_map(const ModelParams& params, double epsilon) {
  NonRelMap m;
  m.E = (epsilon * epsilon - 1.0) / (2.0 * params.lambda_c() * params.lambda_c());
  m.B = std::abs(params.C() * params.A() / params.xi());
  m.D = params.A() > 0
            ? params.xi() * epsilon / params.C()
            : -params.omega() - params.xi() * epsilon / params.C();
  return m;
}

}  // namespace dmorse
