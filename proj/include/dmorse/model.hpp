#pragma once

#include <functional>

// Problem definition: physical parameters of the one-dimensional Dirac
// equation with the exponential potential V(x) = -A e^{-omega x}, the
// coordinate map x <-> z, the global spinor rotation, kinetic balance, the
// Schroedinger-like reduction for the upper component, and the map onto the
// nonrelativistic Morse problem.

namespace dmorse {

enum class ASign { positive, negative };

//! Immutable problem instance. Units: hbar = m = 1, energies in units of
//! m c^2, lambda_c is the Compton wavelength 1/c.
class ModelParams {
 public:
  //! Throws std::invalid_argument unless A != 0, omega > 0, xi > 0,
  //! lambda_c > 0 and lambda_c * xi < 1.
  ModelParams(double A, double omega, double xi, double lambda_c);

  double A() const { return a_; }
  double omega() const { return omega_; }
  double xi() const { return xi_; }
  double lambda_c() const { return lambda_c_; }

  //! C = cos(lambda*eta) = sqrt(1 - (lambda*xi)^2), in (0, 1].
  double C() const { return c_; }
  //! The rotation angle lambda*eta with sin(lambda*eta) = +lambda*xi.
  double rot_angle() const { return rot_angle_; }

  ASign a_sign() const { return a_ > 0 ? ASign::positive : ASign::negative; }
  //! +1 for A > 0, -1 for A < 0 (the top/bottom sign of the equations).
  double sign() const { return a_ > 0 ? 1.0 : -1.0; }

  //! Scale of the coordinate map: z = z_hat * e^{-omega x}.
  double z_hat() const { return z_hat_; }

 private:
  double a_, omega_, xi_, lambda_c_;
  double c_, rot_angle_, z_hat_;
};

enum class Frame { original, rotated };  // (g, f) vs (phi+, phi-)

struct SpinorSample {
  double upper = 0.0;
  double lower = 0.0;
  Frame frame = Frame::original;
};

//! Parameters of the equivalent nonrelativistic Morse problem.
struct NonRelMap {
  double E = 0.0;  // nonrelativistic energy
  double B = 0.0;  // > 0
  double D = 0.0;
};

//! V(x) = -A e^{-omega x}.
double potential(const ModelParams& params, double x);

//! z = (2 C |A| / (omega xi)) e^{-omega x}; monotone bijection R -> (0, inf).
double z_of_x(const ModelParams& params, double x);
//! Inverse of z_of_x; throws std::domain_error for z <= 0.
double x_of_z(const ModelParams& params, double z);

//! Apply the global half-angle rotation taking (g, f) to (phi+, phi-).
//! Throws std::invalid_argument if the sample is not in the original frame.
SpinorSample rotate_spinor(const ModelParams& params, const SpinorSample& s);
//! Inverse rotation (transpose); requires the rotated frame.
SpinorSample unrotate_spinor(const ModelParams& params, const SpinorSample& s);

//! Lower component from the upper one through the kinetic-balance relation
//!   phi-(x) = [lambda/(C+eps)] (-xi + (C/xi) V(x) + d/dx) phi+(x),
//! with the derivative taken by 5-point central differences.
//! Throws std::domain_error at the eps = -C pole.
double kinetic_balance_apply(const ModelParams& params, double epsilon,
                             const std::function<double(double)>& phi_plus,
                             double x);

//! Coefficients of the Schroedinger-like equation for the upper component,
//!   [-d2/dx2 + c2 e^{-2 omega x} + c1 e^{-omega x} + c0] phi+ = 0.
struct SchrodingerCoeffs {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
};
SchrodingerCoeffs schrodinger_like_coeffs(const ModelParams& params, double epsilon);

//! W(x) = (C/xi) V(x) + (xi/C) eps.
double superpotential(const ModelParams& params, double epsilon, double x);

//! Map onto the nonrelativistic Morse parameters (E, B, D); the D branch
//! follows the sign of A.
NonRelMap nonrel_map(const ModelParams& params, double epsilon);

}  // namespace dmorse
