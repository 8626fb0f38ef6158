#pragma once

// Closed-form second-order solution of the normalized spherical relative
// motion equations on eccentric orbits, and its circular-orbit limit.

#include "relmo/frames.hpp"
#include "relmo/kepler.hpp"
#include "relmo/linear.hpp"

namespace relmo {

/// Coefficients of the homogeneous part of the second-order rho correction,
/// each a quadratic form in K1..K6 (no K4 terms), plus the theta-equation
/// integration constant.
struct QuadCoeffs {
  double rho_j = 0.0;   // multiplies 1 - (3/2) e k J sin f
  double rho_s = 0.0;   // multiplies k sin f
  double rho_c = 0.0;   // multiplies k cos f
  double theta1 = 0.0;  // 2 theta'(f0) rho(f0) - phi(f0)^2 + rho(f0)^2
};

/// Throws DomainError for e >= 1.
QuadCoeffs quad_coeffs(const YAConstants& K, double e, double f0);

/// The second-order correction alone (the part quadratic in K), with
/// true-anomaly rates. It vanishes together with its rates at f0.
NondimSpherical second_order_correction(const YAConstants& K, double e, double f0, double f, double J);
NondimSpherical second_order_correction(const YAConstants& K, double e, double f0, double f);

/// First-order plus second-order solution from an initial normalized state.
/// `J` must equal the integral of df/k^2 from f0 to f (see j_integral); the
/// four-argument overload computes it.
NondimSpherical propagate_second_order(const NondimSpherical& state0, double e, double f0, double f, double J);
NondimSpherical propagate_second_order(const NondimSpherical& state0, double e, double f0, double f);

/// Circular-orbit (quadratic Volterra) limit with the epoch at t = 0 and time
/// normalized by the mean motion. Rates are per radian of n t.
NondimSpherical propagate_circular_qv(const NondimSpherical& state0, double n, double t);

/// Dimensional pipeline: state at the chief's epoch -> normalized spherical at
/// f0 -> second-order solution at the chief's true anomaly after `t` seconds
/// -> back to the input representation.
RelStateCartesian propagate_second_order_dimensional(const RelStateCartesian& state0, const ClassicalElements& chief,
                                                     double t, const GravContext& ctx);
RelStateSpherical propagate_second_order_dimensional(const RelStateSpherical& state0, const ClassicalElements& chief,
                                                     double t, const GravContext& ctx);

}  // namespace relmo
