#pragma once

// First-order relative motion: the Yamanaka-Ankersen solution of the
// Tschauner-Hempel equations (valid unchanged for Cartesian and spherical
// normalized coordinates) and the Clohessy-Wiltshire circular-orbit solution.

#include <Eigen/Core>

#include "relmo/frames.hpp"

namespace relmo {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// Integration constants K1..K6 of the first-order solution. They also
/// parameterize the second-order solution.
struct YAConstants {
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0, k5 = 0.0, k6 = 0.0;
};

struct TrueAnomalyEpoch {
  double f0 = 0.0;
  double k0 = 1.0;  // 1 + e cos f0
};

TrueAnomalyEpoch make_epoch(double e, double f0);

/// J = integral of df / k^2 from f0 to f. Evaluated through Kepler's equation,
/// so it equals sqrt(mu/p^3) (t - t0) exactly and works for unwrapped f.
double j_integral(double e, double f0, double f);

/// J from elapsed time: sqrt(mu / p^3) dt.
double j_from_time(double dt, double mu, double p);

/// Fundamental matrix mapping [K1..K6] to the normalized state at (f, J).
Matrix6d ya_fundamental_matrix(double e, double f, double J);

/// Closed-form inverse of the fundamental matrix at the epoch (J = 0).
/// Throws DomainError for e >= 1.
Matrix6d ya_inverse_at_epoch(double e, double f0);

YAConstants ya_constants_from_state(const Vector6d& state0, double e, double f0);
YAConstants ya_constants_from_state(const NondimSpherical& state0, double e, double f0);

Vector6d ya_state_from_constants(const YAConstants& K, double e, double f, double J);
/// Convenience overload computing J from (f0, f).
Vector6d ya_state_between(const YAConstants& K, double e, double f0, double f);

/// Curvilinear interpretation (rho~, theta, phi).
NondimSpherical ya_propagate(const NondimSpherical& state0, double e, double f0, double f);
NondimSpherical ya_propagate(const NondimSpherical& state0, double e, double f0, double f, double J);
/// Rectilinear interpretation (x~, y~, z~).
NondimCartesian ya_propagate(const NondimCartesian& state0, double e, double f0, double f);
NondimCartesian ya_propagate(const NondimCartesian& state0, double e, double f0, double f, double J);

/// Clohessy-Wiltshire closed form for a generic (radial, along-track,
/// cross-track) state with rates in the same units per second.
Vector6d cw_propagate(const Vector6d& state0, double n, double t);
RelStateCartesian cw_propagate(const RelStateCartesian& state0, double n, double t);

Vector6d to_vector(const YAConstants& K);
YAConstants ya_constants_from_vector(const Vector6d& v);

}  // namespace relmo
