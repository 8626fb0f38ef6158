#pragma once

// Exact maps between the chief-RTN Cartesian and spherical descriptions of
// relative motion, and their nondimensional (true-anomaly) counterparts.

#include <Eigen/Core>

namespace relmo {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Relative state in the chief's RTN frame. Rates are derivatives taken in the
/// rotating frame, not inertial velocity differences.
struct RelStateCartesian {
  double x = 0.0, y = 0.0, z = 0.0;           // km
  double xdot = 0.0, ydot = 0.0, zdot = 0.0;  // km/s
};

/// Spherical relative coordinates: rho = r_d - r, theta the in-plane angle from
/// the chief's radius vector, phi the elevation out of the chief's orbit plane.
/// Rates are plain time derivatives of these scalars.
struct RelStateSpherical {
  double rho = 0.0, theta = 0.0, phi = 0.0;           // km, rad, rad
  double rhodot = 0.0, thetadot = 0.0, phidot = 0.0;  // km/s, rad/s, rad/s
};

/// Normalized spherical state: rho divided by the chief radius, rates taken
/// with respect to the chief's true anomaly.
struct NondimSpherical {
  double rho = 0.0, theta = 0.0, phi = 0.0;
  double drho = 0.0, dtheta = 0.0, dphi = 0.0;
};

/// Normalized Cartesian state (position over chief radius, true-anomaly rates).
struct NondimCartesian {
  double x = 0.0, y = 0.0, z = 0.0;
  double dx = 0.0, dy = 0.0, dz = 0.0;
};

/// The handful of chief quantities the transforms need.
struct ChiefSnapshot {
  double e = 0.0;
  double p = 0.0;   // semi-latus rectum, km
  double f = 0.0;   // true anomaly, rad
  double mu = 0.0;  // km^3/s^2

  [[nodiscard]] double k() const;
  [[nodiscard]] double radius() const;       // p / k
  [[nodiscard]] double radial_rate() const;  // sqrt(mu/p) e sin f
  [[nodiscard]] double angular_rate() const; // sqrt(mu/p^3) k^2
};

/// k = 1 + e cos f = p / r.
[[nodiscard]] double k_parameter(double e, double f);

RelStateSpherical spherical_from_cartesian(const RelStateCartesian& state, const ChiefSnapshot& chief);
RelStateCartesian cartesian_from_spherical(const RelStateSpherical& state, const ChiefSnapshot& chief);

NondimSpherical nondim_from_dimensional(const RelStateSpherical& state, const ChiefSnapshot& chief);
NondimCartesian nondim_from_dimensional(const RelStateCartesian& state, const ChiefSnapshot& chief);
RelStateSpherical dimensional_from_nondim(const NondimSpherical& state, const ChiefSnapshot& chief);
RelStateCartesian dimensional_from_nondim(const NondimCartesian& state, const ChiefSnapshot& chief);

// Ordering is always (position triple, rate triple).
Vector6d to_vector(const RelStateCartesian& s);
Vector6d to_vector(const RelStateSpherical& s);
Vector6d to_vector(const NondimSpherical& s);
Vector6d to_vector(const NondimCartesian& s);
RelStateCartesian cartesian_from_vector(const Vector6d& v);
RelStateSpherical spherical_from_vector(const Vector6d& v);
NondimSpherical nondim_spherical_from_vector(const Vector6d& v);
NondimCartesian nondim_cartesian_from_vector(const Vector6d& v);

}  // namespace relmo
