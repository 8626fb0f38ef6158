#pragma once

// Unperturbed two-body propagation and the exact relative-state generator
// used as ground truth for every approximate solution.

#include <Eigen/Core>

#include "relmo/frames.hpp"

namespace relmo {

inline constexpr double kEarthMu = 398600.4418;   // km^3/s^2
inline constexpr double kEarthRadius = 6378.137;  // km

struct GravContext {
  double mu = kEarthMu;
};

/// Throws DomainError unless mu > 0.
GravContext make_grav_context(double mu);

enum class AnomalyKind { mean, eccentric, true_anomaly };

/// Osculating Keplerian elements. Angles in radians; the anomaly may be
/// unwrapped (several revolutions) and keeps its revolution count through
/// conversions.
struct ClassicalElements {
  double a = 0.0;     // km
  double e = 0.0;
  double i = 0.0;
  double raan = 0.0;
  double argp = 0.0;
  double anomaly = 0.0;
  AnomalyKind kind = AnomalyKind::true_anomaly;
};

/// Throws DomainError for a <= 0, e outside [0, 1), i outside [0, pi] or
/// non-finite angles.
void validate(const ClassicalElements& el);

struct InertialState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // km
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();  // km/s
};

/// Eccentric anomaly from Kepler's equation M = E - e sin E. Continuous in M
/// across revolutions. Newton from E0 = M + e sin M, bisection if Newton has
/// not converged after 25 iterations.
double solve_kepler(double mean_anomaly, double e);

// Anomaly conversions. All are continuous for unwrapped input.
double eccentric_from_true(double f, double e);
double true_from_eccentric(double E, double e);
double mean_from_eccentric(double E, double e);
double mean_from_true(double f, double e);
double true_from_mean(double M, double e);

/// Value of the element set's anomaly expressed as `kind`.
double anomaly_as(const ClassicalElements& el, AnomalyKind kind);
ClassicalElements anomaly_convert(const ClassicalElements& el, AnomalyKind kind);

double mean_motion(double a, const GravContext& ctx);
double orbital_period(double a, const GravContext& ctx);
double semi_latus_rectum(const ClassicalElements& el);

/// Advances the mean anomaly by n dt; every other element is copied untouched.
/// The result uses the same anomaly kind as the input.
ClassicalElements propagate_elements(const ClassicalElements& el, double dt, const GravContext& ctx);

InertialState elements_to_inertial(const ClassicalElements& el, const GravContext& ctx);

/// Inverse of elements_to_inertial (returns a true anomaly in (-pi, pi]).
/// For a circular orbit argp is set to zero; for an equatorial one raan is.
ClassicalElements inertial_to_elements(const InertialState& state, const GravContext& ctx);

/// Rows are the chief's radial, transverse and normal unit vectors.
Eigen::Matrix3d rtn_basis(const InertialState& chief);

/// Relative state of `deputy` in the RTN frame of `chief`, with velocity taken
/// as the derivative in the rotating frame.
RelStateCartesian relative_state_from_inertial(const InertialState& chief, const InertialState& deputy);

/// Inverse of relative_state_from_inertial.
InertialState deputy_from_relative(const InertialState& chief, const RelStateCartesian& rel);

/// Exact relative state from two element sets at the same epoch.
RelStateCartesian truth_relative_state(const ClassicalElements& chief, const ClassicalElements& deputy,
                                       const GravContext& ctx);

ChiefSnapshot chief_snapshot(const ClassicalElements& chief, const GravContext& ctx);

}  // namespace relmo
