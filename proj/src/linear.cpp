#include "relmo/linear.hpp"

#include <cmath>
#include <sstream>

#include "relmo/errors.hpp"
#include "relmo/kepler.hpp"

namespace relmo {

namespace {

void require_elliptic(double e, const char* where) {
  if (!(e >= 0.0 && e < 1.0)) {
    std::ostringstream msg;
    msg << where << ": eccentricity " << e << " makes the 1 - e^2 terms singular";
    throw DomainError(msg.str());
  }
}

}  // namespace

TrueAnomalyEpoch make_epoch(double e, double f0) { return {f0, k_parameter(e, f0)}; }

double j_integral(double e, double f0, double f) {
  require_elliptic(e, "j_integral");
  if (f == f0) return 0.0;
  const double q = 1.0 - e * e;
  return (mean_from_true(f, e) - mean_from_true(f0, e)) / (q * std::sqrt(q));
}

double j_from_time(double dt, double mu, double p) { return std::sqrt(mu / (p * p * p)) * dt; }

Matrix6d ya_fundamental_matrix(double e, double f, double J) {
  const double s = std::sin(f), c = std::cos(f);
  const double k = 1.0 + e * c;
  const double ks_p = c + e * std::cos(2.0 * f);     // (k sin f)'
  const double kc_p = -(s + e * std::sin(2.0 * f));  // (k cos f)'

  Matrix6d m = Matrix6d::Zero();
  m(0, 0) = 1.0 - 1.5 * e * k * J * s;
  m(0, 1) = k * s;
  m(0, 2) = k * c;

  m(1, 0) = -1.5 * k * k * J;
  m(1, 1) = (1.0 + k) * c;
  m(1, 2) = -(1.0 + k) * s;
  m(1, 3) = 1.0;

  m(2, 4) = s;
  m(2, 5) = c;

  m(3, 0) = -1.5 * e * (ks_p * J + s / k);
  m(3, 1) = ks_p;
  m(3, 2) = kc_p;

  m(4, 0) = 1.5 * (2.0 * e * k * J * s - 1.0);
  m(4, 1) = -2.0 * k * s;
  m(4, 2) = e - 2.0 * k * c;

  m(5, 4) = c;
  m(5, 5) = -s;
  return m;
}

Matrix6d ya_inverse_at_epoch(double e, double f0) {
  require_elliptic(e, "ya_inverse_at_epoch");
  const double s = std::sin(f0), c = std::cos(f0);
  const double k0 = 1.0 + e * c;
  const double q = 1.0 - e * e;

  Matrix6d m = Matrix6d::Zero();
  m(0, 0) = (6.0 * k0 + 2.0 * e * e - 2.0) / q;
  m(0, 3) = 2.0 * e * k0 * s / q;
  m(0, 4) = 2.0 * k0 * k0 / q;

  m(1, 0) = -3.0 * (1.0 + e * e / k0) * s / q;
  m(1, 3) = (k0 * c - 2.0 * e) / q;
  m(1, 4) = -(1.0 + k0) / q * s;

  m(2, 0) = -3.0 * (e + c) / q;
  m(2, 3) = -k0 * s / q;
  m(2, 4) = -(e + (1.0 + k0) * c) / q;

  m(3, 0) = -3.0 * e * (1.0 + 1.0 / k0) * s / q;
  m(3, 1) = 1.0;
  m(3, 3) = (e * k0 * c - 2.0) / q;
  m(3, 4) = -e * (1.0 + k0) / q * s;

  m(4, 2) = s;
  m(4, 5) = c;

  m(5, 2) = c;
  m(5, 5) = -s;
  return m;
}

Vector6d to_vector(const YAConstants& K) { return (Vector6d() << K.k1, K.k2, K.k3, K.k4, K.k5, K.k6).finished(); }

YAConstants ya_constants_from_vector(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

YAConstants ya_constants_from_state(const Vector6d& state0, double e, double f0) {
  return ya_constants_from_vector(ya_inverse_at_epoch(e, f0) * state0);
}

YAConstants ya_constants_from_state(const NondimSpherical& state0, double e, double f0) {
  return ya_constants_from_state(to_vector(state0), e, f0);
}

Vector6d ya_state_from_constants(const YAConstants& K, double e, double f, double J) {
  return ya_fundamental_matrix(e, f, J) * to_vector(K);
}

Vector6d ya_state_between(const YAConstants& K, double e, double f0, double f) {
  return ya_state_from_constants(K, e, f, j_integral(e, f0, f));
}

NondimSpherical ya_propagate(const NondimSpherical& state0, double e, double f0, double f, double J) {
  if (f == f0 && J == 0.0) return state0;
  const YAConstants K = ya_constants_from_state(to_vector(state0), e, f0);
  return nondim_spherical_from_vector(ya_state_from_constants(K, e, f, J));
}

NondimSpherical ya_propagate(const NondimSpherical& state0, double e, double f0, double f) {
  return ya_propagate(state0, e, f0, f, j_integral(e, f0, f));
}

NondimCartesian ya_propagate(const NondimCartesian& state0, double e, double f0, double f, double J) {
  if (f == f0 && J == 0.0) return state0;
  const YAConstants K = ya_constants_from_state(to_vector(state0), e, f0);
  return nondim_cartesian_from_vector(ya_state_from_constants(K, e, f, J));
}

NondimCartesian ya_propagate(const NondimCartesian& state0, double e, double f0, double f) {
  return ya_propagate(state0, e, f0, f, j_integral(e, f0, f));
}

Vector6d cw_propagate(const Vector6d& s0, double n, double t) {
  if (t == 0.0) return s0;
  const double nt = n * t;
  const double s = std::sin(nt), c = std::cos(nt);
  const double x0 = s0[0], y0 = s0[1], z0 = s0[2];
  const double vx0 = s0[3], vy0 = s0[4], vz0 = s0[5];
  Vector6d out;
  out[0] = (4.0 - 3.0 * c) * x0 + s / n * vx0 + 2.0 / n * (1.0 - c) * vy0;
  out[1] = 6.0 * (s - nt) * x0 + y0 - 2.0 / n * (1.0 - c) * vx0 + (4.0 * s - 3.0 * nt) / n * vy0;
  out[2] = c * z0 + s / n * vz0;
  out[3] = 3.0 * n * s * x0 + c * vx0 + 2.0 * s * vy0;
  out[4] = -6.0 * n * (1.0 - c) * x0 - 2.0 * s * vx0 + (4.0 * c - 3.0) * vy0;
  out[5] = -n * s * z0 + c * vz0;
  return out;
}

RelStateCartesian cw_propagate(const RelStateCartesian& state0, double n, double t) {
  return cartesian_from_vector(cw_propagate(to_vector(state0), n, t));
}

}  // namespace relmo
