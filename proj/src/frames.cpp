#include "relmo/frames.hpp"

#include <cmath>
#include <sstream>

#include "relmo/errors.hpp"

namespace relmo {

double k_parameter(double e, double f) { return 1.0 + e * std::cos(f); }

double ChiefSnapshot::k() const { return k_parameter(e, f); }
double ChiefSnapshot::radius() const { return p / k(); }
double ChiefSnapshot::radial_rate() const { return std::sqrt(mu / p) * e * std::sin(f); }
double ChiefSnapshot::angular_rate() const {
  const double kk = k();
  return std::sqrt(mu / (p * p * p)) * kk * kk;
}

namespace {

// cos(phi) cos(theta) - 1 without cancellation near the origin.
double cos_product_minus_one(double theta, double phi) {
  const double st = std::sin(0.5 * theta);
  const double sp = std::sin(0.5 * phi);
  return -2.0 * std::cos(phi) * st * st - 2.0 * sp * sp;
}

}  // namespace

RelStateSpherical spherical_from_cartesian(const RelStateCartesian& s, const ChiefSnapshot& chief) {
  const double r = chief.radius();
  const double rdot = chief.radial_rate();
  const double rx = r + s.x;
  const double planar2 = rx * rx + s.y * s.y;
  const double dist2 = planar2 + s.z * s.z;
  if (!(dist2 > 0.0)) {
    throw DomainError("spherical_from_cartesian: deputy coincides with the central body");
  }
  const double dist = std::sqrt(dist2);

  RelStateSpherical out;
  // sqrt((r+x)^2 + y^2 + z^2) - r, rearranged to avoid cancellation.
  out.rho = (2.0 * r * s.x + s.x * s.x + s.y * s.y + s.z * s.z) / (dist + r);
  const double rr = r + out.rho;
  if (std::abs(s.z) > rr) {
    std::ostringstream msg;
    msg << "spherical_from_cartesian: |z| = " << std::abs(s.z) << " exceeds r + rho = " << rr;
    throw DomainError(msg.str());
  }
  out.theta = std::atan2(s.y, rx);
  out.phi = std::asin(s.z / rr);

  const double vx = rdot + s.xdot;
  out.rhodot = (rx * vx + s.y * s.ydot + s.z * s.zdot) / rr - rdot;
  out.thetadot = (rx * s.ydot - s.y * vx) / planar2;
  out.phidot = (rr * s.zdot - s.z * (rdot + out.rhodot)) / (rr * std::sqrt(planar2));
  return out;
}

RelStateCartesian cartesian_from_spherical(const RelStateSpherical& s, const ChiefSnapshot& chief) {
  const double r = chief.radius();
  const double rdot = chief.radial_rate();
  const double rr = r + s.rho;
  const double ct = std::cos(s.theta), st = std::sin(s.theta);
  const double cp = std::cos(s.phi), sp = std::sin(s.phi);
  const double cpm1 = cos_product_minus_one(s.theta, s.phi);

  RelStateCartesian out;
  out.x = s.rho * cp * ct + r * cpm1;
  out.y = rr * cp * st;
  out.z = rr * sp;
  out.xdot = s.rhodot * cp * ct + rdot * cpm1 - rr * (s.phidot * sp * ct + s.thetadot * cp * st);
  out.ydot = (rdot + s.rhodot) * cp * st - rr * (s.phidot * sp * st - s.thetadot * cp * ct);
  out.zdot = (rdot + s.rhodot) * sp + rr * s.phidot * cp;
  return out;
}

NondimSpherical nondim_from_dimensional(const RelStateSpherical& s, const ChiefSnapshot& chief) {
  const double k = chief.k();
  const double sf = std::sin(chief.f);
  const double time_scale = std::sqrt(chief.p * chief.p * chief.p / chief.mu) / (k * k);
  NondimSpherical out;
  out.rho = s.rho / chief.radius();
  out.theta = s.theta;
  out.phi = s.phi;
  out.drho = -chief.e / chief.p * s.rho * sf + s.rhodot / k * std::sqrt(chief.p / chief.mu);
  out.dtheta = s.thetadot * time_scale;
  out.dphi = s.phidot * time_scale;
  return out;
}

NondimCartesian nondim_from_dimensional(const RelStateCartesian& s, const ChiefSnapshot& chief) {
  const double r = chief.radius();
  const double a = -chief.e / chief.p * std::sin(chief.f);
  const double b = std::sqrt(chief.p / chief.mu) / chief.k();
  return {s.x / r,
          s.y / r,
          s.z / r,
          a * s.x + b * s.xdot,
          a * s.y + b * s.ydot,
          a * s.z + b * s.zdot};
}

RelStateSpherical dimensional_from_nondim(const NondimSpherical& s, const ChiefSnapshot& chief) {
  const double k = chief.k();
  const double rate_scale = k * k * std::sqrt(chief.mu / (chief.p * chief.p * chief.p));
  RelStateSpherical out;
  out.rho = chief.radius() * s.rho;
  out.theta = s.theta;
  out.phi = s.phi;
  out.rhodot = std::sqrt(chief.mu / chief.p) * (chief.e * s.rho * std::sin(chief.f) + k * s.drho);
  out.thetadot = s.dtheta * rate_scale;
  out.phidot = s.dphi * rate_scale;
  return out;
}

RelStateCartesian dimensional_from_nondim(const NondimCartesian& s, const ChiefSnapshot& chief) {
  const double r = chief.radius();
  const double v = std::sqrt(chief.mu / chief.p);
  const double es = chief.e * std::sin(chief.f);
  const double k = chief.k();
  return {r * s.x,
          r * s.y,
          r * s.z,
          v * (es * s.x + k * s.dx),
          v * (es * s.y + k * s.dy),
          v * (es * s.z + k * s.dz)};
}

Vector6d to_vector(const RelStateCartesian& s) {
  return (Vector6d() << s.x, s.y, s.z, s.xdot, s.ydot, s.zdot).finished();
}
Vector6d to_vector(const RelStateSpherical& s) {
  return (Vector6d() << s.rho, s.theta, s.phi, s.rhodot, s.thetadot, s.phidot).finished();
}
Vector6d to_vector(const NondimSpherical& s) {
  return (Vector6d() << s.rho, s.theta, s.phi, s.drho, s.dtheta, s.dphi).finished();
}
Vector6d to_vector(const NondimCartesian& s) {
  return (Vector6d() << s.x, s.y, s.z, s.dx, s.dy, s.dz).finished();
}
RelStateCartesian cartesian_from_vector(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
RelStateSpherical spherical_from_vector(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
NondimSpherical nondim_spherical_from_vector(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
NondimCartesian nondim_cartesian_from_vector(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

}  // namespace relmo
