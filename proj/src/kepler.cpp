#include "relmo/kepler.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "relmo/errors.hpp"

namespace relmo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kNewtonIterations = 25;
constexpr double kKeplerTolerance = 1e-13;

void require_elliptic(double e, const char* where) {
  if (!(e >= 0.0 && e < 1.0)) {
    std::ostringstream msg;
    msg << where << ": eccentricity " << e << " outside [0, 1)";
    throw DomainError(msg.str());
  }
}

// e / (1 + sqrt(1 - e^2)); lets f - E be written as a smooth periodic function.
double beta(double e) { return e / (1.0 + std::sqrt(1.0 - e * e)); }

double kepler_residual(double E, double e, double M) { return E - e * std::sin(E) - M; }

Eigen::Matrix3d perifocal_to_inertial(double raan, double i, double argp) {
  return (Eigen::AngleAxisd(raan, Eigen::Vector3d::UnitZ()) * Eigen::AngleAxisd(i, Eigen::Vector3d::UnitX()) *
          Eigen::AngleAxisd(argp, Eigen::Vector3d::UnitZ()))
      .toRotationMatrix();
}

double wrap_pi(double angle) { return std::remainder(angle, kTwoPi); }

}  // namespace

GravContext make_grav_context(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw DomainError("gravitational parameter must be positive and finite");
  }
  return GravContext{mu};
}

void validate(const ClassicalElements& el) {
  if (!(el.a > 0.0) || !std::isfinite(el.a)) throw DomainError("semimajor axis must be positive");
  require_elliptic(el.e, "ClassicalElements");
  if (!(el.i >= 0.0 && el.i <= std::numbers::pi)) throw DomainError("inclination outside [0, pi]");
  if (!std::isfinite(el.raan) || !std::isfinite(el.argp) || !std::isfinite(el.anomaly)) {
    throw DomainError("non-finite angle in element set");
  }
}

double solve_kepler(double mean_anomaly, double e) {
  require_elliptic(e, "solve_kepler");
  if (!std::isfinite(mean_anomaly)) throw DomainError("solve_kepler: mean anomaly is not finite");

  const double revs = std::floor((mean_anomaly + std::numbers::pi) / kTwoPi);
  const double M = mean_anomaly - revs * kTwoPi;  // [-pi, pi)

  double E = M + e * std::sin(M);
  bool converged = false;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const double step = kepler_residual(E, e, M) / (1.0 - e * std::cos(E));
    E -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(E))) {
      converged = true;
      break;
    }
  }

  if (!converged || !(std::abs(kepler_residual(E, e, M)) < kKeplerTolerance)) {
    // g(E) = E - e sin E - M is monotone on [-pi, pi] with a sign change.
    double lo = -std::numbers::pi, hi = std::numbers::pi;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (kepler_residual(mid, e, M) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    E = 0.5 * (lo + hi);
    if (!(std::abs(kepler_residual(E, e, M)) < kKeplerTolerance)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "solve_kepler: no convergence for M = " << mean_anomaly << ", e = " << e;
      throw NumericalError(msg.str());
    }
  }
  return E + revs * kTwoPi;
}

double eccentric_from_true(double f, double e) {
  const double b = beta(e);
  return f - 2.0 * std::atan(b * std::sin(f) / (1.0 + b * std::cos(f)));
}

double true_from_eccentric(double E, double e) {
  const double b = beta(e);
  return E + 2.0 * std::atan(b * std::sin(E) / (1.0 - b * std::cos(E)));
}

double mean_from_eccentric(double E, double e) { return E - e * std::sin(E); }

double mean_from_true(double f, double e) { return mean_from_eccentric(eccentric_from_true(f, e), e); }

double true_from_mean(double M, double e) { return true_from_eccentric(solve_kepler(M, e), e); }

double anomaly_as(const ClassicalElements& el, AnomalyKind kind) {
  if (kind == el.kind) return el.anomaly;
  double E = 0.0;
  switch (el.kind) {
    case AnomalyKind::mean: E = solve_kepler(el.anomaly, el.e); break;
    case AnomalyKind::eccentric: E = el.anomaly; break;
    case AnomalyKind::true_anomaly: E = eccentric_from_true(el.anomaly, el.e); break;
  }
  switch (kind) {
    case AnomalyKind::mean: return mean_from_eccentric(E, el.e);
    case AnomalyKind::eccentric: return E;
    case AnomalyKind::true_anomaly: return true_from_eccentric(E, el.e);
  }
  return E;
}

ClassicalElements anomaly_convert(const ClassicalElements& el, AnomalyKind kind) {
  validate(el);
  ClassicalElements out = el;
  out.anomaly = anomaly_as(el, kind);
  out.kind = kind;
  return out;
}

double mean_motion(double a, const GravContext& ctx) { return std::sqrt(ctx.mu / (a * a * a)); }

double orbital_period(double a, const GravContext& ctx) { return kTwoPi / mean_motion(a, ctx); }

double semi_latus_rectum(const ClassicalElements& el) { return el.a * (1.0 - el.e * el.e); }

ClassicalElements propagate_elements(const ClassicalElements& el, double dt, const GravContext& ctx) {
  validate(el);
  if (dt == 0.0) return el;
  ClassicalElements mean_el = el;
  mean_el.anomaly = anomaly_as(el, AnomalyKind::mean) + mean_motion(el.a, ctx) * dt;
  mean_el.kind = AnomalyKind::mean;
  ClassicalElements out = el;
  out.anomaly = anomaly_as(mean_el, el.kind);
  return out;
}

InertialState elements_to_inertial(const ClassicalElements& el, const GravContext& ctx) {
  validate(el);
  const double f = anomaly_as(el, AnomalyKind::true_anomaly);
  const double p = semi_latus_rectum(el);
  const double r = p / (1.0 + el.e * std::cos(f));
  const double vs = std::sqrt(ctx.mu / p);
  const Eigen::Vector3d r_pf(r * std::cos(f), r * std::sin(f), 0.0);
  const Eigen::Vector3d v_pf(-vs * std::sin(f), vs * (el.e + std::cos(f)), 0.0);
  const Eigen::Matrix3d R = perifocal_to_inertial(el.raan, el.i, el.argp);
  return {R * r_pf, R * v_pf};
}

ClassicalElements inertial_to_elements(const InertialState& s, const GravContext& ctx) {
  const Eigen::Vector3d& r = s.position;
  const Eigen::Vector3d& v = s.velocity;
  const double rn = r.norm();
  if (!(rn > 0.0)) throw DomainError("inertial_to_elements: zero position vector");
  const Eigen::Vector3d h = r.cross(v);
  const double hn = h.norm();
  if (!(hn > 0.0)) throw DomainError("inertial_to_elements: rectilinear orbit");

  ClassicalElements el;
  el.kind = AnomalyKind::true_anomaly;
  el.a = 1.0 / (2.0 / rn - v.squaredNorm() / ctx.mu);
  const Eigen::Vector3d evec = ((v.squaredNorm() - ctx.mu / rn) * r - r.dot(v) * v) / ctx.mu;
  el.e = evec.norm();
  require_elliptic(el.e, "inertial_to_elements");
  el.i = std::acos(std::clamp(h.z() / hn, -1.0, 1.0));

  const double node_norm = std::hypot(h.x(), h.y());
  el.raan = node_norm > 1e-12 * hn ? std::atan2(h.x(), -h.y()) : 0.0;
  const Eigen::Vector3d what = h / hn;
  const Eigen::Vector3d node(std::cos(el.raan), std::sin(el.raan), 0.0);
  const Eigen::Vector3d in_plane = what.cross(node);

  const double u = std::atan2(r.dot(in_plane), r.dot(node));
  el.argp = el.e > 1e-14 ? std::atan2(evec.dot(in_plane), evec.dot(node)) : 0.0;
  el.anomaly = wrap_pi(u - el.argp);
  if (el.anomaly <= -std::numbers::pi) el.anomaly += kTwoPi;
  return el;
}

Eigen::Matrix3d rtn_basis(const InertialState& chief) {
  const Eigen::Vector3d rhat = chief.position.normalized();
  const Eigen::Vector3d nhat = chief.position.cross(chief.velocity).normalized();
  Eigen::Matrix3d C;
  C.row(0) = rhat;
  C.row(1) = nhat.cross(rhat);
  C.row(2) = nhat;
  return C;
}

namespace {

// Angular velocity of the RTN frame for unperturbed motion, inertial components.
Eigen::Vector3d frame_rate(const InertialState& chief) {
  return chief.position.cross(chief.velocity) / chief.position.squaredNorm();
}

}  // namespace

RelStateCartesian relative_state_from_inertial(const InertialState& chief, const InertialState& deputy) {
  const Eigen::Matrix3d C = rtn_basis(chief);
  const Eigen::Vector3d dr = deputy.position - chief.position;
  const Eigen::Vector3d dv = deputy.velocity - chief.velocity - frame_rate(chief).cross(dr);
  const Eigen::Vector3d p = C * dr;
  const Eigen::Vector3d w = C * dv;
  return {p.x(), p.y(), p.z(), w.x(), w.y(), w.z()};
}

InertialState deputy_from_relative(const InertialState& chief, const RelStateCartesian& rel) {
  const Eigen::Matrix3d Ct = rtn_basis(chief).transpose();
  const Eigen::Vector3d dr = Ct * Eigen::Vector3d(rel.x, rel.y, rel.z);
  const Eigen::Vector3d dv = Ct * Eigen::Vector3d(rel.xdot, rel.ydot, rel.zdot) + frame_rate(chief).cross(dr);
  return {chief.position + dr, chief.velocity + dv};
}

RelStateCartesian truth_relative_state(const ClassicalElements& chief, const ClassicalElements& deputy,
                                       const GravContext& ctx) {
  return relative_state_from_inertial(elements_to_inertial(chief, ctx), elements_to_inertial(deputy, ctx));
}

ChiefSnapshot chief_snapshot(const ClassicalElements& chief, const GravContext& ctx) {
  validate(chief);
  return {chief.e, semi_latus_rectum(chief), anomaly_as(chief, AnomalyKind::true_anomaly), ctx.mu};
}

}  // namespace relmo
