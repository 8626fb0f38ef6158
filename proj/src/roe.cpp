#include "relmo/roe.hpp"

#include <cmath>
#include <sstream>

#include "relmo/errors.hpp"

namespace relmo {

namespace {

constexpr double kMinSinInclination = 1e-12;

double checked_sin_i(double i) {
  const double s = std::sin(i);
  if (std::abs(s) < kMinSinInclination) {
    throw DomainError("relative inclination y-component is undefined for an equatorial chief");
  }
  return s;
}

}  // namespace

ROEVector roe_from_elements(const ClassicalElements& chief, const ClassicalElements& deputy) {
  validate(chief);
  validate(deputy);
  const double sin_i = checked_sin_i(chief.i);
  const double u = anomaly_as(chief, AnomalyKind::mean) + chief.argp;
  const double u_d = anomaly_as(deputy, AnomalyKind::mean) + deputy.argp;
  const double draan = deputy.raan - chief.raan;

  ROEVector roe;
  roe.da = (deputy.a - chief.a) / chief.a;
  roe.dlambda = (u_d - u) + draan * std::cos(chief.i);
  roe.dex = deputy.e * std::cos(deputy.argp) - chief.e * std::cos(chief.argp);
  roe.dey = deputy.e * std::sin(deputy.argp) - chief.e * std::sin(chief.argp);
  roe.dix = deputy.i - chief.i;
  roe.diy = draan * sin_i;
  return roe;
}

ClassicalElements elements_from_roe(const ClassicalElements& chief, const ROEVector& roe) {
  validate(chief);
  const double sin_i = checked_sin_i(chief.i);

  ClassicalElements d;
  d.kind = AnomalyKind::mean;
  d.a = chief.a * (1.0 + roe.da);
  const double ex = roe.dex + chief.e * std::cos(chief.argp);
  const double ey = roe.dey + chief.e * std::sin(chief.argp);
  d.e = std::hypot(ex, ey);
  if (!(d.e < 1.0)) {
    std::ostringstream msg;
    msg << "elements_from_roe: deputy eccentricity " << d.e << " is not elliptic";
    throw DomainError(msg.str());
  }
  // Same-eccentricity-vector deputies keep the chief's perigee, bit for bit.
  d.argp = (ex == chief.e * std::cos(chief.argp) && ey == chief.e * std::sin(chief.argp)) ? chief.argp
                                                                                          : std::atan2(ey, ex);
  d.i = chief.i + roe.dix;
  d.raan = chief.raan + roe.diy / sin_i;
  const double u = anomaly_as(chief, AnomalyKind::mean) + chief.argp;
  const double u_d = u + roe.dlambda - (d.raan - chief.raan) * std::cos(chief.i);
  d.anomaly = u_d - d.argp;
  if (d.argp == chief.argp && u_d == u) {
    // Same mean anomaly as the chief; reuse its representation exactly.
    d.anomaly = anomaly_as(chief, AnomalyKind::mean);
    if (d.e == chief.e) {
      d.anomaly = chief.anomaly;
      d.kind = chief.kind;
    }
  }
  validate(d);
  return d;
}

ROEVector propagate_dlambda(const ROEVector& roe0, double n, double t, int order) {
  if (order != 1 && order != 2) throw DomainError("propagate_dlambda: order must be 1 or 2");
  ROEVector out = roe0;
  const double nt = n * t;
  out.dlambda = roe0.dlambda - 1.5 * roe0.da * nt;
  if (order == 2) out.dlambda += 15.0 / 8.0 * roe0.da * roe0.da * nt;
  return out;
}

double exact_dlambda_drift(double da, double n, double t) {
  return (std::pow(1.0 + da, -1.5) - 1.0) * n * t;
}

RelStateCartesian roe_to_relative_state_exact(const ClassicalElements& chief, const ROEVector& roe,
                                              const GravContext& ctx) {
  return truth_relative_state(chief, elements_from_roe(chief, roe), ctx);
}

Vector6d to_vector(const ROEVector& roe) {
  return (Vector6d() << roe.da, roe.dlambda, roe.dex, roe.dey, roe.dix, roe.diy).finished();
}

ROEVector roe_from_vector(const Vector6d& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

}  // namespace relmo
