#include "relmo/dynamics.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "relmo/errors.hpp"

namespace relmo {

namespace odeint = boost::numeric::odeint;

void validate(const IntegratorSpec& spec) {
  if (!(spec.rtol > 0.0) || !(spec.atol > 0.0)) {
    throw DomainError("integrator tolerances must be positive");
  }
}

Trajectory integrate(const OdeSystem& system, std::vector<double> y0, double x0, std::span<const double> samples,
                     const IntegratorSpec& spec) {
  validate(spec);
  if (y0.size() != system.dimension) throw DomainError("integrate: initial state has the wrong dimension");

  Trajectory out;
  out.points.assign(samples.begin(), samples.end());
  out.states.reserve(samples.size());
  if (samples.empty()) return out;

  const double direction = samples.back() >= x0 ? 1.0 : -1.0;
  std::vector<double> times;
  times.reserve(samples.size() + 1);
  times.push_back(x0);
  for (double s : samples) {
    if (direction * (s - times.back()) < 0.0) throw DomainError("integrate: sample points are not monotone");
    times.push_back(s);
  }

  using State = std::vector<double>;
  auto rhs = [&system](const State& y, State& dydx, double x) {
    system.rhs(x, std::span<const double>(y), std::span<double>(dydx));
    for (double v : dydx) {
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrate: non-finite derivative at x = " << x << " (step size underflow or singularity)";
        throw NumericalError(msg.str());
      }
    }
  };

  // Observer sees the initial time first; skip that call.
  bool first = true;
  auto observer = [&](const State& y, double) {
    if (first) {
      first = false;
      return;
    }
    out.states.push_back(y);
  };

  const double span = std::abs(samples.back() - x0);
  double dt = direction * std::max(span, 1e-300) * 1e-3;
  if (spec.max_step > 0.0 && std::abs(dt) > spec.max_step) dt = direction * spec.max_step;

  using Stepper = odeint::runge_kutta_fehlberg78<State>;
  try {
    if (spec.max_step > 0.0) {
      auto stepper = odeint::make_controlled(spec.atol, spec.rtol, spec.max_step, Stepper());
      odeint::integrate_times(stepper, rhs, y0, times.begin(), times.end(), dt, observer,
                              odeint::max_step_checker(1'000'000));
    } else {
      auto stepper = odeint::make_controlled(spec.atol, spec.rtol, Stepper());
      odeint::integrate_times(stepper, rhs, y0, times.begin(), times.end(), dt, observer,
                              odeint::max_step_checker(1'000'000));
    }
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& ex) {
    std::ostringstream msg;
    msg.precision(17);
    const double where = out.states.empty() ? x0 : out.points[out.states.size() - 1];
    msg << "integrate: stepping failed after x = " << where << " (" << ex.what() << ")";
    throw NumericalError(msg.str());
  }
  if (out.states.size() != samples.size()) {
    throw NumericalError("integrate: integrator returned an incomplete trajectory");
  }
  return out;
}

ExactCurvilinearState make_exact_state(const RelStateSpherical& rel, const ChiefSnapshot& chief) {
  return {rel.rho, rel.theta, rel.phi, rel.rhodot, rel.thetadot, rel.phidot,
          chief.radius(), chief.radial_rate(), chief.angular_rate()};
}

RelStateSpherical relative_part(const ExactCurvilinearState& s) { return {s[0], s[1], s[2], s[3], s[4], s[5]}; }

ExactCurvilinearState rhs_exact_curvilinear(const ExactCurvilinearState& s, const GravContext& ctx) {
  const double rho = s[0], phi = s[2];
  const double rhodot = s[3], thetadot = s[4], phidot = s[5];
  const double r = s[6], rdot = s[7], wc = s[8];
  const double rr = r + rho;
  if (!(rr > 0.0) || !(std::abs(phi) < 0.5 * std::numbers::pi)) {
    std::ostringstream msg;
    msg << "rhs_exact_curvilinear: state outside domain (r + rho = " << rr << ", phi = " << phi << ")";
    throw DomainError(msg.str());
  }

  const double rddot = r * wc * wc - ctx.mu / (r * r);
  const double wcdot = -2.0 * rdot * wc / r;
  const double w = thetadot + wc;
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double radial_ratio = (rdot + rhodot) / rr;

  ExactCurvilinearState d{};
  d[0] = rhodot;
  d[1] = thetadot;
  d[2] = phidot;
  d[3] = -rddot - ctx.mu / (rr * rr) + rr * (phidot * phidot + w * w * cp * cp);
  d[4] = -wcdot + 2.0 * w * phidot * std::tan(phi) - 2.0 * radial_ratio * w;
  d[5] = -2.0 * radial_ratio * phidot - w * w * cp * sp;
  d[6] = rdot;
  d[7] = rddot;
  d[8] = wcdot;
  return d;
}

OdeSystem exact_curvilinear_system(const GravContext& ctx) {
  return {9,
          [ctx](double, std::span<const double> y, std::span<double> dydx) {
            ExactCurvilinearState s;
            std::copy(y.begin(), y.end(), s.begin());
            const ExactCurvilinearState d = rhs_exact_curvilinear(s, ctx);
            std::copy(d.begin(), d.end(), dydx.begin());
          },
          IndependentVariable::time};
}

Vector6d rhs_th_linear(const Vector6d& x, double f, double e) {
  const double k = k_parameter(e, f);
  Vector6d d;
  d << x[3], x[4], x[5], 2.0 * x[4] + 3.0 / k * x[0], -2.0 * x[3], -x[2];
  return d;
}

Vector6d rhs_second_order_curvilinear(const Vector6d& x, double f, double e) {
  const double k = k_parameter(e, f);
  const double rho = x[0], phi = x[2], drho = x[3], dtheta = x[4], dphi = x[5];
  Vector6d d = rhs_th_linear(x, f, e);
  d[3] += -3.0 / k * rho * rho + 2.0 * rho * dtheta + dphi * dphi + dtheta * dtheta - phi * phi;
  d[4] += -2.0 * drho * dtheta + 2.0 * dphi * phi + 2.0 * rho * drho;
  d[5] += -2.0 * dtheta * phi - 2.0 * drho * dphi;
  return d;
}

Vector6d rhs_second_order_cartesian(const Vector6d& x, double f, double e) {
  const double k = k_parameter(e, f);
  Vector6d d = rhs_th_linear(x, f, e);
  d[3] += -3.0 / k * x[0] * x[0] + 1.5 / k * (x[1] * x[1] + x[2] * x[2]);
  d[4] += 3.0 / k * x[0] * x[1];
  d[5] += 3.0 / k * x[0] * x[2];
  return d;
}

namespace {

OdeSystem wrap6(std::function<Vector6d(const Vector6d&, double)> fn, IndependentVariable var) {
  return {6,
          [fn = std::move(fn)](double x, std::span<const double> y, std::span<double> dydx) {
            const Vector6d d = fn(Eigen::Map<const Vector6d>(y.data()), x);
            std::copy(d.data(), d.data() + 6, dydx.begin());
          },
          var};
}

}  // namespace

OdeSystem second_order_curvilinear_system(double e) {
  return wrap6([e](const Vector6d& x, double f) { return rhs_second_order_curvilinear(x, f, e); },
               IndependentVariable::true_anomaly);
}

OdeSystem second_order_cartesian_system(double e) {
  return wrap6([e](const Vector6d& x, double f) { return rhs_second_order_cartesian(x, f, e); },
               IndependentVariable::true_anomaly);
}

OdeSystem th_linear_system(double e) {
  return wrap6([e](const Vector6d& x, double f) { return rhs_th_linear(x, f, e); },
               IndependentVariable::true_anomaly);
}

OdeSystem second_order_perturbation_system(const YAConstants& K, double e, double f0) {
  return wrap6(
      [K, e, f0](const Vector6d& x2, double f) {
        const Vector6d x1 = ya_state_between(K, e, f0, f);
        const double rho = x1[0], phi = x1[2], drho = x1[3], dtheta = x1[4], dphi = x1[5];
        const double k = k_parameter(e, f);
        Vector6d d = rhs_th_linear(x2, f, e);
        d[3] += -3.0 / k * rho * rho + 2.0 * rho * dtheta + dphi * dphi + dtheta * dtheta - phi * phi;
        d[4] += -2.0 * drho * dtheta + 2.0 * dphi * phi + 2.0 * rho * drho;
        d[5] += -2.0 * dtheta * phi - 2.0 * drho * dphi;
        return d;
      },
      IndependentVariable::true_anomaly);
}

Vector6d rhs_slightly_eccentric(const Vector6d& x, double M, double e, EccentricVariant variant) {
  const double dr = x[0], dphi = x[2], ddr = x[3], ddtheta = x[4], ddphi = x[5];
  const double cM = std::cos(M), sM = std::sin(M);
  const double coupling = variant == EccentricVariant::corrected ? 6.0 : 4.0;
  Vector6d d;
  d[0] = ddr;
  d[1] = ddtheta;
  d[2] = ddphi;
  d[3] = 2.0 * ddtheta + 3.0 * dr + e * cM * (10.0 * dr + 2.0 * ddtheta);
  d[4] = -2.0 * ddr + e * sM * (2.0 * dr - 2.0 * ddtheta) - coupling * e * ddr * cM;
  d[5] = -dphi - 4.0 * e * dphi * cM - 2.0 * e * ddphi * sM;
  return d;
}

OdeSystem slightly_eccentric_system(double e, EccentricVariant variant) {
  return wrap6([e, variant](const Vector6d& x, double M) { return rhs_slightly_eccentric(x, M, e, variant); },
               IndependentVariable::mean_anomaly);
}

}  // namespace relmo
