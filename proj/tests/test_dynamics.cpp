#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <relmo/dynamics.hpp>
#include <relmo/errors.hpp>
#include <relmo/kepler.hpp>
#include <relmo/linear.hpp>

#include <numbers>

using namespace relmo;
constexpr double pi = std::numbers::pi;

TEST_CASE("integrator: constant derivative and harmonic oscillator") {
  OdeSystem ramp{1, [](double, std::span<const double>, std::span<double> d) { d[0] = 2.5; }, {}};
  const std::vector<double> xs{0.5, 1.0, 7.0};
  const auto r = integrate(ramp, {1.0}, 0.0, xs);
  for (std::size_t j = 0; j < xs.size(); ++j) CHECK(std::abs(r.states[j][0] - (1.0 + 2.5 * xs[j])) < 1e-13);

  OdeSystem osc{2, [](double, std::span<const double> y, std::span<double> d) {
                  d[0] = y[1];
                  d[1] = -y[0];
                }, {}};
  std::vector<double> ts;
  for (int j = 1; j <= 10; ++j) ts.push_back(2 * pi * j);
  const auto h = integrate(osc, {1.0, 0.0}, 0.0, ts);
  for (const auto& y : h.states) CHECK(std::abs(std::hypot(y[0], y[1]) - 1.0) < 1e-9);
  CHECK(h.points == ts);
}

TEST_CASE("integrator: failures") {
  CHECK_THROWS_AS(validate(IntegratorSpec{0.0, 1e-14, 0.0}), DomainError);
  OdeSystem blowup{1, [](double, std::span<const double> y, std::span<double> d) { d[0] = y[0] * y[0]; }, {}};
  const std::vector<double> xs{2.0};
  CHECK_THROWS_AS(integrate(blowup, {1.0}, 0.0, xs), NumericalError);
}

TEST_CASE("integrator: two-body against analytic propagation") {
  const GravContext ctx{};
  const ClassicalElements el{9000.0, 0.3, 0.8, 0.2, 0.1, 0.4, AnomalyKind::true_anomaly};
  const auto s0 = elements_to_inertial(el, ctx);
  OdeSystem twobody{6, [&](double, std::span<const double> y, std::span<double> d) {
                      const double r3 = std::pow(std::hypot(y[0], y[1], y[2]), 3);
                      for (int i = 0; i < 3; ++i) {
                        d[i] = y[3 + i];
                        d[3 + i] = -ctx.mu * y[i] / r3;
                      }
                    }, {}};
  const double T = orbital_period(el.a, ctx);
  const std::vector<double> ts{0.3 * T, T};
  const auto traj = integrate(twobody,
                              {s0.position.x(), s0.position.y(), s0.position.z(), s0.velocity.x(), s0.velocity.y(),
                               s0.velocity.z()},
                              0.0, ts, {1e-13, 1e-13, 0.0});
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const auto ref = elements_to_inertial(propagate_elements(el, ts[j], ctx), ctx);
    const Eigen::Vector3d r(traj.states[j][0], traj.states[j][1], traj.states[j][2]);
    CHECK((r - ref.position).norm() < 1e-9 * ref.position.norm());
  }
}

TEST_CASE("exact curvilinear dynamics") {
  const GravContext ctx{};
  SUBCASE("co-located spacecraft") {
    const ChiefSnapshot chief{0.0, 7000.0, 0.3, ctx.mu};
    const auto d = rhs_exact_curvilinear(make_exact_state({}, chief), ctx);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(d[i]) < 1e-18);
  }
  SUBCASE("domain") {
    const ChiefSnapshot chief{0.0, 7000.0, 0.3, ctx.mu};
    CHECK_THROWS_AS(rhs_exact_curvilinear(make_exact_state({-8000.0, 0, 0, 0, 0, 0}, chief), ctx), DomainError);
  }
  SUBCASE("matches Kepler truth over one orbit") {
    const ClassicalElements chief{8500.0, 0.2, 1.0, 0.3, 0.6, 0.2, AnomalyKind::true_anomaly};
    const auto c0 = elements_to_inertial(chief, ctx);
    const RelStateCartesian rel0{2.0, -2.0, 2.0, 1e-3, -5e-4, 2e-4};
    const auto dep = inertial_to_elements(deputy_from_relative(c0, rel0), ctx);
    const auto snap0 = chief_snapshot(chief, ctx);
    const auto y0 = make_exact_state(spherical_from_cartesian(rel0, snap0), snap0);
    const double T = orbital_period(chief.a, ctx);
    std::vector<double> ts;
    for (int j = 1; j <= 8; ++j) ts.push_back(T * j / 8);
    const auto traj = integrate(exact_curvilinear_system(ctx), {y0.begin(), y0.end()}, 0.0, ts);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      ExactCurvilinearState s;
      std::copy(traj.states[j].begin(), traj.states[j].end(), s.begin());
      const auto c = propagate_elements(chief, ts[j], ctx);
      const auto cart = cartesian_from_spherical(relative_part(s), chief_snapshot(c, ctx));
      const auto truth = truth_relative_state(c, propagate_elements(dep, ts[j], ctx), ctx);
      CHECK(std::hypot(cart.x - truth.x, cart.y - truth.y, cart.z - truth.z) < 1e-9);
    }
  }
  SUBCASE("out-of-plane offset oscillates at the orbital rate") {
    const ChiefSnapshot chief{0.0, 7000.0, 0.0, ctx.mu};
    const double phi0 = 1e-4;
    RelStateSpherical rel{};
    rel.phi = phi0;
    const auto y0 = make_exact_state(rel, chief);
    const double T = 2 * pi * std::sqrt(std::pow(7000.0, 3) / ctx.mu);
    const std::vector<double> ts{T / 4, T / 2, T};
    const auto traj = integrate(exact_curvilinear_system(ctx), {y0.begin(), y0.end()}, 0.0, ts);
    CHECK(std::abs(traj.states[0][2]) < 1e-3 * phi0);
    CHECK(std::abs(traj.states[1][2] + phi0) < 1e-3 * phi0);
    CHECK(std::abs(traj.states[2][2] - phi0) < 1e-3 * phi0);
  }
}

TEST_CASE("normalized right-hand sides") {
  for (double e : {0.0, 0.3}) {
    CHECK(rhs_second_order_curvilinear(Vector6d::Zero(), 0.4, e).norm() == 0.0);
    CHECK(rhs_second_order_cartesian(Vector6d::Zero(), 0.4, e).norm() == 0.0);
    CHECK(rhs_th_linear(Vector6d::Zero(), 0.4, e).norm() == 0.0);
  }
  // quadratic terms vanish at second order in the state scale
  Vector6d x;
  x << 0.3, -0.2, 0.1, 0.05, -0.4, 0.2;
  for (auto rhs : {&rhs_second_order_curvilinear, &rhs_second_order_cartesian}) {
    const double d1 = (rhs(1e-3 * x, 0.7, 0.2) - rhs_th_linear(1e-3 * x, 0.7, 0.2)).norm();
    const double d2 = (rhs(5e-4 * x, 0.7, 0.2) - rhs_th_linear(5e-4 * x, 0.7, 0.2)).norm();
    CHECK(d1 > 0.0);
    CHECK(std::abs(d1 / d2 - 4.0) < 1e-6);
  }
  // with x = 0 the out-of-plane Cartesian equation is a pure oscillator
  Vector6d z;
  z << 0.0, 0.02, 0.03, 0.0, 0.01, -0.02;
  CHECK(std::abs(rhs_second_order_cartesian(z, 1.1, 0.0)[5] + 0.03) < 1e-18);
}

namespace {

// Max position error (km) of a normalized model integrated in true anomaly
// against Kepler truth, for an initial Cartesian offset `rel0`.
double normalized_model_error(bool curvilinear, const RelStateCartesian& rel0) {
  const GravContext ctx{};
  const ClassicalElements chief{8000.0, 0.2, 1.0, 0.3, 0.6, 0.0, AnomalyKind::true_anomaly};
  const auto dep = inertial_to_elements(deputy_from_relative(elements_to_inertial(chief, ctx), rel0), ctx);
  const auto snap0 = chief_snapshot(chief, ctx);
  const Vector6d y0 = curvilinear ? to_vector(nondim_from_dimensional(spherical_from_cartesian(rel0, snap0), snap0))
                                  : to_vector(nondim_from_dimensional(rel0, snap0));
  const double T = orbital_period(chief.a, ctx);
  std::vector<double> ts, fs;
  for (int j = 1; j <= 40; ++j) {
    ts.push_back(T * j / 40);
    fs.push_back(anomaly_as(propagate_elements(chief, ts.back(), ctx), AnomalyKind::true_anomaly));
  }
  for (std::size_t j = 1; j < fs.size(); ++j)
    while (fs[j] < fs[j - 1]) fs[j] += 2 * pi;
  const OdeSystem sys = curvilinear ? second_order_curvilinear_system(chief.e) : second_order_cartesian_system(chief.e);
  const auto traj = integrate(sys, {y0.data(), y0.data() + 6}, 0.0, fs);
  double worst = 0.0;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const auto c = propagate_elements(chief, ts[j], ctx);
    const auto snap = chief_snapshot(c, ctx);
    const Vector6d y = Eigen::Map<const Vector6d>(traj.states[j].data());
    const RelStateCartesian m =
        curvilinear ? cartesian_from_spherical(dimensional_from_nondim(nondim_spherical_from_vector(y), snap), snap)
                    : dimensional_from_nondim(nondim_cartesian_from_vector(y), snap);
    const auto truth = truth_relative_state(c, propagate_elements(dep, ts[j], ctx), ctx);
    worst = std::max(worst, std::hypot(m.x - truth.x, m.y - truth.y, m.z - truth.z));
  }
  return worst;
}

}  // namespace

TEST_CASE("second-order models converge cubically") {
  for (bool curvilinear : {true, false}) {
    std::vector<double> s{1.0, 0.5, 0.25}, err;
    for (double k : s) err.push_back(normalized_model_error(curvilinear, {k * 60.0, k * -80.0, k * 40.0, 0, 0, 0}));
    const double p = oracle::loglog_slope(s, err);
    INFO("curvilinear = " << curvilinear << ", order = " << p);
    CHECK(p > 2.6);
    CHECK(p < 3.4);
  }
}

TEST_CASE("slightly eccentric variants") {
  Vector6d x;
  x << 1e-3, 2e-3, -1e-3, 3e-4, -2e-4, 1e-4;
  CHECK(rhs_slightly_eccentric(x, 0.8, 0.0, EccentricVariant::original) ==
        rhs_slightly_eccentric(x, 0.8, 0.0, EccentricVariant::corrected));
  const double e = 0.02, M = 0.8;
  const Vector6d diff = rhs_slightly_eccentric(x, M, e, EccentricVariant::corrected) -
                        rhs_slightly_eccentric(x, M, e, EccentricVariant::original);
  Vector6d expect = Vector6d::Zero();
  expect[4] = -2.0 * e * x[3] * std::cos(M);
  CHECK((diff - expect).cwiseAbs().maxCoeff() < 1e-19);
}
