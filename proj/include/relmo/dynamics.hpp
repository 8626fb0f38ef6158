#pragma once

// Right-hand sides of the exact and truncated relative-motion equations, and a
// high-accuracy adaptive integrator used to arbitrate the closed forms.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "relmo/frames.hpp"
#include "relmo/kepler.hpp"
#include "relmo/linear.hpp"

namespace relmo {

enum class IndependentVariable { time, true_anomaly, mean_anomaly };

struct OdeSystem {
  std::size_t dimension = 0;
  std::function<void(double x, std::span<const double> y, std::span<double> dydx)> rhs;
  IndependentVariable variable = IndependentVariable::time;
};

struct IntegratorSpec {
  double rtol = 1e-12;
  double atol = 1e-14;
  double max_step = 0.0;  // <= 0 means unbounded
};

/// Throws DomainError unless both tolerances are positive.
void validate(const IntegratorSpec& spec);

struct Trajectory {
  std::vector<double> points;
  std::vector<std::vector<double>> states;  // one per entry of `points`
};

/// Adaptive embedded Runge-Kutta-Fehlberg 7(8) integration from (x0, y0),
/// reporting the state at each sample point. Samples must be monotone in the
/// direction of integration. Throws NumericalError naming the independent
/// variable where stepping broke down.
Trajectory integrate(const OdeSystem& system, std::vector<double> y0, double x0, std::span<const double> samples,
                     const IntegratorSpec& spec = {});

// --- Exact curvilinear dynamics in time --------------------------------------

/// [rho, theta, phi, rhodot, thetadot, phidot, r, rdot, thetadot_c]: the
/// relative spherical state augmented with the chief's radial motion.
using ExactCurvilinearState = std::array<double, 9>;

ExactCurvilinearState make_exact_state(const RelStateSpherical& rel, const ChiefSnapshot& chief);
RelStateSpherical relative_part(const ExactCurvilinearState& s);

/// Unexpanded Keplerian relative dynamics. Throws DomainError when r + rho <= 0
/// or |phi| >= pi/2.
ExactCurvilinearState rhs_exact_curvilinear(const ExactCurvilinearState& s, const GravContext& ctx);
OdeSystem exact_curvilinear_system(const GravContext& ctx);

// --- Normalized systems in true anomaly --------------------------------------
// States are (position triple, rate triple) and rates are d/df.

/// Second-order spherical equations (linear part plus quadratic terms).
Vector6d rhs_second_order_curvilinear(const Vector6d& x, double f, double e);
/// Second-order Cartesian equations.
Vector6d rhs_second_order_cartesian(const Vector6d& x, double f, double e);
/// Tschauner-Hempel linear equations (same form for both coordinate sets).
Vector6d rhs_th_linear(const Vector6d& x, double f, double e);

OdeSystem second_order_curvilinear_system(double e);
OdeSystem second_order_cartesian_system(double e);
OdeSystem th_linear_system(double e);

/// Linear system satisfied by the second-order correction: the first-order
/// solution for `K` (epoch f0) substituted into the quadratic terms, with the
/// correction's own linear terms on the left.
OdeSystem second_order_perturbation_system(const YAConstants& K, double e, double f0);

// --- Slightly-eccentric first-order equations --------------------------------

enum class EccentricVariant { original, corrected };

/// Leading-order-in-e spherical equations with mean anomaly M as the
/// independent variable (unit mean motion, lengths over the chief semimajor
/// axis). The variants differ only in the coefficient of dr' cos M in the
/// theta equation: -4e (original) versus -6e (corrected).
Vector6d rhs_slightly_eccentric(const Vector6d& x, double M, double e, EccentricVariant variant);
OdeSystem slightly_eccentric_system(double e, EccentricVariant variant);

}  // namespace relmo
