#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

/// Eccentric anomaly by plain bisection on E - e sin E - M over [lo, hi].
inline double kepler_bisection(double M, double e, double lo, double hi) {
  for (int it = 0; it < 300 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid - e * std::sin(mid) - M < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& g, double a, double b, double tol, int depth = 50) {
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double a0, double b0, double fa, double fm, double fb, double whole, double eps, int d) -> double {
    const double m = 0.5 * (a0 + b0);
    const double lm = 0.5 * (a0 + m), rm = 0.5 * (m + b0);
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a0) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b0 - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) return left + right + (left + right - whole) / 15.0;
    return rec(a0, m, fa, flm, fm, left, 0.5 * eps, d - 1) + rec(m, b0, fm, frm, fb, right, 0.5 * eps, d - 1);
  };
  const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
  return rec(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

/// Stumpff functions for the universal-variable propagator.
inline double stumpff_c(double z) {
  if (z > 1e-8) return (1.0 - std::cos(std::sqrt(z))) / z;
  if (z < -1e-8) return (std::cosh(std::sqrt(-z)) - 1.0) / (-z);
  return 0.5 - z / 24.0 + z * z / 720.0;
}
inline double stumpff_s(double z) {
  if (z > 1e-8) {
    const double s = std::sqrt(z);
    return (s - std::sin(s)) / (s * s * s);
  }
  if (z < -1e-8) {
    const double s = std::sqrt(-z);
    return (std::sinh(s) - s) / (s * s * s);
  }
  return 1.0 / 6.0 - z / 120.0 + z * z / 5040.0;
}

/// Two-body propagation by f and g functions of the universal anomaly.
inline void universal_propagate(const Eigen::Vector3d& r0, const Eigen::Vector3d& v0, double dt, double mu,
                                Eigen::Vector3d& r, Eigen::Vector3d& v) {
  const double r0n = r0.norm();
  const double vr0 = r0.dot(v0) / r0n;
  const double alpha = 2.0 / r0n - v0.squaredNorm() / mu;
  const double smu = std::sqrt(mu);
  double chi = smu * std::abs(alpha) * dt;
  for (int it = 0; it < 100; ++it) {
    const double z = alpha * chi * chi;
    const double F = r0n * vr0 / smu * chi * chi * stumpff_c(z) + (1.0 - alpha * r0n) * chi * chi * chi * stumpff_s(z) +
                     r0n * chi - smu * dt;
    const double dF = r0n * vr0 / smu * chi * (1.0 - alpha * chi * chi * stumpff_s(z)) +
                      (1.0 - alpha * r0n) * chi * chi * stumpff_c(z) + r0n;
    const double step = F / dF;
    chi -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(chi))) break;
  }
  const double z = alpha * chi * chi;
  const double f = 1.0 - chi * chi / r0n * stumpff_c(z);
  const double g = dt - chi * chi * chi / smu * stumpff_s(z);
  r = f * r0 + g * v0;
  const double rn = r.norm();
  const double fdot = smu / (rn * r0n) * (alpha * chi * chi * chi * stumpff_s(z) - chi);
  const double gdot = 1.0 - chi * chi / rn * stumpff_c(z);
  v = fdot * r0 + gdot * v0;
}

/// Deterministic generator for property-style loops.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20241018);
  return gen;
}
inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Fitted slope of log(y) against log(x) by least squares.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lx = std::log(x[j]), ly = std::log(y[j]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
