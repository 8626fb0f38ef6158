#include "relmo/second_order.hpp"

#include <cmath>
#include <sstream>

#include "relmo/errors.hpp"
#include "relmo/jet.hpp"

namespace relmo {

namespace {

void require_elliptic(double e, const char* where) {
  if (!(e >= 0.0 && e < 1.0)) {
    std::ostringstream msg;
    msg << where << ": eccentricity " << e << " makes the 1 - e^2 terms singular";
    throw DomainError(msg.str());
  }
}

template <class S>
struct Positions {
  S rho, theta, phi;
};

// Quadratic part of the solution. Each statement below is one printed line of
// the closed form; S is double or Jet (for the true-anomaly rates).
template <class S>
Positions<S> correction_positions(const YAConstants& K, const QuadCoeffs& c, double e, double f0, const S& f,
                                  const S& J) {
  using std::cos;
  using std::sin;
  const double K1 = K.k1, K2 = K.k2, K3 = K.k3, K5 = K.k5, K6 = K.k6;
  const double q = 1.0 - e * e;
  const double s0 = std::sin(f0), c0 = std::cos(f0);
  const double k0 = 1.0 + e * c0;

  const S s = sin(f), co = cos(f);
  const S k = 1.0 + e * co;
  const S k2 = k * k, k3 = k2 * k;
  const S ekJs = e * k * J * s;

  S rho = c.rho_j * (1.0 - 1.5 * ekJs) + c.rho_s * k * s + c.rho_c * k * co;
  rho += K1 * K1 * (0.25 + 9.0 / 8.0 * k3 * J * J * e * co) - 1.5 * (K1 * K2 * co - K1 * K3 * s) * k3 * J;
  rho += K2 * K2 * ((-0.5 * e * e * s * s + 1.5 * (k - 1.0) + 1.0 / q) * co * co + e * (1.0 + e * e) * co / (2.0 * q));
  rho += K2 * K3 * (e * k2 - (1.0 + k) * co) * k * s / q;
  rho += K3 * K3 * k * (3.0 - k - k2 + k3 - (1.0 + k) * (e * e + co * co)) / (2.0 * q);

  const S cos_shift = (1.0 + k) * co - (1.0 + k0) * c0;
  const S sin_shift = (1.0 + k) * s - (1.0 + k0) * s0;

  S theta = (c.rho_s - K1 * K2) * cos_shift + 1.5 * (K1 * K1 - K1 * K3 * e - c.rho_j) * k2 * J;
  theta += (K1 * K3 - K2 * K2 * e * e * e / (2.0 * q) - c.rho_c) * sin_shift;
  theta += K1 * K1 * (-2.25 * e * k3 * J * J * s) + 3.0 * (K1 * K2 * s + K1 * K3 * co) * k3 * J;
  theta += (K3 * K3 - K2 * K2) * (((co + 2.0 * e) / (2.0 * q) + k * (1.0 + k) * co) * s -
                                   ((c0 + 2.0 * e) / (2.0 * q) + k0 * (1.0 + k0) * c0) * s0);
  theta += K2 * K3 * ((k2 + k2 / q - (1.0 + 2.0 * k + 2.0 * k2) * co * co) -
                      (k0 * k0 + k0 * k0 / q - (1.0 + 2.0 * k0 + 2.0 * k0 * k0) * c0 * c0));
  theta += K3 * K3 * e * (s - s0) + 0.25 * (K6 * K6 - K5 * K5) * (sin(2.0 * f) - std::sin(2.0 * f0)) +
           K5 * K6 * (s * s - s0 * s0);

  const S sin_df = sin(f - f0);
  S phi = 1.5 * (K1 * K6 * s - K1 * K5 * co) * k2 * J + 1.5 * (K1 * K5 * c0 - K1 * K6 * s0) * sin_df;
  phi += 2.0 * ((K2 * K5 - K3 * K6) * c0 - (K2 * K6 + K3 * K5) * s0) * k0 * s0 * sin_df;
  phi += K2 * K5 * cos_shift * co;
  phi -= (K2 * K6 + K3 * K5) * cos_shift * s;
  phi += K3 * K6 * ((1.0 + k) * s * s - e * s0 * s0 * co - 2.0 * s0 * s);

  return {rho, theta, phi};
}

template <class S>
Positions<S> qv_positions(const YAConstants& K, const S& t) {
  using std::cos;
  using std::sin;
  const double K1 = K.k1, K2 = K.k2, K3 = K.k3, K4 = K.k4, K5 = K.k5, K6 = K.k6;
  const S s = sin(t), c = cos(t);
  const S s2 = sin(2.0 * t), c2 = cos(2.0 * t);

  S rho = K1 + K2 * s + K3 * c;
  rho += -1.5 * K1 * K2 * t * c + 1.5 * K1 * K3 * t * s + 0.5 * (K2 * K2 - K3 * K3) * (c2 - 1.0) - K2 * K3 * s2;
  rho += (3.75 * K1 * K1 + 10.0 * K1 * K3 - 2.0 * K2 * K2 + 5.0 * K3 * K3 - K5 * K5 + K6 * K6) * (c - 1.0) +
         (1.5 * K1 * K2 + 2.0 * K2 * K3) * s;

  S theta = K4 + 2.0 * K2 * c - 2.0 * K3 * s - 1.5 * K1 * t;
  theta += (7.5 * (K1 * K1 + 2.0 * K1 * K3 + K3 * K3) - 1.5 * (K2 * K2 + K5 * K5 - K6 * K6)) * t;
  theta += 3.0 * K1 * K2 * t * s + 3.0 * K1 * K3 * t * c + (K1 * K2 + 4.0 * K2 * K3) * (c - 1.0);
  theta += (-7.5 * K1 * K1 - 18.0 * K1 * K3 + 4.0 * K2 * K2 - 10.0 * K3 * K3 + 2.0 * K5 * K5 - 2.0 * K6 * K6) * s;
  theta += 0.25 * (5.0 * K3 * K3 - 5.0 * K2 * K2 + K6 * K6 - K5 * K5) * s2 -
           0.5 * (5.0 * K2 * K3 + K5 * K6) * (c2 - 1.0);

  S phi = K5 * s + K6 * c;
  phi += K2 * K5 + K3 * K6 + 1.5 * K1 * K6 * t * s - 1.5 * K1 * K5 * t * c +
         (1.5 * K1 * K5 + 2.0 * K2 * K6 + 2.0 * K3 * K5) * s;
  phi += -2.0 * K2 * K5 * c - (K2 * K6 + K3 * K5) * s2 + (K2 * K5 - K3 * K6) * c2;

  return {rho, theta, phi};
}

NondimSpherical from_jets(const Positions<Jet>& p) {
  return {p.rho.v, p.theta.v, p.phi.v, p.rho.d, p.theta.d, p.phi.d};
}

NondimSpherical add(const NondimSpherical& a, const NondimSpherical& b) {
  return {a.rho + b.rho, a.theta + b.theta, a.phi + b.phi, a.drho + b.drho, a.dtheta + b.dtheta, a.dphi + b.dphi};
}

}  // namespace

QuadCoeffs quad_coeffs(const YAConstants& K, double e, double f0) {
  require_elliptic(e, "quad_coeffs");
  const double K1 = K.k1, K2 = K.k2, K3 = K.k3, K5 = K.k5, K6 = K.k6;
  const double q = 1.0 - e * e;
  const double s0 = std::sin(f0), c0 = std::cos(f0);
  const double s20 = std::sin(2.0 * f0), c20 = std::cos(2.0 * f0);
  const double k0 = 1.0 + e * c0;
  const double k02 = k0 * k0, k03 = k02 * k0;

  QuadCoeffs c;
  c.rho_j = 0.5 * K1 * K1 * (1.0 - 3.0 * k0 * (1.0 + 2.0 * k0) / q)
          - K1 * K2 * (3.0 + 7.0 * k0) / q * k02 * s0
          + K1 * K3 * (2.0 * e - (3.0 + 7.0 * k0) * c0) / q * k02
          + K2 * K2 * (k0 - 2.0 * (1.0 + 2.0 * k0) * s0 * s0) / q * k03
          - 2.0 * K2 * K3 * (1.0 + 2.0 * k0) / q * k03 * s20
          + K3 * K3 * (e * e + k02 - 2.0 * k0 * (1.0 + 2.0 * k0) * c0 * c0) / q * k02
          + K5 * K5 * k02 / q * c20
          - 2.0 * K5 * K6 * k02 / q * s20
          - K6 * K6 * k02 / q * c20;

  c.rho_s = 0.75 * K1 * K1 * (3.0 * k0 + 2.0 * k02 + e * e) / (k0 * q) * s0
          + K1 * K2 * (6.0 - 3.0 * k0 + (10.0 + 7.0 * k0) * s0 * s0) / (2.0 * q) * k0
          + K1 * K3 * (e * (k0 - 5.0) + (10.0 + 7.0 * k0) * k0 * c0) / (2.0 * q) * s0
          + K2 * K2 * (9.0 + k0 - 2.0 * (3.0 + 2.0 * k0) * c0 * c0) / (2.0 * q) * k02 * s0
          + K2 * K3 * (e * k0 * (k0 - 2.0) + (1.0 - k0 + 10.0 * k02 + 2.0 * k03) * c0
                       - 2.0 * k02 * (3.0 + 2.0 * k0) * c0 * c0 * c0) / q
          + K3 * K3 * (-2.0 - e * e * (k0 - 1.0) + 2.0 * k0 - 5.0 * k02 + k03
                       + 2.0 * k02 * (3.0 + 2.0 * k0) * c0 * c0) / (2.0 * q) * s0
          - K5 * K5 * c20 / (2.0 * q) * (1.0 + k0) * s0
          + K5 * K6 * s20 / q * (1.0 + k0) * s0
          + K6 * K6 * c20 / (2.0 * q) * (1.0 + k0) * s0;

  const double ec = e + (1.0 + k0) * c0;
  c.rho_c = 0.75 * K1 * K1 * ((3.0 + 2.0 * k0) * c0 + 3.0 * e) / q
          + K1 * K2 * ((10.0 + 7.0 * k0) * c0 + 10.0 * e) / (2.0 * q) * k0 * s0
          + K1 * K3 * (2.5 - (10.0 + 7.0 * k0) / (2.0 * q) * k0 * s0 * s0 + 7.5 / q * k02)
          - K2 * K2 * (e * e * e + 2.0 * (3.0 + 2.0 * k0) * k02 * c0 * c0 * c0 + 2.0 * e * (1.0 - 3.0 * k02)
                       + (1.0 + k0 - 11.0 * k02 + 3.0 * k03) * c0) / (2.0 * q)
          + 2.0 * K2 * K3 * (q - 3.0 * k0 * (1.0 - k0) + k0 * (3.0 + 2.0 * k0) * c0 * c0) / q * k0 * s0
          + K3 * K3 * (e * k0 * (4.0 - 5.0 * k0) + (-1.0 + 3.0 * k0 - 7.0 * k02 + 5.0 * k03) * c0
                       + 2.0 * (3.0 + 2.0 * k0) * k02 * c0 * c0 * c0) / (2.0 * q)
          - K5 * K5 * ec / (2.0 * q) * c20
          + K5 * K6 * ec / q * s20
          + K6 * K6 * ec / (2.0 * q) * c20;

  const Vector6d x0 = ya_state_from_constants(K, e, f0, 0.0);
  c.theta1 = 2.0 * x0[4] * x0[0] - x0[2] * x0[2] + x0[0] * x0[0];
  return c;
}

NondimSpherical second_order_correction(const YAConstants& K, double e, double f0, double f, double J) {
  const QuadCoeffs c = quad_coeffs(K, e, f0);
  const double k = k_parameter(e, f);
  const Jet fj(f, 1.0);
  const Jet Jj(J, 1.0 / (k * k));
  return from_jets(correction_positions(K, c, e, f0, fj, Jj));
}

NondimSpherical second_order_correction(const YAConstants& K, double e, double f0, double f) {
  return second_order_correction(K, e, f0, f, j_integral(e, f0, f));
}

NondimSpherical propagate_second_order(const NondimSpherical& state0, double e, double f0, double f, double J) {
  require_elliptic(e, "propagate_second_order");
  if (f == f0 && J == 0.0) return state0;
  const YAConstants K = ya_constants_from_state(to_vector(state0), e, f0);
  const NondimSpherical first = nondim_spherical_from_vector(ya_state_from_constants(K, e, f, J));
  return add(first, second_order_correction(K, e, f0, f, J));
}

NondimSpherical propagate_second_order(const NondimSpherical& state0, double e, double f0, double f) {
  return propagate_second_order(state0, e, f0, f, j_integral(e, f0, f));
}

NondimSpherical propagate_circular_qv(const NondimSpherical& state0, double n, double t) {
  if (t == 0.0) return state0;
  const YAConstants K = ya_constants_from_state(to_vector(state0), 0.0, 0.0);
  return from_jets(qv_positions(K, Jet(n * t, 1.0)));
}

RelStateSpherical propagate_second_order_dimensional(const RelStateSpherical& state0, const ClassicalElements& chief,
                                                     double t, const GravContext& ctx) {
  if (t == 0.0) return state0;
  const ChiefSnapshot snap0 = chief_snapshot(chief, ctx);
  const ChiefSnapshot snap = chief_snapshot(propagate_elements(chief, t, ctx), ctx);
  const double J = j_from_time(t, ctx.mu, snap0.p);
  const NondimSpherical x = propagate_second_order(nondim_from_dimensional(state0, snap0), chief.e, snap0.f, snap.f, J);
  return dimensional_from_nondim(x, snap);
}

RelStateCartesian propagate_second_order_dimensional(const RelStateCartesian& state0, const ClassicalElements& chief,
                                                     double t, const GravContext& ctx) {
  if (t == 0.0) return state0;
  const ChiefSnapshot snap0 = chief_snapshot(chief, ctx);
  const RelStateSpherical sph =
      propagate_second_order_dimensional(spherical_from_cartesian(state0, snap0), chief, t, ctx);
  return cartesian_from_spherical(sph, chief_snapshot(propagate_elements(chief, t, ctx), ctx));
}

}  // namespace relmo
