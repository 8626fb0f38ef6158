#pragma once

// Minimal forward-mode dual number: value plus first derivative with respect
// to a single independent variable.

#include <cmath>

namespace relmo {

struct Jet {
  double v = 0.0;
  double d = 0.0;

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}  // NOLINT: constants promote implicitly
  constexpr Jet(double value, double deriv) : v(value), d(deriv) {}

  Jet& operator+=(const Jet& o) { v += o.v; d += o.d; return *this; }
  Jet& operator-=(const Jet& o) { v -= o.v; d -= o.d; return *this; }
  Jet& operator*=(const Jet& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Jet& operator/=(const Jet& o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
};

inline Jet operator-(const Jet& a) { return {-a.v, -a.d}; }
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }

inline Jet sin(const Jet& a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Jet cos(const Jet& a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }
inline double derivative_of(const Jet& x) { return x.d; }

}  // namespace relmo
