#pragma once

// Quasi-nonsingular relative orbital elements.
//
// The relative mean argument of latitude uses u = M + omega, so that under
// unperturbed motion dlambda drifts exactly as (n_d - n) t and every other
// slot is constant.

#include "relmo/frames.hpp"
#include "relmo/kepler.hpp"

namespace relmo {

struct ROEVector {
  double da = 0.0;       // (a_d - a) / a
  double dlambda = 0.0;  // (u_d - u) + (raan_d - raan) cos i
  double dex = 0.0;
  double dey = 0.0;
  double dix = 0.0;
  double diy = 0.0;      // (raan_d - raan) sin i
};

/// Throws DomainError when the chief is equatorial (diy undefined).
ROEVector roe_from_elements(const ClassicalElements& chief, const ClassicalElements& deputy);

/// Deputy elements (mean anomaly) reproducing `roe` about `chief`. Throws
/// DomainError for an equatorial chief or a resulting e_d outside [0, 1).
ClassicalElements elements_from_roe(const ClassicalElements& chief, const ROEVector& roe);

/// Approximate dlambda evolution after `t` seconds, truncated at first or
/// second order in da. Every other slot is returned unchanged.
ROEVector propagate_dlambda(const ROEVector& roe0, double n, double t, int order);

/// Exact dlambda drift: (n_d - n) t with n_d = n (1 + da)^(-3/2).
double exact_dlambda_drift(double da, double n, double t);

/// elements_from_roe followed by truth_relative_state.
RelStateCartesian roe_to_relative_state_exact(const ClassicalElements& chief, const ROEVector& roe,
                                              const GravContext& ctx);

Vector6d to_vector(const ROEVector& roe);
ROEVector roe_from_vector(const Vector6d& v);

}  // namespace relmo
