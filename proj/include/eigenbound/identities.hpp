#pragma once

#include "eigenbound/check.hpp"

#include <utility>
#include <vector>

namespace eigenbound::identities {

/// The three log-cosine integrals over [0, pi/2] against their closed forms:
///   int log(cos)      = -(pi/2) log 2
///   int t log(cos)    = -(pi^2/8) log 2 - (7/16) zeta(3)
///   int t^2 log(cos)  = -(pi^3/24) log 2 - (pi/4) zeta(3)
std::vector<CheckRecord> log_cos_integrals();

/// Partial Fourier sum for log(cos t) = -log 2 + sum (-1)^{k+1} cos(2kt)/k.
double fourier_logcos(double t, long terms);

/// Closed forms of int_0^{pi/2} t cos(2kt) dt and int_0^{pi/2} t^2 cos(2kt) dt.
std::pair<double, double> fourier_moment_coefficients(int k);

/// The boundary term B_eps at u = pi/2 - eps, evaluated through the
/// eps-side identities tan u = cot eps, sec^2 u = csc^2 eps,
/// log(cos u) = log(sin eps).
double boundary_term(double epsilon);

/// Same quantity via direct trig at u; agrees with boundary_term at moderate
/// eps, loses digits near eps = 0 (kept as a self-test route).
double boundary_term_direct(double epsilon);

/// Truncated reduction identity on [0, u]:
///   int_0^u xi^2 = u - (4/3)u^3 + B_eps
///                  + (2 pi^2/3) int_0^u log(cos) - 8 int_0^u t^2 log(cos).
CheckRecord truncated_identity(double epsilon);

/// Full-interval reduction: int_0^{pi/2} xi^2 = pi/2 - pi^3/6 - 2pi/3
/// + (2 pi^2/3) int log(cos) - 8 int t^2 log(cos). The pass flag also
/// requires the assembled closed forms to cancel their log 2 terms exactly
/// and collapse to pi*(2 zeta(3) - (pi^2+1)/6).
CheckRecord reduction_final();

} // namespace eigenbound::identities
