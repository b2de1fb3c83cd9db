#pragma once

#include "eigenbound/rational.hpp"

#include <string>
#include <vector>

namespace eigenbound::constants {

/// The closed-form constants everything downstream consumes.
struct Constants {
    double zeta3;                  // Apery's constant
    double log2;
    double pi;
    double V;                      // variance of xi: 4*zeta(3) - (pi^2+4)/3
    double second_moment_integral; // int_0^{pi/2} xi^2 = pi*(2 zeta3 - (pi^2+1)/6)
    double E_xi_sq;                // (2/pi) * second_moment_integral = V + 1
};

const Constants& values();

/// Apery's constant by direct series sum to N plus the integral-test tail
/// bracket midpoint; N is fixed so the bracket width is below 1e-15.
double zeta3();

/// Partial sum of m^-3 up to N (integral-test bracket checks).
double zeta3_partial_sum(long N);

/// Sum_{k>=1} (-1)^{k+1} k^-3 with alternating-series truncation control;
/// equals (3/4) zeta(3).
double alternating_zeta3();

/// V = 4 zeta(3) - (pi^2 + 4)/3, approximately 0.1850261456.
double variance_constant();

struct RationalCertificate {
    std::string name;
    Rational lhs;
    Rational rhs;
    char relation; // '<', '>', '='
    bool holds;    // decided by exact integer arithmetic only
};

/// The four exact-rational inequalities behind the V < 1/4 chain.
std::vector<RationalCertificate> rational_certificates();

} // namespace eigenbound::constants
