#pragma once

#include "eigenbound/bounds.hpp"
#include "eigenbound/check.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eigenbound::oracle {

/// Geodesic cap of radius R in the round n-sphere of curvature K.
/// Admissible when 0 < R <= pi/(2 sqrt(K)); the in-diameter is 2R.
struct CapProblem {
    int n;
    double K;
    double R;
};

void validate(const CapProblem& p);

struct ShootingResult {
    double lambda;
    double residual; // |u(R)| at the converged lambda
    int bisection_iterations;
    long ode_steps;
};

/// First Dirichlet eigenvalue of the cap via bisection on the terminal value
/// of the radial solution u'' + (n-1) sqrt(K) cot(sqrt(K) r) u' + lambda u = 0,
/// u(0) = 1, u'(0) = 0, u(R) = 0.
ShootingResult cap_eigenvalue(const CapProblem& p);

/// (u(r0), u'(r0)) from the even power series about the regular singular
/// point r = 0, through order r0^4; truncation error O(r0^6).
std::pair<double, double> series_start(const CapProblem& p, double lambda,
                                       double r0);

/// lambda(n, c^2 K, R/c) = c^2 lambda(n, K, R).
CheckRecord scaling_check(const CapProblem& p, double c);

struct SweepRow {
    double R;
    double lambda_true;
    bounds::BoundReport report;
    double gap_best;
    std::string error; // empty on success
};

/// One oracle run per R, with d~ = 2R fed to the bound report.
std::vector<SweepRow> sharpness_sweep(int n, double K,
                                      const std::vector<double>& R_values);

} // namespace eigenbound::oracle
