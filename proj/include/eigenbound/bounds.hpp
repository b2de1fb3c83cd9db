#pragma once

#include "eigenbound/check.hpp"

#include <optional>

namespace eigenbound::bounds {

/// The geometric data (n, K, d~): dimension, Ricci constant, in-diameter.
struct GeometryInput {
    int n;
    double K;
    double d_tilde;
};

struct DerivedParams {
    double alpha;     // (n-1) K / 2
    double D;         // pi^2 / d_tilde^2
    double delta_max; // (n-1) / (2n)
};

/// Throws std::domain_error naming the violated invariant.
/// K = 0 is accepted (degenerate limit); K < 0 is not.
void validate(const GeometryInput& g);

DerivedParams derive(const GeometryInput& g);

/// lambda >= n K. Requires K > 0.
double reilly(const GeometryInput& g);

/// lambda >= alpha + D.
double ling(const GeometryInput& g);

/// Closed-form variance-refined bound ((alpha+D) + sqrt((alpha+D)^2 + V alpha^2)) / 2.
double refined(const GeometryInput& g);

/// Root of sqrt(lambda) d~/2 = (pi/2)((1-delta)^{-1/2} + (3/8) V delta^2)
/// with delta = alpha/lambda, solved by bisection on (2 alpha, infinity).
double implicit_bound(const GeometryInput& g);

/// Grid check of (1-delta)^{-1/2} + (3/8)V delta^2 >= (1-delta-(V/4)delta^2)^{-1/2}
/// on [0, 1/2], plus the proof's uniform (1-delta-(V/4)delta^2)^{-3/2} <= 3.
CheckRecord one_root_check(long grid_size);

/// Admissible delta ceiling (n-1)/(2n).
double delta_range(int n);

/// refined/ling in closed form: (1 + sqrt(1 + V (alpha/(alpha+D))^2)) / 2.
double ratio(const GeometryInput& g);

/// Geodesic hemisphere model: d~ = pi/sqrt(K), so D = K.
GeometryInput hemisphere_input(int n, double K);

struct BoundReport {
    std::optional<double> reilly; // absent when K = 0
    double ling;
    double refined;
    double implicit;
    double best;
    double ratio_refined_over_ling;
};

BoundReport bound_report(const GeometryInput& g);

} // namespace eigenbound::bounds
