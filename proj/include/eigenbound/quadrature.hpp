#pragma once

#include <functional>

namespace eigenbound::quadrature {

struct QuadratureConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_levels = 12;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

enum class Weight { one, t, t_squared };

enum class Side { left, right };

struct LimitResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Tanh-sinh quadrature of f over (a, b). The abscissas cluster doubly
/// exponentially at the endpoints, so integrable (logarithmic) endpoint
/// singularities converge without a substitution. Throws std::runtime_error
/// if f returns a non-finite value at an interior node.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg = {});

/// Integrates weight(t) * f(t) with weight in {1, t, t^2}.
QuadratureResult integrate_weighted(const std::function<double(double)>& f,
                                    Weight weight, double a, double b,
                                    const QuadratureConfig& cfg = {});

/// One-sided limit of g at `at` by sampling a geometric offset sequence and
/// extrapolating to zero offset (Neville tableau). Throws on a divergent
/// sample sequence.
LimitResult richardson_limit(const std::function<double(double)>& g, Side side,
                             double at, double initial_offset = 0.05,
                             int max_points = 16);

} // namespace eigenbound::quadrature
