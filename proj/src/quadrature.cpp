#include "eigenbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenbound::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Beyond |u| = 4 the tanh-sinh weights are below 1e-35; nothing a
// double-precision sum can see survives out there.
constexpr double kUMax = 4.0;

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg)
{
    if (!(a < b))
        throw std::domain_error("integrate: requires a < b");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_levels < 1)
        throw std::domain_error("integrate: invalid QuadratureConfig");

    const double half = 0.5 * (b - a);
    long evaluations = 0;

    // Weighted sample w(u) * f(x(u)).  The node position is computed as a
    // distance from the nearer endpoint, which stays accurate when the
    // transformed node is within 1e-30 of a or b.
    auto sample = [&](double u) -> double {
        const double s = 0.5 * kPi * std::sinh(u);
        const double ch = std::cosh(s);
        const double w = half * (0.5 * kPi) * std::cosh(u) / (ch * ch);
        if (w == 0.0 || !std::isfinite(w))
            return 0.0;
        const double d = 2.0 * half / (std::exp(2.0 * std::abs(s)) + 1.0);
        if (d == 0.0)
            return 0.0;
        const double x = (u >= 0.0) ? b - d : a + d;
        const double fx = f(x);
        ++evaluations;
        if (!std::isfinite(fx))
            throw std::runtime_error(
                "integrate: non-finite integrand sample at x = " +
                std::to_string(x));
        return w * fx;
    };

    double h = 1.0;
    double sum = sample(0.0);
    for (int k = 1; k * h <= kUMax; ++k)
        sum += sample(k * h) + sample(-k * h);

    double value = h * sum;
    double prev = 0.0, prev2 = 0.0;
    double err = std::numeric_limits<double>::infinity();
    bool converged = false;

    for (int level = 1; level < cfg.max_levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (long k = 1; k * h <= kUMax; k += 2)
            add += sample(k * h) + sample(-k * h);
        prev2 = prev;
        prev = value;
        value = 0.5 * value + h * add;

        const double d1 = std::abs(value - prev);
        const double d2 = std::abs(prev - prev2);
        if (d1 == 0.0)
            err = 0.0;
        else if (level >= 2 && d2 > 0.0)
            err = std::min(d1, d1 * d1 / d2);
        else
            err = d1;

        const double tol =
            std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
        if (level >= 2 && err <= tol) {
            converged = true;
            break;
        }
    }

    return {value, err, std::max<long>(evaluations, 1), converged};
}

QuadratureResult integrate_weighted(const std::function<double(double)>& f,
                                    Weight weight, double a, double b,
                                    const QuadratureConfig& cfg)
{
    switch (weight) {
    case Weight::one:
        return integrate(f, a, b, cfg);
    case Weight::t:
        return integrate([&f](double t) { return t * f(t); }, a, b, cfg);
    case Weight::t_squared:
        return integrate([&f](double t) { return t * t * f(t); }, a, b, cfg);
    }
    throw std::logic_error("integrate_weighted: unknown weight");
}

LimitResult richardson_limit(const std::function<double(double)>& g, Side side,
                             double at, double initial_offset, int max_points)
{
    if (!(initial_offset > 0.0) || max_points < 2)
        throw std::domain_error("richardson_limit: invalid sampling plan");

    const double sign = (side == Side::right) ? 1.0 : -1.0;

    // Neville tableau over offsets eps_k = eps0 * 2^-k, extrapolated to 0.
    // With the geometric ratio fixed at 2 the update factor is 1/(2^j - 1).
    std::vector<double> row;
    row.reserve(static_cast<size_t>(max_points));

    double best = std::numeric_limits<double>::quiet_NaN();
    double best_err = std::numeric_limits<double>::infinity();
    double eps = initial_offset;
    double first_scale = 0.0;

    for (int k = 0; k < max_points; ++k, eps *= 0.5) {
        const double gk = g(at + sign * eps);
        if (!std::isfinite(gk))
            throw std::runtime_error(
                "richardson_limit: non-finite sample at offset " +
                std::to_string(eps));
        if (k == 0)
            first_scale = 1.0 + std::abs(gk);
        else if (k >= 6 && std::abs(gk) > 1e4 * first_scale)
            throw std::runtime_error(
                "richardson_limit: divergent sample sequence");

        double diag_prev = (k > 0) ? row.back() : 0.0;
        std::vector<double> next(static_cast<size_t>(k) + 1);
        next[0] = gk;
        for (int j = 1; j <= k; ++j) {
            // Exponent sequence 1,1,2,2,3,3,...: each power appears twice so
            // that eps^p log(eps) terms (turned into pure eps^p by the first
            // pass at exponent p) are removed by the second.
            const double pow2 = std::ldexp(1.0, (j + 1) / 2);
            next[static_cast<size_t>(j)] =
                next[static_cast<size_t>(j) - 1] +
                (next[static_cast<size_t>(j) - 1] -
                 row[static_cast<size_t>(j) - 1]) /
                    (pow2 - 1.0);
        }
        if (k > 0) {
            const double cand = next.back();
            const double est = std::abs(cand - next[next.size() - 2]) +
                               std::abs(cand - diag_prev);
            if (est < best_err) {
                best_err = est;
                best = cand;
            }
            if (best_err <= 1e-15 * (1.0 + std::abs(best)))
                break;
        } else {
            best = gk;
        }
        row = std::move(next);
    }

    return {best, best_err};
}

} // namespace eigenbound::quadrature
