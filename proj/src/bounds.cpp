#include "eigenbound/bounds.hpp"

#include "eigenbound/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eigenbound::bounds {

namespace {

constexpr double kPi = 3.14159265358979323846;

double refined_rhs_of_delta(double delta)
{
    const double V = constants::values().V;
    return 0.5 * kPi *
           (1.0 / std::sqrt(1.0 - delta) + 0.375 * V * delta * delta);
}

} // namespace

void validate(const GeometryInput& g)
{
    if (g.n < 2)
        throw std::domain_error("GeometryInput: n >= 2 required");
    if (!(g.K >= 0.0) || !std::isfinite(g.K))
        throw std::domain_error("GeometryInput: K >= 0 required");
    if (!(g.d_tilde > 0.0) || !std::isfinite(g.d_tilde))
        throw std::domain_error("GeometryInput: d_tilde > 0 required");
}

DerivedParams derive(const GeometryInput& g)
{
    validate(g);
    return {0.5 * (g.n - 1) * g.K, kPi * kPi / (g.d_tilde * g.d_tilde),
            delta_range(g.n)};
}

double reilly(const GeometryInput& g)
{
    validate(g);
    if (!(g.K > 0.0))
        throw std::domain_error("reilly: K > 0 required");
    return g.n * g.K;
}

double ling(const GeometryInput& g)
{
    const auto p = derive(g);
    return p.alpha + p.D;
}

double refined(const GeometryInput& g)
{
    const auto p = derive(g);
    const double V = constants::values().V;
    const double s = p.alpha + p.D;
    return 0.5 * (s + std::sqrt(s * s + V * p.alpha * p.alpha));
}

double implicit_bound(const GeometryInput& g)
{
    const auto p = derive(g);
    if (p.alpha == 0.0)
        return p.D; // equation reduces to sqrt(lambda) d/2 = pi/2

    const double half_d = 0.5 * g.d_tilde;
    auto G = [&](double lam) {
        const double delta = p.alpha / lam;
        return std::sqrt(lam) * half_d - refined_rhs_of_delta(delta);
    };

    // G is strictly increasing on (2 alpha, inf). If it is already
    // nonnegative at the bracket floor, the equation constrains nothing
    // below delta = 1/2 and the floor itself is the reported bound.
    const double ling_val = p.alpha + p.D;
    double lo = std::max(2.0 * p.alpha * (1.0 + 1e-9), ling_val);
    if (G(lo) >= 0.0)
        return lo;

    double hi = 2.0 * lo;
    int expansions = 0;
    while (G(hi) < 0.0) {
        hi *= 2.0;
        if (++expansions > 60)
            throw std::runtime_error(
                "implicit_bound: bracket expansion failed (solver bug)");
    }

    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (G(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CheckRecord one_root_check(long grid_size)
{
    if (grid_size < 2)
        throw std::domain_error("one_root_check: grid_size >= 2 required");
    const double V = constants::values().V;

    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_lhs = 0.0, worst_rhs = 0.0;
    double max_pow = 0.0;
    for (long i = 0; i < grid_size; ++i) {
        const double delta =
            0.5 * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        const double lhs =
            1.0 / std::sqrt(1.0 - delta) + 0.375 * V * delta * delta;
        const double denom = 1.0 - delta - 0.25 * V * delta * delta;
        const double rhs = 1.0 / std::sqrt(denom);
        max_pow = std::max(max_pow, 1.0 / (denom * std::sqrt(denom)));
        if (lhs - rhs < worst_slack) {
            worst_slack = lhs - rhs;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
    }
    auto rec = inequality_check("one_root", "Eq. one-root", worst_lhs,
                                worst_rhs, worst_slack, 1e-12);
    rec.pass = rec.pass && max_pow <= 3.0;
    return rec;
}

double delta_range(int n)
{
    if (n < 2)
        throw std::domain_error("delta_range: n >= 2 required");
    return 0.5 * (n - 1) / static_cast<double>(n);
}

double ratio(const GeometryInput& g)
{
    const auto p = derive(g);
    const double V = constants::values().V;
    const double r = p.alpha / (p.alpha + p.D);
    return 0.5 * (1.0 + std::sqrt(1.0 + V * r * r));
}

GeometryInput hemisphere_input(int n, double K)
{
    if (n < 2)
        throw std::domain_error("hemisphere_input: n >= 2 required");
    if (!(K > 0.0))
        throw std::domain_error("hemisphere_input: K > 0 required");
    return {n, K, kPi / std::sqrt(K)};
}

BoundReport bound_report(const GeometryInput& g)
{
    validate(g);
    BoundReport r;
    if (g.K > 0.0)
        r.reilly = reilly(g);
    r.ling = ling(g);
    r.refined = refined(g);
    r.implicit = implicit_bound(g);
    r.ratio_refined_over_ling = ratio(g);
    r.best = std::max({r.reilly.value_or(-std::numeric_limits<double>::infinity()),
                       r.ling, r.refined, r.implicit});

    if (r.refined < r.ling - 1e-12 * std::abs(r.ling) ||
        r.implicit < r.refined - 1e-12 * std::abs(r.refined))
        throw std::logic_error("bound_report: ordering invariant violated");
    return r;
}

} // namespace eigenbound::bounds
