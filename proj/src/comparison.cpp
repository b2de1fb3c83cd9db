#include "eigenbound/comparison.hpp"

#include "eigenbound/constants.hpp"
#include "eigenbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace eigenbound::comparison {

namespace {

constexpr double kPi = 3.14159265358979323846;
// pi/2 split into the nearest double and the residual, so that
// h = (kPio2Hi - t) + kPio2Lo carries the distance to the *true* pi/2.
constexpr double kPio2Hi = 1.5707963267948966;
constexpr double kPio2Lo = 6.123233995736766e-17;

double endpoint_gap(double t_abs)
{
    return (kPio2Hi - t_abs) + kPio2Lo;
}

double xi_series(double h)
{
    // xi(pi/2 - h) = -(2pi/3) h + h^2 - (4pi/45) h^3 + h^4/9 + O(h^5)
    return h * (-2.0 * kPi / 3.0 +
                h * (1.0 + h * (-4.0 * kPi / 45.0 + h / 9.0)));
}

/// I(t) = int_t^{pi/2} s cos^2 s ds expressed in h = pi/2 - t:
/// I = (pi/8)(2h - sin 2h) - (h/4)(h - sin 2h) - sin^2(h)/4.
/// Grouped so that no term cancels catastrophically as h -> 0.
double tail_integral(double h)
{
    const double s2 = std::sin(2.0 * h);
    return 0.125 * kPi * (2.0 * h - s2) - 0.25 * h * (h - s2) -
           0.25 * std::sin(h) * std::sin(h);
}

} // namespace

double XiEvaluator::operator()(double t) const
{
    if (!(switch_threshold > 0.0) || !(switch_threshold < kPi / 4.0))
        throw std::domain_error("XiEvaluator: invalid switch_threshold");
    const double tt = std::abs(t);
    if (tt > kPio2Hi)
        throw std::domain_error("xi: |t| <= pi/2 required");
    const double h = endpoint_gap(tt);
    if (h < switch_threshold)
        return xi_series(h);
    const double c = std::cos(tt);
    // cos^2 t + 2t sin t cos t + t^2 - pi^2/4, with the quadratic part
    // rewritten as -h (t + pi/2) to dodge the endpoint cancellation.
    const double numerator =
        c * c + tt * std::sin(2.0 * tt) - h * (tt + kPio2Hi + kPio2Lo);
    return numerator / (c * c);
}

double xi(double t)
{
    static const XiEvaluator eval{};
    return eval(t);
}

double xi_integral_form(double t)
{
    if (!(t >= 0.0) || t >= kPio2Hi)
        throw std::domain_error("xi_integral_form: 0 <= t < pi/2 required");
    const double h = endpoint_gap(t);
    const double s = std::sin(h); // = cos t
    return -4.0 * tail_integral(h) / (s * s);
}

double xi_first_order_residual(double t)
{
    const double step = 1e-5;
    if (std::abs(t) + step > kPio2Hi)
        throw std::domain_error("xi_first_order_residual: |t| < pi/2 required");
    auto g = [](double s) {
        const double c = std::cos(s);
        return xi(s) * c * c;
    };
    const double deriv = (g(t + step) - g(t - step)) / (2.0 * step);
    const double c = std::cos(t);
    return deriv - 4.0 * t * c * c;
}

CheckRecord xi_mean()
{
    const auto q = quadrature::integrate([](double t) { return xi(t); }, 0.0,
                                         kPio2Hi);
    auto rec = equality_check("xi_mean", "Eq. xi-mean", q.value, -0.5 * kPi,
                              1e-10);
    rec.pass = rec.pass && q.converged;
    return rec;
}

CheckRecord xi_range_check(long grid_size)
{
    if (grid_size < 2)
        throw std::domain_error("xi_range_check: grid_size >= 2 required");
    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_val = 0.0;
    for (long i = 0; i < grid_size; ++i) {
        const double t =
            kPio2Hi * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        const double v = xi(t);
        const double F = 0.5 * std::cos(t) * std::cos(t) -
                         tail_integral(endpoint_gap(t));
        const double slack = std::min({v + 2.0, -v, F});
        if (slack < worst_slack) {
            worst_slack = slack;
            worst_val = v;
        }
    }
    return inequality_check("xi_range", "Lemma 2.1 / F(t) >= 0", worst_val,
                            0.0, worst_slack, 1e-12);
}

CheckRecord xi_second_moment()
{
    const auto q = quadrature::integrate(
        [](double t) {
            const double v = xi(t);
            return v * v;
        },
        0.0, kPio2Hi);
    auto rec = equality_check("xi_second_moment", "Eq. xi-square-integral",
                              q.value,
                              constants::values().second_moment_integral, 1e-9);
    rec.pass = rec.pass && q.converged;
    return rec;
}

ZFunction::ZFunction(double d) : delta(d)
{
    if (!(d >= 0.0) || !(d < 0.5))
        throw std::domain_error("ZFunction: delta in [0, 1/2) required");
}

double ZFunction::operator()(double t) const
{
    return 1.0 + delta * xi(t);
}

double inv_sqrt_z_integral(double delta)
{
    const ZFunction z(delta);
    const auto q = quadrature::integrate(
        [&z](double t) { return 1.0 / std::sqrt(z(t)); }, 0.0, kPio2Hi);
    return q.value;
}

double jensen_baseline(double delta)
{
    if (!(delta >= 0.0) || !(delta < 1.0))
        throw std::domain_error("jensen_baseline: delta in [0, 1) required");
    return 0.5 * kPi / std::sqrt(1.0 - delta);
}

double variance_refined_rhs(double delta)
{
    if (!(delta >= 0.0) || !(delta < 0.5))
        throw std::domain_error(
            "variance_refined_rhs: delta in [0, 1/2) required");
    const double V = constants::values().V;
    return 0.5 * kPi *
           (1.0 / std::sqrt(1.0 - delta) + 0.375 * V * delta * delta);
}

double z_variance(double delta)
{
    const ZFunction z(delta);
    const double mu = 1.0 - delta;
    const auto q = quadrature::integrate(
        [&z, mu](double t) {
            const double d = z(t) - mu;
            return d * d;
        },
        0.0, kPio2Hi);
    return (2.0 / kPi) * q.value;
}

CheckRecord strong_convexity_check(std::span<const double> z_samples)
{
    if (z_samples.empty())
        throw std::domain_error("strong_convexity_check: no samples");
    double mu = 0.0;
    for (double x : z_samples) {
        if (!(x > 0.0) || x > 1.0)
            throw std::domain_error(
                "strong_convexity_check: samples must lie in (0, 1]");
        mu += x;
    }
    mu /= static_cast<double>(z_samples.size());

    const double f_mu = 1.0 / std::sqrt(mu);
    const double fp_mu = -0.5 / (mu * std::sqrt(mu));
    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_lhs = 0.0, worst_rhs = 0.0;
    for (double x : z_samples) {
        const double d = x - mu;
        const double minorant = f_mu + fp_mu * d + 0.375 * d * d;
        const double fx = 1.0 / std::sqrt(x);
        if (fx - minorant < worst_slack) {
            worst_slack = fx - minorant;
            worst_lhs = fx;
            worst_rhs = minorant;
        }
    }
    return inequality_check("strong_convexity", "Prop. 3.1", worst_lhs,
                            worst_rhs, worst_slack, 1e-12);
}

} // namespace eigenbound::comparison
