#pragma once

#include "eigenbound/check.hpp"

#include <span>

namespace eigenbound::comparison {

/// The auxiliary function xi(t) = (cos^2 t + 2t sin t cos t + t^2 - pi^2/4) / cos^2 t,
/// even on [-pi/2, pi/2], with xi(+-pi/2) = 0 as a removable 0/0 point.
/// Within switch_threshold of the endpoint the closed form is replaced by the
/// series in h = pi/2 - |t|:
///   xi = -(2 pi/3) h + h^2 - (4 pi/45) h^3 + h^4/9 + O(h^5).
struct XiEvaluator {
    double switch_threshold = 1e-4;
    double operator()(double t) const;
};

double xi(double t);

/// Integral representation xi(t) = -4 sec^2 t * int_t^{pi/2} s cos^2 s ds,
/// evaluated through the exact antiderivative; valid on [0, pi/2).
double xi_integral_form(double t);

/// Residual of (xi cos^2)' = 4 t cos^2 t by central finite differences.
double xi_first_order_residual(double t);

/// Quadrature of xi over [0, pi/2] against -pi/2.
CheckRecord xi_mean();

/// Grid check -2 <= xi <= 0 on [0, pi/2], plus F(t) = cos^2(t)/2 - I(t) >= 0.
CheckRecord xi_range_check(long grid_size);

/// Quadrature of xi^2 against pi*(2 zeta(3) - (pi^2+1)/6).
CheckRecord xi_second_moment();

/// The comparison profile z(t) = 1 + delta * xi(t); requires delta in [0, 1/2).
struct ZFunction {
    explicit ZFunction(double delta);
    double operator()(double t) const;
    double delta;
};

/// Quadrature of int_0^{pi/2} z(t)^{-1/2} dt.
double inv_sqrt_z_integral(double delta);

/// (pi/2) * (1 - delta)^{-1/2}, the Jensen/Holder baseline.
double jensen_baseline(double delta);

/// (pi/2) * ((1 - delta)^{-1/2} + (3/8) V delta^2).
double variance_refined_rhs(double delta);

/// Variance of z over [0, pi/2] with the normalized measure (2/pi) dt,
/// computed by quadrature of (z - mu)^2; equals delta^2 * V.
double z_variance(double delta);

/// Pointwise quadratic minorant of x^{-1/2} at the sample mean:
/// f(x) >= f(mu) + f'(mu)(x - mu) + (3/8)(x - mu)^2 for all samples in (0,1].
CheckRecord strong_convexity_check(std::span<const double> z_samples);

} // namespace eigenbound::comparison
