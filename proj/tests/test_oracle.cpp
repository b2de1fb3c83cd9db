#include <doctest.h>

#include "eigenbound/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace eigenbound;
using namespace eigenbound::oracle;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent cross-check: second-order finite differences on a uniform grid
// with the regular limit n u''(0) + lambda u(0) = 0 at the origin, smallest
// eigenvalue by inverse iteration with tridiagonal (Thomas) solves.
double fd_eigenvalue(const CapProblem& p, long n_cells)
{
    const long N = n_cells;
    const double h = p.R / static_cast<double>(N);
    const double sk = std::sqrt(p.K);
    const long m = N; // unknowns u_0 .. u_{N-1}; u_N = 0

    std::vector<double> sub(m, 0.0), diag(m, 0.0), sup(m, 0.0);
    diag[0] = 2.0 * p.n / (h * h);
    sup[0] = -2.0 * p.n / (h * h);
    for (long i = 1; i < m; ++i) {
        const double r = h * static_cast<double>(i);
        const double c = (p.n - 1) * sk / std::tan(sk * r);
        sub[i] = -(1.0 / (h * h) - c / (2.0 * h));
        diag[i] = 2.0 / (h * h);
        sup[i] = -(1.0 / (h * h) + c / (2.0 * h));
    }

    std::vector<double> x(m, 1.0), cp(m), dp(m);
    double lambda = 0.0;
    for (int iter = 0; iter < 300; ++iter) {
        // Thomas: solve A y = x in place
        cp[0] = sup[0] / diag[0];
        dp[0] = x[0] / diag[0];
        for (long i = 1; i < m; ++i) {
            const double den = diag[i] - sub[i] * cp[i - 1];
            cp[i] = sup[i] / den;
            dp[i] = (x[i] - sub[i] * dp[i - 1]) / den;
        }
        x[m - 1] = dp[m - 1];
        for (long i = m - 2; i >= 0; --i)
            x[i] = dp[i] - cp[i] * x[i + 1];

        double nrm = 0.0;
        for (double v : x)
            nrm += v * v;
        nrm = std::sqrt(nrm);
        for (double& v : x)
            v /= nrm;

        // Rayleigh-style estimate (A x, x) / (x, x)
        double num = 0.0;
        for (long i = 0; i < m; ++i) {
            double ax = diag[i] * x[i];
            if (i > 0)
                ax += sub[i] * x[i - 1];
            if (i + 1 < m)
                ax += sup[i] * x[i + 1];
            num += ax * x[i];
        }
        if (iter > 5 && std::abs(num - lambda) <= 1e-13 * num) {
            lambda = num;
            break;
        }
        lambda = num;
    }
    return lambda;
}

// one Richardson step kills the O(h^2) discretization error
double fd_eigenvalue_extrapolated(const CapProblem& p)
{
    const double coarse = fd_eigenvalue(p, 6000);
    const double fine = fd_eigenvalue(p, 12000);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace

TEST_CASE("hemisphere caps are exactly nK")
{
    for (int n : {2, 10}) {
        const CapProblem p{n, 1.0, kPi / 2.0};
        const auto res = cap_eigenvalue(p);
        CAPTURE(n);
        CHECK(std::abs(res.lambda - n) <= 1e-8 * n);
        CHECK(res.bisection_iterations > 10);
        CHECK(res.ode_steps > 0);
        CHECK(std::abs(res.residual) <= 1e-6);
    }
    const CapProblem scaled{3, 4.0, kPi / 4.0};
    CHECK(std::abs(cap_eigenvalue(scaled).lambda - 12.0) <= 1e-7 * 12.0);
}

TEST_CASE("series start")
{
    const CapProblem p{10, 1.0, kPi / 2.0};

    // lambda = 0 gives the constant solution
    const auto [u0, du0] = series_start(p, 0.0, 1e-5);
    CHECK(u0 == 1.0);
    CHECK(du0 == 0.0);

    // at lambda = nK the radial eigenfunction is cos(sqrt(K) r)
    const double r0 = 1e-4;
    const auto [u, du] = series_start(p, 10.0, r0);
    CHECK(std::abs(u - std::cos(r0)) <= 1e-15);
    CHECK(std::abs(du - (-std::sin(r0))) <= 1e-15);

    CHECK_THROWS_AS(series_start(p, 10.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(series_start(p, 10.0, 0.01), std::domain_error);
}

TEST_CASE("scaling covariance of the oracle")
{
    const CapProblem p{3, 1.0, 1.1};
    for (double c : {2.0, 0.5}) {
        const auto rec = scaling_check(p, c);
        CAPTURE(c);
        CHECK(rec.pass);
        CHECK(rec.abs_discrepancy <= rec.tolerance);
    }
}

TEST_CASE("finite-difference cross-oracle agreement")
{
    const CapProblem cases[] = {
        {2, 1.0, 1.0},
        {3, 1.0, 1.2},
        {5, 0.5, 1.5},
    };
    for (const auto& p : cases) {
        CAPTURE(p.n);
        CAPTURE(p.R);
        const double shoot = cap_eigenvalue(p).lambda;
        const double fd = fd_eigenvalue_extrapolated(p);
        CHECK(std::abs(shoot - fd) <= 1e-6 * shoot);
    }
}

TEST_CASE("eigenvalue decreases as the cap grows")
{
    double prev = 1e300;
    for (double R : {0.4, 0.7, 1.0, 1.3, kPi / 2.0}) {
        const double lam = cap_eigenvalue({4, 1.0, R}).lambda;
        CHECK(lam < prev);
        prev = lam;
    }
    // hemisphere is the floor over admissible radii
    CHECK(prev == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("domain validation")
{
    CHECK_THROWS_AS(cap_eigenvalue({3, 1.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(cap_eigenvalue({3, 1.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(cap_eigenvalue({3, 0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(cap_eigenvalue({1, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("sharpness sweep rows")
{
    const std::vector<double> radii{0.5, 1.0, kPi / 2.0};
    const auto rows = sharpness_sweep(3, 1.0, radii);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CAPTURE(row.R);
        REQUIRE(row.error.empty());
        CHECK(row.lambda_true > 0.0);
        // every bound must sit below the truth
        CHECK(row.gap_best >= -1e-8 * row.lambda_true);
        CHECK(row.report.implicit <= row.lambda_true * (1.0 + 1e-8));
        CHECK(row.report.refined <= row.lambda_true * (1.0 + 1e-8));
    }
    // the hemisphere row is tight for the reilly bound
    const auto& hemi = rows.back();
    REQUIRE(hemi.report.reilly.has_value());
    CHECK(std::abs(*hemi.report.reilly - hemi.lambda_true) <=
          1e-7 * hemi.lambda_true);
}
