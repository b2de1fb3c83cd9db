#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigenbound/bounds.hpp"
#include "eigenbound/comparison.hpp"
#include "eigenbound/constants.hpp"
#include "eigenbound/identities.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

using namespace eigenbound;

namespace {

constexpr double kPi = 3.14159265358979323846;

void report(int number, const char* title, bool ok)
{
    std::printf("[%02d] %-38s %s\n", number, title, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
}

} // namespace

TEST_CASE("01 universal variance constant")
{
    const double V = constants::variance_constant();
    const bool ok = std::abs(V - 0.1850261456) <= 1e-9;
    report(1, "universal variance constant", ok);
    CHECK(ok);
}

TEST_CASE("02 mean identity")
{
    const auto rec = comparison::xi_mean();
    const bool ok = rec.pass && rec.abs_discrepancy <= 1e-10;
    report(2, "mean identity", ok);
    CHECK(ok);
}

TEST_CASE("03 second moment")
{
    const auto rec = comparison::xi_second_moment();
    const bool ok = rec.pass && rec.abs_discrepancy <= 1e-9;
    report(3, "second moment", ok);
    CHECK(ok);
}

TEST_CASE("04 log-cos integrals")
{
    const auto recs = identities::log_cos_integrals();
    bool ok = recs.size() == 3;
    for (const auto& rec : recs)
        ok = ok && rec.pass && rec.abs_discrepancy <= 1e-9;
    report(4, "log-cos integrals", ok);
    CHECK(ok);
}

TEST_CASE("05 boundary limit and truncated identity")
{
    const auto lim = quadrature::richardson_limit(
        [](double e) { return identities::boundary_term(e); },
        quadrature::Side::right, 0.0);
    bool ok = std::abs(lim.value - (-2.0 * kPi / 3.0)) <= 1e-6;
    for (double eps : {0.5, 0.2, 0.1, 0.05, 0.02, 0.01}) {
        const auto rec = identities::truncated_identity(eps);
        ok = ok && rec.pass && rec.abs_discrepancy <= 1e-8;
    }
    report(5, "boundary limit + truncated identity", ok);
    CHECK(ok);
}

TEST_CASE("06 one-root inequality on a dense grid")
{
    const auto rec = bounds::one_root_check(1000000);
    const bool ok = rec.pass && rec.tolerance == 1e-12;
    report(6, "one-root inequality (1e6 grid)", ok);
    CHECK(ok);
}

TEST_CASE("07 exact rational certificates")
{
    const auto certs = constants::rational_certificates();
    bool ok = certs.size() == 4;
    for (const auto& c : certs)
        ok = ok && c.holds;
    ok = ok && certs[0].lhs == Rational(260423, 216000) &&
         certs[1].lhs == Rational(49729, 5041) &&
         certs[1].rhs == Rational(493, 50) &&
         certs[2].lhs == Rational(10943, 54000) &&
         certs[2].rhs == Rational(1, 4) &&
         certs[3].lhs == Rational(262144, 29791) &&
         certs[3].rhs == Rational(9, 1);
    report(7, "exact rational certificates", ok);
    CHECK(ok);
}

TEST_CASE("08 variance-Jensen dominance ladder")
{
    bool ok = true;
    for (int k = 0; k <= 9; ++k) {
        const double d = 0.05 * k;
        const double upper = comparison::inv_sqrt_z_integral(d);
        const double middle = comparison::variance_refined_rhs(d);
        const double lower = comparison::jensen_baseline(d);
        ok = ok && upper >= middle - 1e-10 && middle >= lower - 1e-10;
    }
    report(8, "variance-Jensen dominance ladder", ok);
    CHECK(ok);
}

TEST_CASE("09 ratio claims")
{
    const double hemi = bounds::ratio(bounds::hemisphere_input(10, 1.0));
    const double V = constants::values().V;
    const double cap = 0.5 * (1.0 + std::sqrt(1.0 + V));
    const bool ok =
        std::abs(hemi - 1.0301) <= 5e-4 && std::abs(cap - 1.0443) <= 5e-5;
    report(9, "improvement ratio claims", ok);
    CHECK(ok);
}

TEST_CASE("10 hemisphere oracle exactness")
{
    bool ok = true;
    for (int n : {2, 3, 5, 10}) {
        for (double K : {0.25, 1.0, 4.0}) {
            const double R = 0.5 * kPi / std::sqrt(K);
            const double lam = oracle::cap_eigenvalue({n, K, R}).lambda;
            ok = ok && std::abs(lam - n * K) <= 1e-8 * (n * K);
        }
    }
    report(10, "hemisphere oracle exactness", ok);
    CHECK(ok);
}

TEST_CASE("11 soundness sweep against the oracle")
{
    bool ok = true;
    const std::vector<double> radii{0.3, 0.6, 0.9, 1.2, 0.5 * kPi};
    for (int n : {2, 5, 10}) {
        const auto rows = oracle::sharpness_sweep(n, 1.0, radii);
        ok = ok && rows.size() == radii.size();
        for (const auto& row : rows) {
            if (!row.error.empty()) {
                ok = false;
                continue;
            }
            const auto& rep = row.report;
            const double slack = 1e-8 * row.lambda_true;
            ok = ok && rep.best <= row.lambda_true + slack;
            ok = ok && rep.implicit <= row.lambda_true + slack;
            ok = ok && rep.implicit >= rep.refined - 1e-12 * rep.refined;
            ok = ok && rep.refined > rep.ling; // strict, K > 0
            if (rep.reilly)
                ok = ok && *rep.reilly <= row.lambda_true + slack;
        }
    }
    report(11, "soundness sweep against the oracle", ok);
    CHECK(ok);
}

TEST_CASE("12 quadratic certificate on random inputs")
{
    const double V = constants::values().V;
    std::mt19937_64 rng(987654321ull);
    std::uniform_int_distribution<int> nd(2, 50);
    std::uniform_real_distribution<double> kd(0.001, 10.0);
    std::uniform_real_distribution<double> dd(0.05, 10.0);
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
        const bounds::GeometryInput g{nd(rng), kd(rng), dd(rng)};
        const auto p = bounds::derive(g);
        const double lam = bounds::refined(g);
        const double resid =
            lam * lam - (p.alpha + p.D) * lam - 0.25 * V * p.alpha * p.alpha;
        ok = ok && std::abs(resid) <= 1e-9 * lam * lam;
    }
    report(12, "quadratic certificate, random inputs", ok);
    CHECK(ok);
}
