#include <doctest.h>

#include "eigenbound/constants.hpp"

#include <cmath>
#include <stdexcept>

using namespace eigenbound;
using namespace eigenbound::constants;

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_CASE("zeta3 series with tail bracket")
{
    CHECK(std::abs(zeta3() - 1.2020569031595942854) <= 1e-15);

    // integral-test bracket: partial(N) < zeta3 < partial(N) + 1/(2N^2)
    for (long N : {5L, 10L, 100L}) {
        const double partial = zeta3_partial_sum(N);
        CHECK(partial < zeta3());
        CHECK(zeta3() < partial + 0.5 / (static_cast<double>(N) * N));
    }

    // partial sums increase
    CHECK(zeta3() > 1.0 + 1.0 / 8.0 + 1.0 / 27.0);
    // rational upper bound from the certificate chain
    CHECK(zeta3() < 260423.0 / 216000.0);
}

TEST_CASE("alternating zeta identity")
{
    CHECK(std::abs(alternating_zeta3() - 0.75 * zeta3()) <= 1e-12);
}

TEST_CASE("variance constant")
{
    const double V = variance_constant();
    CHECK(std::abs(V - 0.1850261456) <= 1e-9);
    CHECK(V > 0.0);
    CHECK(V < 0.25);
    CHECK(std::abs(V - (4.0 * zeta3() - (kPi * kPi + 4.0) / 3.0)) == 0.0);

    const auto& c = values();
    CHECK(c.V == V);
    CHECK(std::abs(c.E_xi_sq - (V + 1.0)) <= 1e-15);
    CHECK(std::abs((2.0 / kPi) * c.second_moment_integral - c.E_xi_sq) <=
          1e-14);
}

TEST_CASE("rational certificates hold exactly")
{
    const auto certs = rational_certificates();
    REQUIRE(certs.size() == 4);
    for (const auto& c : certs) {
        CAPTURE(c.name);
        CHECK(c.holds);
    }

    CHECK(certs[0].lhs == Rational(260423, 216000));
    CHECK(certs[1].lhs == Rational(49729, 5041));
    CHECK(certs[2].lhs == Rational(10943, 54000));
    CHECK(certs[3].lhs == Rational(262144, 29791));

    // pi really is above 223/71, so the chain applies to the runtime value
    CHECK(kPi > 223.0 / 71.0);
}

TEST_CASE("rational arithmetic basics")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(3, 7).pow(2) == Rational(9, 49));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
