#include "eigenbound/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace eigenbound::constants {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;
} // namespace

double zeta3_partial_sum(long N)
{
    if (N < 1)
        throw std::domain_error("zeta3_partial_sum: N >= 1 required");
    double s = 0.0;
    for (long m = N; m >= 1; --m) {
        const double dm = static_cast<double>(m);
        s += 1.0 / (dm * dm * dm);
    }
    return s;
}

double zeta3()
{
    // Tail after N lies in (1/(2(N+1)^2), 1/(2N^2)); bracket width ~ N^-3,
    // below 1e-15 for N = 2e5.
    static const double value = [] {
        const long N = 200000;
        const double partial = zeta3_partial_sum(N);
        const double lo = 0.5 / (static_cast<double>(N + 1) * (N + 1));
        const double hi = 0.5 / (static_cast<double>(N) * N);
        return partial + 0.5 * (lo + hi);
    }();
    return value;
}

double alternating_zeta3()
{
    // Truncation error is bounded by the first omitted term, 1/(K+1)^3.
    static const double value = [] {
        const long K = 40000;
        double s = 0.0;
        for (long k = K; k >= 1; --k) {
            const double dk = static_cast<double>(k);
            const double term = 1.0 / (dk * dk * dk);
            s += (k % 2 == 1) ? term : -term;
        }
        return s;
    }();
    return value;
}

double variance_constant()
{
    return 4.0 * zeta3() - (kPi * kPi + 4.0) / 3.0;
}

const Constants& values()
{
    static const Constants c = [] {
        Constants v{};
        v.zeta3 = zeta3();
        v.log2 = kLog2;
        v.pi = kPi;
        v.V = variance_constant();
        v.second_moment_integral =
            kPi * (2.0 * v.zeta3 - (kPi * kPi + 1.0) / 6.0);
        v.E_xi_sq = v.V + 1.0;
        return v;
    }();
    return c;
}

std::vector<RationalCertificate> rational_certificates()
{
    std::vector<RationalCertificate> certs;

    // (a) sum_{m=1}^{5} m^-3 + 1/50 = 260423/216000
    {
        Rational lhs(0);
        for (long long m = 1; m <= 5; ++m)
            lhs = lhs + Rational(1, m * m * m);
        lhs = lhs + Rational(1, 50);
        const Rational rhs(260423, 216000);
        certs.push_back({"partial_sum_plus_tail", lhs, rhs, '=', lhs == rhs});
    }

    // (b) (223/71)^2 = 49729/5041 > 493/50
    {
        const Rational lhs = Rational(223, 71).pow(2);
        const Rational rhs(493, 50);
        const bool holds = lhs == Rational(49729, 5041) && lhs > rhs;
        certs.push_back({"pi_squared_lower", lhs, rhs, '>', holds});
    }

    // (c) 260423/54000 - 231/50 = 10943/54000 < 1/4
    {
        const Rational lhs = Rational(260423, 54000) - Rational(231, 50);
        const Rational rhs(1, 4);
        const bool holds = lhs == Rational(10943, 54000) && lhs < rhs;
        certs.push_back({"variance_upper", lhs, rhs, '<', holds});
    }

    // (d) (64/31)^3 = 262144/29791 < 9
    {
        const Rational lhs = Rational(64, 31).pow(3);
        const Rational rhs(9);
        const bool holds = lhs == Rational(262144, 29791) && lhs < rhs;
        certs.push_back({"three_halves_power", lhs, rhs, '<', holds});
    }

    return certs;
}

} // namespace eigenbound::constants
