#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace eigenbound {

/// Exact rational over arbitrary-size integers. Only the handful of
/// operations the certificate chain needs; always kept reduced, den > 0.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d))
    {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        normalize();
    }
    Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b)
    {
        return b < a;
    }

    Rational pow(unsigned e) const
    {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    std::string str() const
    {
        return num_.str() + "/" + den_.str();
    }

    double to_double() const
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

} // namespace eigenbound
