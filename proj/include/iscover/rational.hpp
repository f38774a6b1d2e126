#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iscover {

// Exact rational arithmetic on 64-bit terms. Intermediate products run in
// 128 bits and comparisons cross-multiply, so cost accounting and bound
// audits never round.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return from_wide(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from_wide(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from_wide(wide(num_) * o.num_, wide(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_wide(wide(num_) * o.den_, wide(den_) * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    std::strong_ordering operator<=>(const Rational& o) const {
        wide lhs = wide(num_) * o.den_;
        wide rhs = wide(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    bool positive() const { return num_ > 0; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using wide = __int128;

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    static Rational from_wide(wide n, wide d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        wide a = n < 0 ? -n : n;
        wide g = gcd_wide(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr wide lo = -static_cast<wide>(0x7fffffffffffffffLL) - 1;
        constexpr wide hi = static_cast<wide>(0x7fffffffffffffffLL);
        if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static wide gcd_wide(wide a, wide b) {
        while (b != 0) {
            wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace iscover
