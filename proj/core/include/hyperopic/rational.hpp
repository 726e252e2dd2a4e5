#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hyperopic/errors.hpp"

namespace hyperopic {

// Exact rational on 64-bit components. Intermediate products run in 128 bits;
// any value that does not fit back into 64 bits after reduction throws rather
// than silently wrapping. Always stored reduced with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        detail::require(b.num_ != 0, "rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Continued-fraction convergents of a nonnegative rational, in order,
    // ending with the value itself ([0/1, ...] for values < 1).
    std::vector<Rational> convergents() const {
        detail::require(num_ >= 0, "convergents need a nonnegative rational");
        std::vector<Rational> out;
        long long a = num_, b = den_;
        long long h0 = 1, k0 = 0, h1 = 0, k1 = 1;
        while (b != 0) {
            long long digit = a / b;
            long long rem = a % b;
            i128 h = i128(digit) * h0 + h1;
            i128 k = i128(digit) * k0 + k1;
            detail::require(fits64(h) && fits64(k), "convergent overflow");
            h1 = h0;
            k1 = k0;
            h0 = static_cast<long long>(h);
            k0 = static_cast<long long>(k);
            out.emplace_back(h0, k0);
            a = b;
            b = rem;
        }
        return out;
    }

private:
    using i128 = __int128;

    static bool fits64(i128 v) {
        return v >= -i128(INT64_MAX) && v <= i128(INT64_MAX);
    }

    static Rational from128(i128 n, i128 d) {
        detail::require(d != 0, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        detail::require(fits64(n) && fits64(d), "rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        detail::require(den_ != 0, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_;
    long long den_;
};

} // namespace hyperopic
