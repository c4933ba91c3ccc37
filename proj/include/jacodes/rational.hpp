#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "jacodes/errors.hpp"

namespace jacodes {

// Exact rational over 64-bit integers. Intermediates run in __int128 and the
// reduced result must fit back into int64; anything larger throws OverflowError
// instead of wrapping. Always normalized: den > 0, gcd(num, den) == 1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim)
            throw OverflowError("rational exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void assign(long long n, long long d) { *this = from128(i128(n), i128(d)); }

    long long num_;
    long long den_;
};

}  // namespace jacodes
