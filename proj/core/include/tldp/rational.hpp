#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "tldp/checked.hpp"

namespace tldp {

/// Exact rational over checked 64-bit integers. Always normalized:
/// den > 0, gcd(|num|, den) == 1. Comparisons use 128-bit cross products
/// and cannot overflow.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}
    Rational(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(neg(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(sub(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mul(a.num_, b.num_), mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(mul(a.num_, b.den_), mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Rendered as "p/q" even for integers, e.g. "3/1"; never floats.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p/q" or a bare integer "p".
    static Rational parse(const std::string& s);

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = neg(num_);
            den_ = neg(den_);
        }
        i64 g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i64 num_;
    i64 den_;
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace tldp
