#pragma once

#include <array>
#include <compare>
#include <numeric>
#include <string>

#include "tldp/checked.hpp"
#include "tldp/rational.hpp"

namespace tldp {

/// A point of the rank-2 lattice N = Z^2.
struct Vec {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const Vec&, const Vec&) = default;
    friend auto operator<=>(const Vec&, const Vec&) = default;

    Vec operator+(const Vec& o) const { return {add(x, o.x), add(y, o.y)}; }
    Vec operator-(const Vec& o) const { return {sub(x, o.x), sub(y, o.y)}; }
    Vec operator-() const { return {neg(x), neg(y)}; }
    Vec operator*(i64 k) const { return {mul(k, x), mul(k, y)}; }

    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline i64 det(const Vec& a, const Vec& b) { return sub(mul(a.x, b.y), mul(a.y, b.x)); }

inline bool is_primitive(const Vec& v) {
    return std::gcd(v.x, v.y) == 1; // excludes (0,0)
}

/// Element of GL(2,Z): |det| == 1, enforced at construction.
struct UnimodularMap {
    i64 a = 1, b = 0, c = 0, d = 1; // row major: (x,y) -> (ax+by, cx+dy)

    UnimodularMap() = default;
    UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_) {
        if (determinant() != 1 && determinant() != -1)
            throw std::invalid_argument("matrix is not unimodular");
    }

    i64 determinant() const { return sub(mul(a, d), mul(b, c)); }

    Vec apply(const Vec& v) const {
        return {add(mul(a, v.x), mul(b, v.y)), add(mul(c, v.x), mul(d, v.y))};
    }

    UnimodularMap compose(const UnimodularMap& o) const { // this ∘ o
        return UnimodularMap(add(mul(a, o.a), mul(b, o.c)), add(mul(a, o.b), mul(b, o.d)),
                             add(mul(c, o.a), mul(d, o.c)), add(mul(c, o.b), mul(d, o.d)));
    }

    UnimodularMap inverse() const {
        i64 dt = determinant(); // ±1, so the adjugate divided by dt stays integral
        return UnimodularMap(mul(d, dt), mul(neg(b), dt), mul(neg(c), dt), mul(a, dt));
    }

    /// The map with determinant +1 sending a primitive v to (1,0).
    static UnimodularMap sending_to_e1(const Vec& v);

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

inline UnimodularMap UnimodularMap::sending_to_e1(const Vec& v) {
    if (!is_primitive(v)) throw std::invalid_argument("vector is not primitive");
    // extended gcd: p*x + q*y == 1
    i64 old_r = v.x, r = v.y, old_p = 1, p = 0, old_q = 0, q = 1;
    while (r != 0) {
        i64 k = old_r / r;
        i64 t;
        t = sub(old_r, mul(k, r)); old_r = r; r = t;
        t = sub(old_p, mul(k, p)); old_p = p; p = t;
        t = sub(old_q, mul(k, q)); old_q = q; q = t;
    }
    if (old_r < 0) { old_p = neg(old_p); old_q = neg(old_q); }
    // [[p, q], [-y, x]] has det p*x + q*y = 1 and sends v to (1,0)
    return UnimodularMap(old_p, old_q, neg(v.y), v.x);
}

/// Exact rational point of N ⊗ Q.
struct RationalVec {
    Rational x;
    Rational y;
    friend bool operator==(const RationalVec&, const RationalVec&) = default;
};

} // namespace tldp
