#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tldp {

using i64 = std::int64_t;

/// Thrown whenever a 64-bit intermediate would wrap. All arithmetic in the
/// library routes through these helpers, so results are exact or absent.
struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("i64 add overflow");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("i64 sub overflow");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("i64 mul overflow");
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

} // namespace tldp
