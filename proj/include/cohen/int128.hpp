#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "cohen/errors.hpp"

namespace cohen {

using i128 = __int128;
using u128 = unsigned __int128;

// Checked signed arithmetic on the 128-bit accumulator. The builtins compile
// to a flag test, so these are safe to use in hot loops.

inline i128 add_exact(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
    return r;
}

inline i128 sub_exact(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
    return r;
}

inline i128 mul_exact(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
    return r;
}

inline std::int64_t add_exact64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit addition overflow");
    return r;
}

inline std::int64_t mul_exact64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
    return r;
}

// base^exp in uint64, throwing instead of wrapping.
inline std::uint64_t pow_exact_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) throw OverflowError("64-bit power overflow");
    }
    return r;
}

inline std::int64_t narrow_to_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw OverflowError(std::string(what) + ": value does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

inline std::string i128_to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    u128 u = neg ? u128(0) - u128(x) : u128(x);
    std::string s;
    while (u != 0) {
        s += char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

// Splits into 64-bit halves so the conversion keeps full double precision.
inline double i128_to_double(i128 x) {
    bool neg = x < 0;
    u128 u = neg ? u128(0) - u128(x) : u128(x);
    double hi = static_cast<double>(static_cast<std::uint64_t>(u >> 64));
    double lo = static_cast<double>(static_cast<std::uint64_t>(u));
    double r = hi * 18446744073709551616.0 + lo;
    return neg ? -r : r;
}

}  // namespace cohen
