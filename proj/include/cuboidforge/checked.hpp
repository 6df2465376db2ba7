// Checked 128-bit arithmetic helpers. All quantities in this library are
// exact non-negative integers; anything that cannot be represented exactly
// is reported via std::overflow_error instead of wrapping.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cuboidforge {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 u128_max = ~u128{0};

inline u128 checked_add(u128 a, u128 b) {
    if (a > u128_max - b) throw std::overflow_error("128-bit addition overflow");
    return a + b;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > u128_max / a) throw std::overflow_error("128-bit multiplication overflow");
    return a * b;
}

// a*a for a 64-bit value always fits in 128 bits.
inline constexpr u128 sq(u64 a) { return u128(a) * u128(a); }

inline u64 checked_narrow(u128 v, const char* what = "value") {
    if (v > u128(~std::uint64_t{0}))
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return static_cast<u64>(v);
}

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v > 0) {
        buf[--i] = char('0' + int(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

} // namespace cuboidforge
