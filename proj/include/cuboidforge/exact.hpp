// Exact integer primitives: integer square root, perfect-square testing,
// gcd, and square-free decomposition. No floating point anywhere; results
// are exact on the full domain.
#pragma once

#include <cuboidforge/checked.hpp>

namespace cuboidforge {

// n = k^2 * r with r square-free. The decomposition is unique.
struct SquareDecomposition {
    u64 k;
    u64 r;
    bool operator==(const SquareDecomposition&) const = default;
};

// Largest s with s^2 <= n. Total on [0, 2^128).
u128 isqrt(u128 n) noexcept;

inline bool is_perfect_square(u128 n) noexcept {
    u128 s = isqrt(n);
    return s * s == n;
}

// gcd(a, 0) = a. Rejects (0, 0), which has no greatest common divisor.
u64 gcd(u64 a, u64 b);

// Trial division up to the cube root, then a perfect-square check on the
// remainder (which can only be 1, p, p^2, or pq at that point). Rejects 0.
SquareDecomposition square_free_decompose(u64 n);

} // namespace cuboidforge
