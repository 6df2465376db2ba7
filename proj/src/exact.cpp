#include <cuboidforge/exact.hpp>

#include <numeric>

namespace cuboidforge {

u128 isqrt(u128 n) noexcept {
    if (n < 2) return n;
    int bits = 128;
    u64 hi = static_cast<u64>(n >> 64);
    if (hi != 0)
        bits = 128 - __builtin_clzll(hi);
    else
        bits = 64 - __builtin_clzll(static_cast<u64>(n));
    // Newton iteration from an initial guess >= sqrt(n) lands on the floor.
    u128 x = u128(1) << ((bits + 1) / 2);
    u128 y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    // Exactness correction; x <= 2^64 - 1 here, so x*x and (x+1)^2 fit.
    while (x * x > n) --x;
    while (x < u128(~u64{0}) && (x + 1) * (x + 1) <= n) ++x;
    return x;
}

u64 gcd(u64 a, u64 b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

SquareDecomposition square_free_decompose(u64 n) {
    if (n == 0) throw std::invalid_argument("square_free_decompose: input must be positive");
    u64 k = 1, r = 1, m = n;
    for (u64 p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        u64 e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (u64 i = 0; i < e / 2; ++i) k *= p;
        if (e % 2) r *= p;
    }
    // m has no prime factor <= cbrt(m): it is 1, p, p^2, or pq.
    if (m > 1) {
        u64 s = static_cast<u64>(isqrt(m));
        if (s * s == m)
            k *= s;
        else
            r *= m;
    }
    return {k, r};
}

} // namespace cuboidforge
