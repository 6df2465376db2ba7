// Parametric generators: the four-square quadruple identity with its three
// perfect-cuboid conditions, the shared-leg representation of two triples
// with a common leg (forward and inverse), Saunderson's formula in both
// printed variants, and the Lal-Blundon two-diagonal family.
#pragma once

#include <cuboidforge/cuboid.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cuboidforge {

struct QuadrupleParams {
    u64 m, n, p, q;
    auto operator<=>(const QuadrupleParams&) const = default;
};

// w^2 + x^2 + y^2 = z^2 exactly, z >= 1. degenerate marks a zero entry
// among w, x, y (no cuboid can be built from it).
struct PythagoreanQuadruple {
    u64 w, x, y, z;
    bool primitive;  // gcd(w, x, y, z) == 1
    bool degenerate; // some of w, x, y is zero
    bool operator==(const PythagoreanQuadruple&) const = default;
};

// (m^2+n^2+p^2+q^2)^2 = (m^2+n^2-p^2-q^2)^2 + 4(mp+nq)^2 + 4(mq-np)^2
// holds as an algebraic identity; the returned quadruple is
//   w = |m^2+n^2-p^2-q^2|, x = 2(mp+nq), y = 2|mq-np|, z = m^2+n^2+p^2+q^2.
// Rejects the all-zero parameter tuple.
PythagoreanQuadruple quadruple_from_params(const QuadrupleParams& params);

// The three extra square conditions a primitive perfect cuboid would force
// on a generated quadruple (w, x, y, z): each pairwise sum of squares of
// w, x, y must itself be a perfect square.
struct PerfectConditions {
    PythagoreanQuadruple quadruple;
    u128 sum_xy, sum_wx, sum_wy;                     // x^2+y^2, w^2+x^2, w^2+y^2
    bool xy_square, wx_square, wy_square;
    std::optional<u64> root_xy, root_wx, root_wy;
    bool degenerate;                                 // quadruple has a zero entry
};

PerfectConditions perfect_conditions(const QuadrupleParams& params);

// Two Pythagorean triples sharing leg a:
//   a^2 + b^2 = d^2 and a^2 + c^2 = e^2, with
//   a^2 = (m2^2-m1^2)(n1^2-n2^2)/4, b = (m1*n1+m2*n2)/2, c = |m2*n2-m1*n1|/2,
//   d = (m2*n1+m1*n2)/2, e = |m1*n2-m2*n1|/2.
// Integrality of b, c, d, e forces m1*n1 == m2*n2 and m2*n1 == m1*n2 (mod 2).
struct SharedLegParams {
    u64 m1, m2, n1, n2;
    auto operator<=>(const SharedLegParams&) const = default;
};

struct SharedLegTriplePair {
    u128 a_squared;            // shared leg squared; positive by construction
    u64 b, c, d, e;            // c and e are magnitudes; either may be zero
    bool a_is_square;
    std::optional<u64> a;      // engaged iff a_squared is a perfect square
    bool c_zero, e_zero;       // degenerate components
};

// Rejects parity violations, and rejects a_squared <= 0: zero with a
// "degenerate" diagnostic, negative (factors of opposite sign) with a
// distinct one. c = 0 and e = 0 are flagged, not rejected.
SharedLegTriplePair shared_leg_forward(const SharedLegParams& params);

// Recovers (m1, m2, n1, n2) from (b, c, d, e): m1/m2 is the reduced form of
// (b-c)/(d-e), n1 = (d-e)/m2, n2 = (d+e)/m1. Requires b > c, d > e and
// b^2 - c^2 = d^2 - e^2. The divisibility of n1 and n2 is checked, not
// assumed; failures get their own diagnostic.
SharedLegParams shared_leg_inverse(u64 b, u64 c, u64 d, u64 e);

// Saunderson's parametric family over a Pythagorean triple (x, y, z).
// The classical form (a, b, c) = (|x(4y^2-z^2)|, |y(4x^2-z^2)|, 4xyz) always
// yields an Euler brick; the as-printed variant replaces the middle edge by
// |y(x^2-z^2)| and does not.
enum class SaundersonVariant { Classical, AsPrinted };

struct SaundersonResult {
    Cuboid cuboid;
    CuboidClass cls;
};

SaundersonResult saunderson(u64 x, u64 y, u64 z,
                            SaundersonVariant variant = SaundersonVariant::Classical);

// Runs both variants on one triple and reports the per-variant class plus
// the names (d_ab/d_ac/d_bc) of any non-integer face diagonals, so a formula
// that fails to produce a brick is pinned to the diagonal that breaks.
struct SaundersonAudit {
    SaundersonResult classical;
    SaundersonResult as_printed;
    std::vector<std::string> classical_failing_diagonals;
    std::vector<std::string> as_printed_failing_diagonals;
    bool variants_agree;
};

SaundersonAudit saunderson_audit(u64 x, u64 y, u64 z);

// Lal-Blundon cuboid (|2mnpq|, |mn(p^2-q^2)|, |pq(m^2-n^2)|) with two
// certified integer face diagonals mn(p^2+q^2) over (x, y) and pq(m^2+n^2)
// over (x, z). It is an Euler brick iff y^2 + z^2 is a perfect square.
struct LalBlundonResult {
    u64 x, y, z;               // role edges before canonicalization
    Cuboid cuboid;
    u64 diag_xy, diag_xz;      // the certified diagonals
    bool yz_square;
    std::optional<u64> diag_yz;
    CuboidClass cls;
};

// Rejects m == n or p == q (a zero edge) and zero parameters.
LalBlundonResult lal_blundon(u64 m, u64 n, u64 p, u64 q);

} // namespace cuboidforge
