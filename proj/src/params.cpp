#include <cuboidforge/params.hpp>

#include <numeric>

namespace cuboidforge {

namespace {

u128 abs_diff(u128 a, u128 b) { return a > b ? a - b : b - a; }

u64 gcd4(u64 a, u64 b, u64 c, u64 d) {
    return std::gcd(std::gcd(a, b), std::gcd(c, d));
}

} // namespace

PythagoreanQuadruple quadruple_from_params(const QuadrupleParams& pr) {
    if (pr.m == 0 && pr.n == 0 && pr.p == 0 && pr.q == 0)
        throw std::invalid_argument("quadruple_from_params: all parameters are zero");
    u128 mn = checked_add(sq(pr.m), sq(pr.n));
    u128 pq = checked_add(sq(pr.p), sq(pr.q));
    u128 cross1 = checked_add(checked_mul(pr.m, pr.p), checked_mul(pr.n, pr.q)); // mp+nq
    u128 cross2 = abs_diff(checked_mul(pr.m, pr.q), checked_mul(pr.n, pr.p));    // |mq-np|
    PythagoreanQuadruple quad{};
    quad.w = checked_narrow(abs_diff(mn, pq), "quadruple component w");
    quad.x = checked_narrow(checked_mul(2, cross1), "quadruple component x");
    quad.y = checked_narrow(checked_mul(2, cross2), "quadruple component y");
    quad.z = checked_narrow(checked_add(mn, pq), "quadruple component z");
    quad.degenerate = quad.w == 0 || quad.x == 0 || quad.y == 0;
    quad.primitive = gcd4(quad.w, quad.x, quad.y, quad.z) == 1;
    return quad;
}

PerfectConditions perfect_conditions(const QuadrupleParams& pr) {
    PerfectConditions pc{};
    pc.quadruple = quadruple_from_params(pr);
    pc.sum_xy = checked_add(sq(pc.quadruple.x), sq(pc.quadruple.y));
    pc.sum_wx = checked_add(sq(pc.quadruple.w), sq(pc.quadruple.x));
    pc.sum_wy = checked_add(sq(pc.quadruple.w), sq(pc.quadruple.y));
    auto probe = [](u128 v, bool& flag, std::optional<u64>& root) {
        u128 s = isqrt(v);
        flag = s * s == v;
        if (flag) root = static_cast<u64>(s);
    };
    probe(pc.sum_xy, pc.xy_square, pc.root_xy);
    probe(pc.sum_wx, pc.wx_square, pc.root_wx);
    probe(pc.sum_wy, pc.wy_square, pc.root_wy);
    pc.degenerate = pc.quadruple.degenerate;
    return pc;
}

SharedLegTriplePair shared_leg_forward(const SharedLegParams& pr) {
    if (pr.m1 == 0 || pr.m2 == 0 || pr.n1 == 0 || pr.n2 == 0)
        throw std::invalid_argument("shared_leg_forward: parameters must be positive");
    u128 m1n1 = checked_mul(pr.m1, pr.n1);
    u128 m2n2 = checked_mul(pr.m2, pr.n2);
    u128 m2n1 = checked_mul(pr.m2, pr.n1);
    u128 m1n2 = checked_mul(pr.m1, pr.n2);
    if ((m1n1 & 1) != (m2n2 & 1) || (m2n1 & 1) != (m1n2 & 1))
        throw std::invalid_argument(
            "shared_leg_forward: parity violation, m1*n1 and m2*n2 (and m2*n1 and m1*n2) "
            "must have equal parity for integer b, c, d, e");
    u128 msq_lo = sq(pr.m1), msq_hi = sq(pr.m2);
    u128 nsq_1 = sq(pr.n1), nsq_2 = sq(pr.n2);
    if (msq_hi == msq_lo || nsq_1 == nsq_2)
        throw std::invalid_argument("shared_leg_forward: degenerate, a^2 = 0");
    bool m_pos = msq_hi > msq_lo; // sign of (m2^2 - m1^2)
    bool n_pos = nsq_1 > nsq_2;   // sign of (n1^2 - n2^2)
    if (m_pos != n_pos)
        throw std::invalid_argument(
            "shared_leg_forward: (m2^2-m1^2)(n1^2-n2^2) is negative, a^2 has no solution");

    SharedLegTriplePair out{};
    out.a_squared = checked_mul(abs_diff(msq_hi, msq_lo), abs_diff(nsq_1, nsq_2)) / 4;
    out.b = checked_narrow(checked_add(m1n1, m2n2) / 2, "shared-leg b");
    out.c = checked_narrow(abs_diff(m2n2, m1n1) / 2, "shared-leg c");
    out.d = checked_narrow(checked_add(m2n1, m1n2) / 2, "shared-leg d");
    out.e = checked_narrow(abs_diff(m1n2, m2n1) / 2, "shared-leg e");
    out.c_zero = out.c == 0;
    out.e_zero = out.e == 0;
    u128 s = isqrt(out.a_squared);
    out.a_is_square = s * s == out.a_squared;
    if (out.a_is_square) out.a = static_cast<u64>(s);
    return out;
}

SharedLegParams shared_leg_inverse(u64 b, u64 c, u64 d, u64 e) {
    if (b == 0 || d == 0)
        throw std::invalid_argument("shared_leg_inverse: b and d must be positive");
    if (b <= c) throw std::invalid_argument("shared_leg_inverse: requires b > c");
    if (d <= e) throw std::invalid_argument("shared_leg_inverse: requires d > e");
    if (checked_add(sq(b), sq(e)) != checked_add(sq(d), sq(c)))
        throw std::invalid_argument("shared_leg_inverse: b^2 - c^2 != d^2 - e^2");
    u64 k = std::gcd(b - c, d - e);
    u64 m1 = (b - c) / k;
    u64 m2 = (d - e) / k;
    if ((d - e) % m2 != 0)
        throw std::invalid_argument("shared_leg_inverse: m2 does not divide d - e");
    u64 n1 = (d - e) / m2;
    if ((u128(d) + e) % m1 != 0)
        throw std::invalid_argument("shared_leg_inverse: m1 does not divide d + e, "
                                    "the divisibility step fails for this input");
    u64 n2 = checked_narrow((u128(d) + e) / m1, "shared-leg n2");
    return {m1, m2, n1, n2};
}

namespace {

Cuboid saunderson_cuboid(u64 x, u64 y, u64 z, SaundersonVariant variant) {
    u128 zz = sq(z);
    u128 first = checked_mul(x, abs_diff(checked_mul(4, sq(y)), zz));
    u128 second = variant == SaundersonVariant::Classical
                      ? checked_mul(y, abs_diff(checked_mul(4, sq(x)), zz))
                      : checked_mul(y, abs_diff(sq(x), zz));
    u128 third = checked_mul(checked_mul(4, checked_mul(x, y)), z);
    return Cuboid(checked_narrow(first, "saunderson edge"),
                  checked_narrow(second, "saunderson edge"),
                  checked_narrow(third, "saunderson edge"));
}

std::vector<std::string> failing_diagonals(const DiagonalReport& rep) {
    std::vector<std::string> out;
    if (!rep.d_ab) out.push_back("d_ab");
    if (!rep.d_ac) out.push_back("d_ac");
    if (!rep.d_bc) out.push_back("d_bc");
    return out;
}

} // namespace

SaundersonResult saunderson(u64 x, u64 y, u64 z, SaundersonVariant variant) {
    if (x == 0 || y == 0 || z == 0)
        throw std::invalid_argument("saunderson: triple components must be positive");
    if (checked_add(sq(x), sq(y)) != sq(z))
        throw std::invalid_argument("saunderson: (x, y, z) is not a Pythagorean triple");
    Cuboid k = saunderson_cuboid(x, y, z, variant);
    return {k, classify(k)};
}

SaundersonAudit saunderson_audit(u64 x, u64 y, u64 z) {
    SaundersonAudit audit{saunderson(x, y, z, SaundersonVariant::Classical),
                          saunderson(x, y, z, SaundersonVariant::AsPrinted),
                          {},
                          {},
                          false};
    audit.classical_failing_diagonals = failing_diagonals(diagonal_report(audit.classical.cuboid));
    audit.as_printed_failing_diagonals =
        failing_diagonals(diagonal_report(audit.as_printed.cuboid));
    audit.variants_agree = audit.classical.cuboid == audit.as_printed.cuboid;
    return audit;
}

LalBlundonResult lal_blundon(u64 m, u64 n, u64 p, u64 q) {
    if (m == 0 || n == 0 || p == 0 || q == 0)
        throw std::invalid_argument("lal_blundon: parameters must be positive");
    if (m == n || p == q)
        throw std::invalid_argument("lal_blundon: m != n and p != q required (zero edge)");
    u128 mn = checked_mul(m, n), pq = checked_mul(p, q);
    u64 x = checked_narrow(checked_mul(checked_mul(2, mn), pq), "lal-blundon x");
    u64 y = checked_narrow(checked_mul(mn, abs_diff(sq(p), sq(q))), "lal-blundon y");
    u64 z = checked_narrow(checked_mul(pq, abs_diff(sq(m), sq(n))), "lal-blundon z");
    u64 dxy = checked_narrow(checked_mul(mn, checked_add(sq(p), sq(q))), "lal-blundon diag");
    u64 dxz = checked_narrow(checked_mul(pq, checked_add(sq(m), sq(n))), "lal-blundon diag");
    u128 yz = checked_add(sq(y), sq(z));
    u128 s = isqrt(yz);
    bool yz_square = s * s == yz;
    Cuboid cuboid(x, y, z);
    return {x,   y,        z,
            cuboid,        dxy,
            dxz, yz_square,
            yz_square ? std::optional<u64>(static_cast<u64>(s)) : std::nullopt,
            classify(cuboid)};
}

} // namespace cuboidforge
