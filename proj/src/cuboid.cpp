#include <cuboidforge/cuboid.hpp>

#include <algorithm>
#include <array>

namespace cuboidforge {

Cuboid::Cuboid(u64 x, u64 y, u64 z) {
    if (x == 0 || y == 0 || z == 0)
        throw std::invalid_argument("cuboid edges must be positive");
    std::array<u64, 3> e{x, y, z};
    std::sort(e.begin(), e.end());
    a = e[0];
    b = e[1];
    c = e[2];
}

namespace {

std::optional<u64> exact_root(u128 n) {
    u128 s = isqrt(n);
    if (s * s != n) return std::nullopt;
    return static_cast<u64>(s); // sqrt of a u128 always fits in 64 bits
}

} // namespace

DiagonalReport diagonal_report(const Cuboid& k) {
    DiagonalReport rep{};
    rep.sq_ab = checked_add(sq(k.a), sq(k.b));
    rep.sq_ac = checked_add(sq(k.a), sq(k.c));
    rep.sq_bc = checked_add(sq(k.b), sq(k.c));
    rep.sq_g = checked_add(rep.sq_ab, sq(k.c));
    rep.d_ab = exact_root(rep.sq_ab);
    rep.d_ac = exact_root(rep.sq_ac);
    rep.d_bc = exact_root(rep.sq_bc);
    rep.g = exact_root(rep.sq_g);
    return rep;
}

CuboidClass classify(const DiagonalReport& rep) {
    int faces = rep.integer_face_count();
    bool space = rep.g.has_value();
    if (faces == 3) return space ? CuboidClass::Perfect : CuboidClass::Body;
    if (faces == 2 && space) return CuboidClass::Face;
    switch (faces + int(space)) {
    case 0: return CuboidClass::NoneIntegral;
    case 1: return CuboidClass::OneDiag;
    default: return CuboidClass::TwoDiag;
    }
}

CuboidClass classify(const Cuboid& cuboid) { return classify(diagonal_report(cuboid)); }

Cuboid primitive_reduce(const Cuboid& k) {
    u64 g = std::gcd(std::gcd(k.a, k.b), k.c);
    return Cuboid(k.a / g, k.b / g, k.c / g);
}

std::string to_string(CuboidClass cls) {
    switch (cls) {
    case CuboidClass::NoneIntegral: return "none";
    case CuboidClass::OneDiag: return "one-diag";
    case CuboidClass::TwoDiag: return "two-diag";
    case CuboidClass::Body: return "body";
    case CuboidClass::Edge: return "edge";
    case CuboidClass::Face: return "face";
    case CuboidClass::Perfect: return "perfect";
    }
    throw std::logic_error("unknown cuboid class");
}

CuboidClass cuboid_class_from_string(const std::string& label) {
    for (auto cls : {CuboidClass::NoneIntegral, CuboidClass::OneDiag, CuboidClass::TwoDiag,
                     CuboidClass::Body, CuboidClass::Edge, CuboidClass::Face, CuboidClass::Perfect})
        if (to_string(cls) == label) return cls;
    throw std::invalid_argument("unknown cuboid class label: " + label);
}

} // namespace cuboidforge
