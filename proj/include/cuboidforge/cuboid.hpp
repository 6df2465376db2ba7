// Cuboid model: the four diagonal quantities, classification, and
// primitive reduction.
//
// Naming convention used throughout: for canonical edges a <= b <= c,
//   d_ab^2 = a^2 + b^2,   d_ac^2 = a^2 + c^2,   d_bc^2 = b^2 + c^2,
//   g^2    = a^2 + b^2 + c^2  (space diagonal).
#pragma once

#include <cuboidforge/exact.hpp>

#include <compare>
#include <numeric>
#include <optional>
#include <string>

namespace cuboidforge {

// Integer edges, canonicalized to a <= b <= c on construction. Equal edges
// are accepted and classified honestly (no cuboid with an integer diagonal
// over an equal pair exists, since 2a^2 is never a perfect square).
struct Cuboid {
    u64 a, b, c;

    Cuboid(u64 x, u64 y, u64 z);
    auto operator<=>(const Cuboid&) const = default;
};

struct DiagonalReport {
    std::optional<u64> d_ab, d_ac, d_bc; // engaged iff the face diagonal is integer
    std::optional<u64> g;                // engaged iff the space diagonal is integer
    u128 sq_ab, sq_ac, sq_bc, sq_g;      // the exact sums of squares

    int integer_face_count() const {
        return int(d_ab.has_value()) + int(d_ac.has_value()) + int(d_bc.has_value());
    }
};

// Which of the four diagonal quantities are integers. Edge (an irrational
// edge with everything else integer) cannot arise for integer-edge inputs;
// the value exists for completeness and is never produced by classify().
enum class CuboidClass { NoneIntegral, OneDiag, TwoDiag, Body, Edge, Face, Perfect };

std::string to_string(CuboidClass cls);
CuboidClass cuboid_class_from_string(const std::string& label);

DiagonalReport diagonal_report(const Cuboid& cuboid);

CuboidClass classify(const Cuboid& cuboid);
CuboidClass classify(const DiagonalReport& report);

// Divides all edges by gcd(a, b, c). Classification is invariant under this.
Cuboid primitive_reduce(const Cuboid& cuboid);

inline bool is_primitive(const Cuboid& k) { return std::gcd(std::gcd(k.a, k.b), k.c) == 1; }

// Known divisibility constraint on any perfect cuboid: the product of its
// sides and diagonals would be divisible by 2^8 3^4 5^3 7 11 13 17 19 29 37.
// Recorded for documentation; untestable while no perfect cuboid is known.
inline constexpr u64 perfect_cuboid_product_divisor = 899231100768000ULL;

} // namespace cuboidforge
