#pragma once

#include "k3lattice/cycle_space.hpp"

#include <array>
#include <optional>

namespace k3lattice {

// The 16 fixed points of the involution z -> -z on T^4 = R^4 / Z^4 sit at
// the half-periods. Coordinates are stored doubled, so each coordinate is
// 0 or 1 and arithmetic happens in F_2^4.
struct HalfPeriod {
    std::array<int, 4> coords{}; // doubled half-period coordinates, in {0,1}
    int label = 0;               // 1..16

    friend bool operator==(const HalfPeriod&, const HalfPeriod&) = default;
};

/// All 16 fixed points in label order. Labels 1..8 have x4 = 0; label n+8
/// repeats the (x1,x2,x3) of label n with x4 = 1/2.
const std::array<HalfPeriod, 16>& fixed_points();

/// Fixed point by label; throws std::invalid_argument outside 1..16.
const HalfPeriod& fixed_point(int label);

// Two lattice vectors spanning a plane; must stay linearly independent
// mod 2 so the affine plane through a half-period meets exactly four of
// the fixed points.
struct DirectionPair {
    std::array<long long, 4> u{};
    std::array<long long, 4> v{};

    friend bool operator==(const DirectionPair&, const DirectionPair&) = default;
};

bool is_valid_direction_pair(const DirectionPair& dirs);

/// Labels of the four fixed points on {base + (s*u + t*v)/2 : s,t in {0,1}},
/// sorted ascending. Throws std::invalid_argument on a degenerate pair.
std::array<int, 4> points_on_plane(const HalfPeriod& base, const DirectionPair& dirs);

/// If the four labeled points form an affine plane in F_2^4, returns a
/// canonical spanning pair: the two lex-smallest nonzero difference vectors,
/// lifted to {0,1}^4 in Z^4 and ordered so the leading coefficient of their
/// bivector is positive. Returns nullopt otherwise. Throws
/// std::invalid_argument on repeated or out-of-range labels.
std::optional<DirectionPair> are_coplanar(const std::array<int, 4>& labels);

/// Expands u ^ v over the basis e_p ^ e_q and returns the corresponding
/// integer combination of [T_pq] classes. Throws std::invalid_argument on a
/// degenerate pair.
CycleClass torus_class_from_directions(const DirectionPair& dirs);

} // namespace k3lattice
