#include "k3lattice/kummer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k3lattice {

const std::array<HalfPeriod, 16>& fixed_points() {
    static const std::array<HalfPeriod, 16> points = [] {
        // Label order fixes (x1,x2,x3) for labels 1..8; labels 9..16 repeat
        // the pattern one level up in x4.
        constexpr std::array<std::array<int, 3>, 8> base = {{
            {0, 0, 0},
            {0, 0, 1},
            {1, 0, 0},
            {1, 0, 1},
            {1, 1, 0},
            {1, 1, 1},
            {0, 1, 0},
            {0, 1, 1},
        }};
        std::array<HalfPeriod, 16> pts;
        for (int n = 0; n < 16; ++n) {
            const auto& b = base[static_cast<std::size_t>(n % 8)];
            pts[static_cast<std::size_t>(n)] =
                HalfPeriod{{b[0], b[1], b[2], n < 8 ? 0 : 1}, n + 1};
        }
        return pts;
    }();
    return points;
}

const HalfPeriod& fixed_point(int label) {
    if (label < 1 || label > 16) throw std::invalid_argument("fixed_point: label must be in 1..16");
    return fixed_points()[static_cast<std::size_t>(label - 1)];
}

namespace {

std::array<int, 4> mod2(const std::array<long long, 4>& v) {
    std::array<int, 4> r{};
    for (std::size_t i = 0; i < 4; ++i) r[i] = static_cast<int>(((v[i] % 2) + 2) % 2);
    return r;
}

bool is_zero4(const std::array<int, 4>& v) {
    return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0;
}

std::array<int, 4> xor4(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return {a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3]};
}

int label_of_coords(const std::array<int, 4>& coords) {
    for (const auto& p : fixed_points())
        if (p.coords == coords) return p.label;
    throw std::logic_error("half-period coordinates out of range");
}

} // namespace

bool is_valid_direction_pair(const DirectionPair& dirs) {
    const auto u = mod2(dirs.u);
    const auto v = mod2(dirs.v);
    // Independent over F_2: both nonzero and distinct.
    return !is_zero4(u) && !is_zero4(v) && u != v;
}

std::array<int, 4> points_on_plane(const HalfPeriod& base, const DirectionPair& dirs) {
    if (!is_valid_direction_pair(dirs))
        throw std::invalid_argument("points_on_plane: direction pair is degenerate mod 2");
    const auto u = mod2(dirs.u);
    const auto v = mod2(dirs.v);
    std::array<int, 4> labels{};
    std::size_t k = 0;
    for (int s = 0; s <= 1; ++s)
        for (int t = 0; t <= 1; ++t) {
            std::array<int, 4> c = base.coords;
            if (s) c = xor4(c, u);
            if (t) c = xor4(c, v);
            labels[k++] = label_of_coords(c);
        }
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::optional<DirectionPair> are_coplanar(const std::array<int, 4>& labels) {
    std::set<int> distinct(labels.begin(), labels.end());
    if (distinct.size() != 4) throw std::invalid_argument("are_coplanar: labels must be distinct");
    for (int l : labels)
        if (l < 1 || l > 16) throw std::invalid_argument("are_coplanar: label out of range 1..16");

    // Four points of F_2^4 form an affine 2-flat iff they sum to zero:
    // p0+p1+p2+p3 == 0 means p3 = p0+p1+p2, the closure of the other three.
    std::array<int, 4> sum{};
    for (int l : labels) sum = xor4(sum, fixed_point(l).coords);
    if (!is_zero4(sum)) return std::nullopt;

    const auto& base = fixed_point(*distinct.begin()).coords;
    std::array<std::array<int, 4>, 3> diffs{};
    std::size_t k = 0;
    for (auto it = std::next(distinct.begin()); it != distinct.end(); ++it)
        diffs[k++] = xor4(fixed_point(*it).coords, base);
    std::sort(diffs.begin(), diffs.end());

    // The three differences are d, d', d+d'; the two lex-smallest span the
    // direction space. Lift 0/1 coordinates verbatim into Z^4, then order
    // the pair so the leading bivector coefficient comes out positive.
    DirectionPair pair;
    for (std::size_t i = 0; i < 4; ++i) {
        pair.u[i] = diffs[0][i];
        pair.v[i] = diffs[1][i];
    }
    const CycleClass bivector = torus_class_from_directions(pair);
    for (std::size_t t = l_count; t < cycle_rank; ++t) {
        if (bivector[t] == 0) continue;
        if (bivector[t] < 0) std::swap(pair.u, pair.v);
        break;
    }
    return pair;
}

CycleClass torus_class_from_directions(const DirectionPair& dirs) {
    if (!is_valid_direction_pair(dirs))
        throw std::invalid_argument("torus_class_from_directions: direction pair is degenerate mod 2");
    CycleClass c;
    for (int p = 1; p <= 4; ++p)
        for (int q = p + 1; q <= 4; ++q) {
            const long long coeff = dirs.u[static_cast<std::size_t>(p - 1)] *
                                        dirs.v[static_cast<std::size_t>(q - 1)] -
                                    dirs.u[static_cast<std::size_t>(q - 1)] *
                                        dirs.v[static_cast<std::size_t>(p - 1)];
            if (coeff != 0) c[t_index(p, q)] = coeff;
        }
    return c;
}

} // namespace k3lattice
