#pragma once

#include "k3lattice/numeric.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace k3lattice {

// The 22-dimensional cycle space over the ordered basis
//   L1, ..., L16, T12, T13, T14, T23, T24, T34.
// All matrices and file output use this order.

inline constexpr std::size_t cycle_rank = 22;
inline constexpr std::size_t l_count = 16;

/// Basis slot of L_label, label in 1..16.
std::size_t l_index(int label);

/// Basis slot of T_pq, 1 <= p < q <= 4.
std::size_t t_index(int p, int q);

const std::array<std::string, cycle_rank>& cycle_basis_names();

class CycleClass {
public:
    CycleClass() = default;

    static CycleClass l_class(int label);
    static CycleClass t_class(int p, int q);

    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool is_integral() const;

    /// Human-readable combination, e.g. "1/2 L1 - 1/2 T12"; "0" when zero.
    std::string to_string() const;

    CycleClass& operator+=(const CycleClass& o);
    CycleClass& operator-=(const CycleClass& o);
    CycleClass& operator*=(const Rational& s);

    friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
    friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
    friend CycleClass operator*(const Rational& s, CycleClass c) { return c *= s; }
    friend CycleClass operator*(CycleClass c, const Rational& s) { return c *= s; }
    CycleClass operator-() const;

    friend bool operator==(const CycleClass&, const CycleClass&) = default;

private:
    std::array<Rational, cycle_rank> coeffs_{};
};

} // namespace k3lattice
