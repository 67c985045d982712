#include "k3lattice/cycle_space.hpp"

#include <stdexcept>

namespace k3lattice {

std::size_t l_index(int label) {
    if (label < 1 || label > static_cast<int>(l_count))
        throw std::invalid_argument("l_index: label must be in 1..16");
    return static_cast<std::size_t>(label - 1);
}

std::size_t t_index(int p, int q) {
    if (!(1 <= p && p < q && q <= 4))
        throw std::invalid_argument("t_index: need 1 <= p < q <= 4");
    // (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
    static constexpr int offset[4][5] = {
        {0, 0, 0, 1, 2},
        {0, 0, 0, 3, 4},
        {0, 0, 0, 0, 5},
        {0, 0, 0, 0, 0},
    };
    return l_count + static_cast<std::size_t>(offset[p - 1][q]);
}

const std::array<std::string, cycle_rank>& cycle_basis_names() {
    static const std::array<std::string, cycle_rank> names = [] {
        std::array<std::string, cycle_rank> n;
        for (int i = 1; i <= static_cast<int>(l_count); ++i)
            n[l_index(i)] = "L" + std::to_string(i);
        for (int p = 1; p <= 4; ++p)
            for (int q = p + 1; q <= 4; ++q)
                n[t_index(p, q)] = "T" + std::to_string(p) + std::to_string(q);
        return n;
    }();
    return names;
}

CycleClass CycleClass::l_class(int label) {
    CycleClass c;
    c.coeffs_[l_index(label)] = 1;
    return c;
}

CycleClass CycleClass::t_class(int p, int q) {
    CycleClass c;
    c.coeffs_[t_index(p, q)] = 1;
    return c;
}

bool CycleClass::is_zero() const {
    for (const auto& x : coeffs_)
        if (x != 0) return false;
    return true;
}

bool CycleClass::is_integral() const {
    for (const auto& x : coeffs_)
        if (!::k3lattice::is_integral(x)) return false;
    return true;
}

std::string CycleClass::to_string() const {
    const auto& names = cycle_basis_names();
    std::string out;
    for (std::size_t i = 0; i < cycle_rank; ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1) out += format_rational(mag) + " ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

CycleClass& CycleClass::operator+=(const CycleClass& o) {
    for (std::size_t i = 0; i < cycle_rank; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& o) {
    for (std::size_t i = 0; i < cycle_rank; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycleClass& CycleClass::operator*=(const Rational& s) {
    for (auto& x : coeffs_) x *= s;
    return *this;
}

CycleClass CycleClass::operator-() const {
    CycleClass c = *this;
    for (auto& x : c.coeffs_) x = -x;
    return c;
}

} // namespace k3lattice
