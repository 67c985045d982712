#include "k3lattice/matrix.hpp"

namespace k3lattice {

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

std::optional<IntegerMatrix> to_integer(const RationalMatrix& m) {
    IntegerMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j))) return std::nullopt;
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

std::vector<Integer> diagonal_of(const IntegerMatrix& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<Integer> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(m(i, i));
    return d;
}

} // namespace k3lattice
