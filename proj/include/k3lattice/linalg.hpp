#pragma once

#include "k3lattice/matrix.hpp"

#include <cstdint>
#include <vector>

namespace k3lattice {

/// Sign of the permutation (1,2,3,4) -> (i,j,k,l): 0 if an index repeats,
/// +1/-1 by parity otherwise. Arguments must lie in 1..4.
int permutation_sign(int i, int j, int k, int l);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

/// Exact determinant by rational Gaussian elimination.
Rational determinant(const RationalMatrix& m);

// Smith normal form U*M*V = D: U, V square unimodular, D diagonal with
// nonnegative entries and d1 | d2 | ... | dk followed by zeros.
struct SnfResult {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
};

SnfResult smith_normal_form(const IntegerMatrix& m);

// Congruence diagonalization P^T * G * P = D for symmetric G; P invertible,
// D diagonal. Throws std::invalid_argument on asymmetric input.
struct CongruenceResult {
    RationalMatrix p;
    RationalMatrix d;
};

CongruenceResult congruence_diagonalize(const RationalMatrix& g);

struct Signature {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    std::int64_t tau() const {
        return static_cast<std::int64_t>(n_plus) - static_cast<std::int64_t>(n_minus);
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const RationalMatrix& g);
Signature signature(const IntegerMatrix& g);

/// Exact inverse via Gauss-Jordan. Throws std::invalid_argument on a
/// non-square matrix and std::runtime_error on a singular one.
RationalMatrix inverse(const RationalMatrix& m);

} // namespace k3lattice
