#pragma once

#include "k3lattice/linalg.hpp"
#include "k3lattice/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace k3lattice {

/// Raised when invariants fall outside the scope of the even indefinite
/// unimodular classification; the message names the failed condition.
struct classification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when claimed lattice data cannot satisfy the identity it is
/// supposed to witness (e.g. a determinant ratio that is no square).
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An integral lattice given by its Gram matrix (square, symmetric, integer).
class IntegralLattice {
public:
    explicit IntegralLattice(IntegerMatrix gram);

    const IntegerMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }

private:
    IntegerMatrix gram_;
};

struct LatticeInvariants {
    std::size_t rank = 0;
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    std::int64_t tau = 0;
    Integer determinant;
    bool even = false;
    bool unimodular = false;
    std::vector<Integer> elementary_divisors;
};

/// The negative-definite even unimodular rank-8 lattice E8(-1).
IntegralLattice e8_minus();

/// The hyperbolic plane H = [[0,1],[1,0]].
IntegralLattice hyperbolic_h();

/// Block-diagonal sum; throws std::invalid_argument on an empty list.
IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);

LatticeInvariants invariants(const IntegralLattice& lattice);

// Classification of even indefinite unimodular forms by (rank, signature):
// (-tau/8) copies of E8(-1) plus ((rank+tau)/2) copies of H. Only the
// tau <= 0 branch is evaluated; a positive tau classifies the negated form
// and reports the flip.
struct MilnorDecomposition {
    std::int64_t e8_minus_copies = 0;
    std::int64_t h_copies = 0;
    bool sign_flipped = false;

    friend bool operator==(const MilnorDecomposition&, const MilnorDecomposition&) = default;
};

MilnorDecomposition milnor_decomposition(std::int64_t rank, std::int64_t tau);

/// Index of a finite-index sublattice from det_sub = index^2 * det_full.
/// Throws std::invalid_argument when det_full == 0 and inconsistency_error
/// when no integer index can satisfy the identity.
Integer sublattice_index_from_determinants(const Integer& det_sub, const Integer& det_full);

} // namespace k3lattice
