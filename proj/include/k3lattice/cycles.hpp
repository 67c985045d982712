#pragma once

#include "k3lattice/cycle_space.hpp"
#include "k3lattice/lattice.hpp"
#include "k3lattice/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3lattice {

// Intersection pairing on the L/T basis:
//   [L_i] . [L_j]   = -2 delta_ij
//   [T_ij] . [T_kl] = 2 eps_ijkl
//   [T_ij] . [L_k]  = 0
const IntegerMatrix& intersection_form_lt();

Rational pairing(const CycleClass& a, const CycleClass& b);

// Spheres obtained by desingularizing an involution-invariant torus through
// four fixed points; every one has the shape
//   [S] = -1/2 (L_i + L_j + L_k + L_m) + 1/2 [T-part].
struct NamedSCycle {
    std::string name;            // subscript notation, e.g. "S1357", "S129(10)"
    std::array<int, 4> labels;   // in subscript order
    CycleClass cycle;
};

/// The eleven named S-cycles: the four x4=0 spheres, their +8-shifted
/// copies in the x4=1/2 group, and the three mixed-group spheres.
const std::vector<NamedSCycle>& named_s_cycles();

/// Lookup by name; throws std::invalid_argument on an unknown name.
CycleClass s_cycle(std::string_view name);

/// Remark-1 sign variant: eps[0..3] scale the coefficients of the four
/// L-indices (ascending label order), eps[4] scales the T-part. All eps
/// must be +1 or -1 and s must be S-shaped (four L-coefficients +-1/2, the
/// rest zero, T-coefficients half-integral).
CycleClass sign_variant(const CycleClass& s, const std::array<int, 5>& eps);

// The canonical basis. w[0..21] hold w1..w22; the primed cycles are the
// pre-correction generators of the second lattice block, related by
//   w18 = w'18 + w17
//   w20 = w'20 + w17 + w19
//   w22 = w'22 + w17 + w19 + w21.
struct CanonicalBasis {
    std::array<CycleClass, cycle_rank> w;
    CycleClass w_prime_18;
    CycleClass w_prime_20;
    CycleClass w_prime_22;
};

const CanonicalBasis& build_canonical_basis();

/// Matrix of pairwise intersection numbers.
RationalMatrix gram_of(const std::vector<CycleClass>& cycles);

struct VerificationReport {
    IntegerMatrix gram_w;            // 22x22 Gram of w1..w22 (zero if non-integral)
    bool matches_canonical = false;  // gram_w == E8(-1) + E8(-1) + H + H + H
    bool lambda1_matches = false;    // gram(w1..w16) == E8(-1) + E8(-1)
    bool lambda2_primed_matches = false; // gram(w17,w'18,w19,w'20,w21,w'22) == fixed 6x6
    bool lambda2_h3_matches = false; // gram(w17..w22) == H + H + H
    bool blocks_orthogonal = false;  // pairing(w_a, w_b) = 0 for a<=16<b
    bool pairings_integral = false;  // every entry of gram(w) is an integer
    Integer det_lt;                  // determinant of the L/T Gram
    Integer det_w;                   // determinant of the w Gram
    Integer index;                   // [H2 : LT-span], 0 if inconsistent
    std::vector<std::string> notes;
};

/// Runs every check and reports; mismatches are recorded, never thrown.
VerificationReport verify_canonical();

std::string report_to_text(const VerificationReport& report);

// Base change between the w-basis and the L/T basis: column j of b holds
// w_{j+1} over L/T; b_inv writes each L_i and T_pq over the w-basis.
struct ChangeOfBasis {
    RationalMatrix b;
    RationalMatrix b_inv;
    bool lt_in_w_integral = false;
};

ChangeOfBasis change_of_basis();

// Decomposition [T_pq] = 2[S] + L_i + L_j + L_k + L_m using a named S-cycle
// whose T-part is +-[T_pq]; a minus sign is absorbed by the eps_t = -1
// variant of the cycle.
struct SphericalDecomposition {
    std::string s_name;
    CycleClass s_used;
    bool t_sign_flipped = false;
    std::array<int, 4> l_labels; // ascending
};

/// nullopt when no named S-cycle carries +-[T_pq] as its whole T-part.
/// Throws std::invalid_argument unless 1 <= p < q <= 4.
std::optional<SphericalDecomposition> spherical_decomposition(int p, int q);

} // namespace k3lattice
