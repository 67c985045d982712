#include "k3lattice/lattice.hpp"

#include <string>
#include <utility>

namespace k3lattice {

IntegralLattice::IntegralLattice(IntegerMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw std::invalid_argument("IntegralLattice: Gram matrix must be square");
    if (!gram_.is_symmetric())
        throw std::invalid_argument("IntegralLattice: Gram matrix must be symmetric");
}

IntegralLattice e8_minus() {
    // Negative of the E8 Gram matrix in the standard root order: nodes
    // 1-3-4-5-6-7-8 form a chain and node 2 hangs off node 4.
    IntegerMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    const std::pair<int, int> edges[] = {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    for (const auto& [a, b] : edges) {
        g(a - 1, b - 1) = 1;
        g(b - 1, a - 1) = 1;
    }
    return IntegralLattice(std::move(g));
}

IntegralLattice hyperbolic_h() {
    IntegerMatrix g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return IntegralLattice(std::move(g));
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: need at least one summand");
    std::size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    IntegerMatrix g(n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
        const auto& block = p.gram();
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) g(off + i, off + j) = block(i, j);
        off += block.rows();
    }
    return IntegralLattice(std::move(g));
}

LatticeInvariants invariants(const IntegralLattice& lattice) {
    const IntegerMatrix& g = lattice.gram();
    LatticeInvariants inv;
    inv.rank = lattice.rank();
    const Signature s = signature(g);
    inv.n_plus = s.n_plus;
    inv.n_minus = s.n_minus;
    inv.n_zero = s.n_zero;
    inv.tau = s.tau();
    inv.determinant = determinant(g);
    inv.even = true;
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (g(i, i) % 2 != 0) {
            inv.even = false;
            break;
        }
    inv.unimodular = (inv.determinant == 1 || inv.determinant == -1);
    const SnfResult snf = smith_normal_form(g);
    for (std::size_t i = 0; i < inv.rank; ++i)
        if (snf.d(i, i) != 0) inv.elementary_divisors.push_back(snf.d(i, i));
    return inv;
}

MilnorDecomposition milnor_decomposition(std::int64_t rank, std::int64_t tau) {
    MilnorDecomposition out;
    std::int64_t t = tau;
    if (t > 0) {
        out.sign_flipped = true;
        t = -t;
    }
    if (t % 8 != 0)
        throw classification_error("signature " + std::to_string(tau) +
                                   " is not divisible by 8, the form cannot be even unimodular");
    if ((rank + t) % 2 != 0)
        throw classification_error("rank " + std::to_string(rank) + " and signature " +
                                   std::to_string(tau) + " have different parities");
    if (rank < -t)
        throw classification_error("rank " + std::to_string(rank) +
                                   " is smaller than |signature| " + std::to_string(-t) +
                                   ", no such form exists");
    if (rank == -t)
        throw classification_error("rank equals |signature|, the form is definite and the "
                                   "indefinite classification does not apply");
    out.e8_minus_copies = -t / 8;
    out.h_copies = (rank + t) / 2;
    return out;
}

Integer sublattice_index_from_determinants(const Integer& det_sub, const Integer& det_full) {
    if (det_full == 0)
        throw std::invalid_argument("sublattice_index_from_determinants: det_full must be nonzero");
    if (det_sub == 0)
        throw inconsistency_error("sublattice determinant is zero, so the sublattice is degenerate "
                                  "and has no finite index");
    if ((det_sub < 0) != (det_full < 0))
        throw inconsistency_error("determinants " + format_integer(det_sub) + " and " +
                                  format_integer(det_full) +
                                  " differ in sign, impossible for a finite-index sublattice");
    if (det_sub % det_full != 0)
        throw inconsistency_error("determinant ratio " + format_integer(det_sub) + "/" +
                                  format_integer(det_full) + " is not an integer");
    const Integer ratio = det_sub / det_full;
    const auto root = exact_sqrt(ratio);
    if (!root)
        throw inconsistency_error("determinant ratio " + format_integer(ratio) +
                                  " is not a perfect square, no integer index exists");
    return *root;
}

} // namespace k3lattice
