#include "k3lattice/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3lattice {

int permutation_sign(int i, int j, int k, int l) {
    const int perm[4] = {i, j, k, l};
    for (int x : perm)
        if (x < 1 || x > 4) throw std::invalid_argument("permutation_sign: indices must be in 1..4");
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (perm[a] == perm[b]) return 0;
            if (perm[a] > perm[b]) sign = -sign;
        }
    return sign;
}

// Bareiss fraction-free elimination. Every division below is exact, so the
// whole computation stays in Integer.
Integer determinant(const IntegerMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row == k) return 0;
            a.swap_rows(k, pivot_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev_pivot;
            a(i, k) = 0;
        }
        prev_pivot = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) return 0;
        if (pivot_row != k) {
            a.swap_rows(k, pivot_row);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Nearest-integer quotient: |a - q*b| <= |b|/2. Keeping remainders at most
// half the pivot makes the reduction sweeps converge geometrically and keeps
// intermediate entries small.
Integer round_div(const Integer& a, const Integer& b) {
    Integer q = a / b; // truncated
    const Integer r = a - q * b;
    if (2 * abs_int(r) > abs_int(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

// Row/column elementary operations applied to the work matrix and mirrored
// onto the unimodular accumulators, keeping u * original * v == d at all times.
struct SnfWorker {
    IntegerMatrix d;
    IntegerMatrix u;
    IntegerMatrix v;

    explicit SnfWorker(const IntegerMatrix& m)
        : d(m),
          u(IntegerMatrix::identity(m.rows())),
          v(IntegerMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        d.swap_rows(a, b);
        u.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        d.swap_cols(a, b);
        v.swap_cols(a, b);
    }
    // row a -= q * row b
    void add_row(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) -= q * d(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) -= q * u(b, j);
    }
    // col a -= q * col b
    void add_col(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, a) -= q * d(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) -= q * v(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
    }
};

} // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
    SnfWorker w(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t steps = std::min(rows, cols);

    bool block_exhausted = false;
    for (std::size_t t = 0; t < steps && !block_exhausted; ++t) {
        for (;;) {
            // Re-select the entry of smallest nonzero absolute value in the
            // remaining block on every sweep: reducing against the current
            // global minimum caps the quotients and prevents the entry
            // explosion a stale pivot causes.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (w.d(i, j) == 0) continue;
                    if (!found || abs_int(w.d(i, j)) < abs_int(w.d(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                block_exhausted = true; // the rest of the diagonal stays zero
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            // One reduction sweep; leftover remainders are strictly smaller
            // than half the pivot, so the next sweep picks a smaller pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.d(i, t) == 0) continue;
                w.add_row(i, t, round_div(w.d(i, t), w.d(t, t)));
                if (w.d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.d(t, j) == 0) continue;
                w.add_col(j, t, round_div(w.d(t, j), w.d(t, t)));
                if (w.d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide every entry of the trailing block; fold an
            // offending row in and resume sweeping (the fold forces a
            // remainder, so the pivot strictly shrinks).
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        w.add_row(t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!block_exhausted && w.d(t, t) < 0) w.negate_row(t);
    }

    return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

namespace {

// Symmetric row+column operations on g, mirrored as column operations on p,
// preserving p^T * original * p == g.
struct CongruenceWorker {
    RationalMatrix g;
    RationalMatrix p;

    explicit CongruenceWorker(const RationalMatrix& m)
        : g(m), p(RationalMatrix::identity(m.rows())) {}

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        g.swap_rows(a, b);
        g.swap_cols(a, b);
        p.swap_cols(a, b);
    }
    // basis vector a += c * basis vector b: row/col a of g gain c times row/col b
    void add(std::size_t a, std::size_t b, const Rational& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < g.cols(); ++j) g(a, j) += c * g(b, j);
        for (std::size_t i = 0; i < g.rows(); ++i) g(i, a) += c * g(i, b);
        for (std::size_t i = 0; i < p.rows(); ++i) p(i, a) += c * p(i, b);
    }
};

} // namespace

CongruenceResult congruence_diagonalize(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("congruence_diagonalize: matrix must be square");
    if (!m.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix must be symmetric");
    const std::size_t n = m.rows();
    CongruenceWorker w(m);

    for (std::size_t k = 0; k < n; ++k) {
        if (w.g(k, k) == 0) {
            std::size_t nonzero_diag = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (w.g(i, i) != 0) {
                    nonzero_diag = i;
                    break;
                }
            if (nonzero_diag < n) {
                w.swap(k, nonzero_diag);
            } else {
                // All remaining diagonal entries vanish. If some off-diagonal
                // entry survives, folding that basis vector in creates a
                // nonzero diagonal (2*g(k,i) since g(i,i) == 0).
                std::size_t oi = n, oj = n;
                for (std::size_t i = k; i < n && oi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (w.g(i, j) != 0) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == n) break; // remaining block is zero
                w.swap(k, oi);      // oj > oi >= k, so the entry lands at (k, oj)
                w.add(k, oj, Rational(1));
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.g(i, k) == 0) continue;
            w.add(i, k, -w.g(i, k) / w.g(k, k));
        }
    }

    return CongruenceResult{std::move(w.p), std::move(w.g)};
}

Signature signature(const RationalMatrix& m) {
    const CongruenceResult c = congruence_diagonalize(m);
    Signature s;
    for (std::size_t k = 0; k < c.d.rows(); ++k) {
        const Rational& x = c.d(k, k);
        if (x > 0)
            ++s.n_plus;
        else if (x < 0)
            ++s.n_minus;
        else
            ++s.n_zero;
    }
    return s;
}

Signature signature(const IntegerMatrix& m) { return signature(to_rational(m)); }

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && a(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) throw std::runtime_error("inverse: matrix is singular");
        if (pivot_row != k) {
            a.swap_rows(k, pivot_row);
            inv.swap_rows(k, pivot_row);
        }
        const Rational pivot = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace k3lattice
