#include "k3lattice/linalg.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace k3lattice;
using k3test::random_int;

TEST_CASE("permutation_sign") {
    CHECK(permutation_sign(1, 2, 3, 4) == 1);
    CHECK(permutation_sign(1, 2, 4, 3) == -1);
    CHECK(permutation_sign(1, 3, 2, 4) == -1);
    CHECK(permutation_sign(1, 4, 2, 3) == 1);
    CHECK(permutation_sign(3, 4, 1, 2) == 1);
    CHECK(permutation_sign(4, 3, 2, 1) == 1);
    CHECK(permutation_sign(1, 1, 2, 3) == 0);
    CHECK(permutation_sign(2, 4, 2, 4) == 0);
    CHECK_THROWS_AS(permutation_sign(0, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(permutation_sign(1, 2, 3, 5), std::invalid_argument);
}

TEST_CASE("integer determinant basics") {
    CHECK(determinant(IntegerMatrix::identity(5)) == 1);
    CHECK(determinant(IntegerMatrix(0, 0)) == 1);
    CHECK(determinant(IntegerMatrix(2, 2, {0, 1, 1, 0})) == -1);
    CHECK(determinant(IntegerMatrix(2, 2, {1, 2, 2, 4})) == 0);
    CHECK(determinant(IntegerMatrix(3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
    CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("integer determinant matches cofactor oracle") {
    std::mt19937_64 rng(123456);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 6));
        const IntegerMatrix m = k3test::random_integer_matrix(rng, n, n, -9, 9);
        CHECK(determinant(m) == k3test::cofactor_determinant(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(987);
    for (int iter = 0; iter < 100; ++iter) {
        const IntegerMatrix a = k3test::random_integer_matrix(rng, 4, 4, -5, 5);
        const IntegerMatrix b = k3test::random_integer_matrix(rng, 4, 4, -5, 5);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("rational determinant") {
    CHECK(determinant(RationalMatrix::identity(4)) == 1);
    const RationalMatrix m(2, 2,
                           {make_rational(1, 2), make_rational(1, 3), make_rational(1, 4),
                            make_rational(1, 5)});
    CHECK(determinant(m) == make_rational(1, 60));

    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 5));
        const IntegerMatrix a = k3test::random_integer_matrix(rng, n, n, -9, 9);
        CHECK(determinant(to_rational(a)) == Rational(determinant(a)));
    }
}

namespace {

bool is_diagonal(const IntegerMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

void check_snf_contract(const IntegerMatrix& m) {
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(is_diagonal(snf.d));
    const Integer det_u = determinant(snf.u);
    const Integer det_v = determinant(snf.v);
    CHECK((det_u == 1 || det_u == -1));
    CHECK((det_v == 1 || det_v == -1));
    const std::size_t n = std::min(m.rows(), m.cols());
    bool seen_zero = false;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(snf.d(i, i) >= 0);
        if (snf.d(i, i) == 0) {
            seen_zero = true;
        } else {
            CHECK_FALSE(seen_zero); // zeros only after all nonzero divisors
            if (i + 1 < n && snf.d(i + 1, i + 1) != 0)
                CHECK(snf.d(i + 1, i + 1) % snf.d(i, i) == 0);
        }
    }
    if (m.is_square()) {
        Integer prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= snf.d(i, i);
        const Integer det_m = determinant(m);
        CHECK((prod == det_m || prod == -det_m));
    }
}

} // namespace

TEST_CASE("smith normal form on fixed examples") {
    {
        const SnfResult snf = smith_normal_form(IntegerMatrix::identity(3));
        CHECK((diagonal_of(snf.d) == std::vector<Integer>{1, 1, 1}));
    }
    {
        const SnfResult snf = smith_normal_form(IntegerMatrix(2, 2, {4, 0, 0, 6}));
        CHECK((diagonal_of(snf.d) == std::vector<Integer>{2, 12}));
    }
    {
        // Zero matrix: all divisors zero.
        const SnfResult snf = smith_normal_form(IntegerMatrix(3, 3));
        CHECK((diagonal_of(snf.d) == std::vector<Integer>{0, 0, 0}));
    }
    {
        const SnfResult snf = smith_normal_form(IntegerMatrix(2, 2, {2, 4, 4, 8}));
        CHECK((diagonal_of(snf.d) == std::vector<Integer>{2, 0}));
    }
    check_snf_contract(IntegerMatrix(2, 3, {1, 2, 3, 4, 5, 6}));
    check_snf_contract(IntegerMatrix(3, 1, {5, 10, 15}));
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t rows = static_cast<std::size_t>(random_int(rng, 1, 6));
        const std::size_t cols = static_cast<std::size_t>(random_int(rng, 1, 6));
        check_snf_contract(k3test::random_integer_matrix(rng, rows, cols, -9, 9));
    }
}

TEST_CASE("congruence diagonalization") {
    CHECK_THROWS_AS(congruence_diagonalize(to_rational(IntegerMatrix(2, 3))),
                    std::invalid_argument);
    CHECK_THROWS_AS(congruence_diagonalize(to_rational(IntegerMatrix(2, 2, {0, 1, 2, 0}))),
                    std::invalid_argument);

    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 6));
        const RationalMatrix g =
            to_rational(k3test::random_symmetric_matrix(rng, n, -7, 7));
        const CongruenceResult c = congruence_diagonalize(g);
        CHECK(c.p.transpose() * g * c.p == c.d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(c.d(i, j) == 0);
        CHECK(determinant(c.p) != 0);
    }
}

TEST_CASE("signature on fixed forms") {
    CHECK((signature(IntegerMatrix(2, 2, {0, 1, 1, 0})) == Signature{1, 1, 0}));
    CHECK((signature(IntegerMatrix::identity(4)) == Signature{4, 0, 0}));
    CHECK((signature(IntegerMatrix(3, 3)) == Signature{0, 0, 3}));
    CHECK((signature(IntegerMatrix(2, 2, {2, 0, 0, -3})) == Signature{1, 1, 0}));
    CHECK((Signature{1, 1, 0}.tau() == 0));
    CHECK((Signature{0, 8, 0}.tau() == -8));
}

TEST_CASE("signature invariant under unimodular congruence") {
    std::mt19937_64 rng(271828);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 6));
        const IntegerMatrix g = k3test::random_symmetric_matrix(rng, n, -7, 7);
        const IntegerMatrix p = k3test::random_unimodular(rng, n, 12);
        const IntegerMatrix transformed = p.transpose() * g * p;
        CHECK(signature(transformed) == signature(g));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(RationalMatrix::identity(3)) == RationalMatrix::identity(3));
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(inverse(to_rational(IntegerMatrix(2, 2, {1, 2, 2, 4}))),
                    std::runtime_error);

    std::mt19937_64 rng(161803);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 6));
        const RationalMatrix m = to_rational(k3test::random_unimodular(rng, n, 10));
        CHECK(m * inverse(m) == RationalMatrix::identity(n));
        CHECK(inverse(m) * m == RationalMatrix::identity(n));
    }
}
