#pragma once

#include "k3lattice/numeric.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k3lattice {

// Dense row-major matrix over an exact scalar type. Values are immutable in
// spirit: algorithms copy, mutate their copy, and return new matrices.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
        : rows_(rows), cols_(cols), entries_(entries) {
        if (entries_.size() != rows * cols)
            throw std::invalid_argument("matrix literal has wrong entry count");
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows * cols)
            throw std::invalid_argument("matrix data has wrong entry count");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] + b.entries_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.entries_.size(); ++k) r.entries_[k] = s * m.entries_[k];
        return r;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Entrywise exact conversion; nullopt if any entry has denominator != 1.
std::optional<IntegerMatrix> to_integer(const RationalMatrix& m);

std::vector<Integer> diagonal_of(const IntegerMatrix& m);

} // namespace k3lattice
