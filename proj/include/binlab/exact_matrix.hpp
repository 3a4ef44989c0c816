#pragma once

// Dense exact matrices over the integers and rationals, plus the kernel
// operations used by every identity check: windowing of entry generators,
// products, powers, fraction-free determinants, LDU factors and rank over F_p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace binlab {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
        return id;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return (*this)(i, j);
    }
    const T& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (*this)(i, j);
    }

    const std::vector<T>& entries() const noexcept { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Top-left r x c block.
    Matrix leading(std::size_t r, std::size_t c) const {
        if (r > rows_ || c > cols_) throw std::out_of_range("leading block exceeds matrix");
        Matrix out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i, j);
        return out;
    }

    bool is_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i && j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

/// Entry (i, j) of an infinite matrix indexed from zero.
using EntryFn = std::function<BigInt(std::uint64_t, std::uint64_t)>;

/// Rows 0..n-1, columns k..k+m-1 of the generated matrix.
ExactMatrix window(const EntryFn& gen, std::size_t n, std::size_t m, std::uint64_t k = 0);

/// Square leading window C^(n).
inline ExactMatrix window(const EntryFn& gen, std::size_t n) { return window(gen, n, n, 0); }

ExactMatrix diagonal(const std::vector<BigInt>& d);

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

/// Exact inverse of a triangular matrix whose diagonal entries are all +1 or -1.
ExactMatrix unimodular_triangular_inverse(const ExactMatrix& a);

/// A^e for any integer e. Negative e requires a triangular matrix with +-1 diagonal.
ExactMatrix mat_pow(const ExactMatrix& a, std::int64_t e);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const ExactMatrix& a);

struct LDUFactors {
    RationalMatrix L;
    std::vector<Rational> D;
    RationalMatrix U;

    /// L * diag(D) * U.
    RationalMatrix product() const;
};

/// Raised by ldu_decompose when a leading principal minor vanishes.
class SingularMinorError : public std::domain_error {
public:
    explicit SingularMinorError(std::size_t order);
    std::size_t order() const noexcept { return order_; }

private:
    std::size_t order_;
};

LDUFactors ldu_decompose(const ExactMatrix& a);

RationalMatrix to_rational(const ExactMatrix& a);

bool is_prime(std::uint64_t p);

/// Rank of the entrywise reduction of a modulo the prime p.
std::size_t rank_mod_p(const ExactMatrix& a, std::uint64_t p);

/// Rank of a matrix already reduced into [0, p). Rows are given row-major.
std::size_t rank_mod_p(std::vector<std::uint64_t> rows, std::size_t cols, std::uint64_t p);

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p);

}  // namespace binlab
