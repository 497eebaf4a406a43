#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mmsym/rational.hpp"

namespace mmsym {

/// Dense matrix over exact rationals.  Indices are zero-based; storage is
/// row-major.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}

    /// Zero matrix of the given shape.
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Build from a flat row-major list of integer entries.
    static ExactMatrix from_ints(std::size_t rows, std::size_t cols,
                                 std::initializer_list<int> entries);

    static ExactMatrix identity(std::size_t n);

    /// Matrix unit e_{i,j} (zero-based indices) of the given shape.
    static ExactMatrix unit(std::size_t rows, std::size_t cols,
                            std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// First nonzero entry in row-major order; throws domain_error on the
    /// zero matrix.
    const Rational& leading_entry() const;

    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    ExactMatrix operator-() const;
    ExactMatrix operator*(const ExactMatrix& other) const;

    /// Scale every entry by the given rational.
    ExactMatrix scaled(const Rational& factor) const;

    bool operator==(const ExactMatrix& other) const;
    bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

    /// Total order (shape first, then entries row-major); used for
    /// deterministic sorting and map keys.
    bool operator<(const ExactMatrix& other) const;

    /// Compact textual form, usable as a map key.
    std::string to_key() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Product; throws shape_error on inner-dimension mismatch.
ExactMatrix mat_mul(const ExactMatrix& lhs, const ExactMatrix& rhs);

/// Inverse by exact Gauss-Jordan elimination, choosing the first nonzero
/// pivot in each column for determinism.  Throws shape_error on non-square
/// input and singular_error on singular input.
ExactMatrix mat_inverse(const ExactMatrix& mat);

/// Rank by exact row reduction.
std::size_t mat_rank(const ExactMatrix& mat);

ExactMatrix mat_transpose(const ExactMatrix& mat);

/// Contragredient: inverse of the transpose.
ExactMatrix contragredient(const ExactMatrix& mat);

/// Factor a rank-one matrix as (column) * (row), with the column scaled so
/// its first nonzero entry is one.  Throws rank_error unless rank is
/// exactly one.
std::pair<ExactMatrix, ExactMatrix> rank_one_factor(const ExactMatrix& mat);

} // namespace mmsym
