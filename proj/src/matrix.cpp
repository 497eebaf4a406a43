#include "mmsym/matrix.hpp"

#include <sstream>

namespace mmsym {

ExactMatrix ExactMatrix::from_ints(std::size_t rows, std::size_t cols,
                                   std::initializer_list<int> entries)
{
    if (entries.size() != rows * cols)
        throw shape_error("entry list has wrong length for shape");
    ExactMatrix result(rows, cols);
    std::size_t idx = 0;
    for (int v : entries)
        result.data_[idx++] = v;
    return result;
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix result(n, n);
    for (std::size_t i = 0; i < n; ++i)
        result.at(i, i) = 1;
    return result;
}

ExactMatrix ExactMatrix::unit(std::size_t rows, std::size_t cols,
                              std::size_t i, std::size_t j)
{
    if (i >= rows || j >= cols)
        throw shape_error("matrix unit index out of range");
    ExactMatrix result(rows, cols);
    result.at(i, j) = 1;
    return result;
}

bool ExactMatrix::is_zero() const
{
    for (const Rational& v : data_)
        if (v != 0)
            return false;
    return true;
}

const Rational& ExactMatrix::leading_entry() const
{
    for (const Rational& v : data_)
        if (v != 0)
            return v;
    throw domain_error("zero matrix has no leading entry");
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw shape_error("matrix addition shape mismatch");
    ExactMatrix result(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        result.data_[i] = data_[i] + other.data_[i];
    return result;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw shape_error("matrix subtraction shape mismatch");
    ExactMatrix result(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        result.data_[i] = data_[i] - other.data_[i];
    return result;
}

ExactMatrix ExactMatrix::operator-() const
{
    ExactMatrix result(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        result.data_[i] = -data_[i];
    return result;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const
{
    return mat_mul(*this, other);
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const
{
    ExactMatrix result(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        result.data_[i] = data_[i] * factor;
    return result;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool ExactMatrix::operator<(const ExactMatrix& other) const
{
    if (rows_ != other.rows_)
        return rows_ < other.rows_;
    if (cols_ != other.cols_)
        return cols_ < other.cols_;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        int order = cmp(data_[i], other.data_[i]);
        if (order != 0)
            return order < 0;
    }
    return false;
}

std::string ExactMatrix::to_key() const
{
    std::ostringstream out;
    out << rows_ << 'x' << cols_ << ':';
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i != 0)
            out << ',';
        out << data_[i].get_str();
    }
    return out.str();
}

ExactMatrix mat_mul(const ExactMatrix& lhs, const ExactMatrix& rhs)
{
    if (lhs.cols() != rhs.rows())
        throw shape_error("matrix product inner-dimension mismatch");
    ExactMatrix result(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rational& lik = lhs.at(i, k);
            if (lik == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                const Rational& rkj = rhs.at(k, j);
                if (rkj != 0)
                    result.at(i, j) += lik * rkj;
            }
        }
    return result;
}

ExactMatrix mat_inverse(const ExactMatrix& mat)
{
    if (!mat.is_square())
        throw shape_error("only square matrices can be inverted");
    const std::size_t n = mat.rows();
    ExactMatrix work = mat;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw singular_error("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                swap(work.at(pivot, j), work.at(col, j));
                swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational scale = 1 / work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work.at(row, col) == 0)
                continue;
            Rational factor = work.at(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(row, j) -= factor * work.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::size_t mat_rank(const ExactMatrix& mat)
{
    ExactMatrix work = mat;
    const std::size_t rows = work.rows(), cols = work.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && work.at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j)
                swap(work.at(pivot, j), work.at(rank, j));
        for (std::size_t row = rank + 1; row < rows; ++row) {
            if (work.at(row, col) == 0)
                continue;
            Rational factor = work.at(row, col) / work.at(rank, col);
            for (std::size_t j = col; j < cols; ++j)
                work.at(row, j) -= factor * work.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

ExactMatrix mat_transpose(const ExactMatrix& mat)
{
    ExactMatrix result(mat.cols(), mat.rows());
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
            result.at(j, i) = mat.at(i, j);
    return result;
}

ExactMatrix contragredient(const ExactMatrix& mat)
{
    return mat_inverse(mat_transpose(mat));
}

std::pair<ExactMatrix, ExactMatrix> rank_one_factor(const ExactMatrix& mat)
{
    std::size_t r0 = 0, c0 = 0;
    bool found = false;
    for (std::size_t i = 0; i < mat.rows() && !found; ++i)
        for (std::size_t j = 0; j < mat.cols() && !found; ++j)
            if (mat.at(i, j) != 0) {
                r0 = i;
                c0 = j;
                found = true;
            }
    if (!found)
        throw rank_error("rank-one factorization of a zero matrix");
    ExactMatrix column(mat.rows(), 1);
    for (std::size_t i = 0; i < mat.rows(); ++i)
        column.at(i, 0) = mat.at(i, c0) / mat.at(r0, c0);
    ExactMatrix row(1, mat.cols());
    for (std::size_t j = 0; j < mat.cols(); ++j)
        row.at(0, j) = mat.at(r0, j);
    if (mat_mul(column, row) != mat)
        throw rank_error("matrix does not have rank one");
    return {column, row};
}

} // namespace mmsym
