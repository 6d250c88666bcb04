#pragma once

#include "latcoh/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace latcoh {

using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix over the integers. Empty shapes (0 rows or 0
/// columns) are valid and denote maps from or to the zero module.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw usage_error("IntegerMatrix: entry count does not match shape");
    }

    /// Row-list literal; all rows must have equal length.
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw usage_error("IntegerMatrix: ragged row literal");
            for (long long x : row) data_.emplace_back(x);
        }
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }

    static IntegerMatrix diagonal(std::span<const Integer> d) {
        IntegerMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static IntegerMatrix column(std::span<const Integer> v) {
        return IntegerMatrix(v.size(), 1, std::vector<Integer>(v.begin(), v.end()));
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntegerVector>& cols) {
        IntegerMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw usage_error("from_columns: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Integer>& entries() const noexcept { return data_; }

    IntegerVector row(std::size_t r) const {
        return IntegerVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    IntegerVector col(std::size_t c) const {
        IntegerVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count).
    IntegerMatrix col_range(std::size_t first, std::size_t count) const {
        IntegerMatrix out(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
        return out;
    }

    IntegerMatrix row_range(std::size_t first, std::size_t count) const {
        IntegerMatrix out(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
        return out;
    }

    IntegerMatrix row_subset(std::span<const std::size_t> row_idx) const {
        IntegerMatrix out(row_idx.size(), cols_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(row_idx[i], j);
        return out;
    }

    IntegerMatrix col_subset(std::span<const std::size_t> col_idx) const {
        IntegerMatrix out(rows_, col_idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(i, col_idx[j]);
        return out;
    }

    IntegerMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
        IntegerMatrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    IntegerMatrix& operator+=(const IntegerMatrix& o) {
        require_same_shape(o, "operator+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    IntegerMatrix& operator-=(const IntegerMatrix& o) {
        require_same_shape(o, "operator-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    IntegerMatrix& operator*=(const Integer& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend IntegerMatrix operator+(IntegerMatrix a, const IntegerMatrix& b) { return a += b; }
    friend IntegerMatrix operator-(IntegerMatrix a, const IntegerMatrix& b) { return a -= b; }
    friend IntegerMatrix operator*(IntegerMatrix a, const Integer& s) { return a *= s; }
    friend IntegerMatrix operator*(const Integer& s, IntegerMatrix a) { return a *= s; }
    friend IntegerMatrix operator-(IntegerMatrix a) { return a *= Integer(-1); }

    /// Product; skips zero entries of the left factor, so sparse actions stay cheap.
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw usage_error("matrix product: inner dimensions differ");
        IntegerMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Integer& bkj = b(k, j);
                    if (bkj != 0) c(i, j) += aik * bkj;
                }
            }
        }
        return c;
    }

    friend IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v) {
        if (a.cols_ != v.size()) throw usage_error("matrix-vector product: dimension mismatch");
        IntegerVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << ',';
            os << '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ',';
                os << (*this)(i, j);
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) { return os << m.str(); }

  private:
    void require_same_shape(const IntegerMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error(std::string(what) + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline IntegerMatrix matrix_power(const IntegerMatrix& a, std::size_t k) {
    if (!a.is_square()) throw usage_error("matrix_power: matrix not square");
    IntegerMatrix result = IntegerMatrix::identity(a.rows());
    IntegerMatrix base = a;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

inline IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

/// Kronecker product; basis pair (i, k) sits at index i * b.rows() + k.
inline IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Integer& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

inline IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw usage_error("hstack: row counts differ");
    IntegerMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntegerMatrix& m) {
    if (!m.is_square()) throw usage_error("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline bool is_zero_vector(const IntegerVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

} // namespace latcoh
