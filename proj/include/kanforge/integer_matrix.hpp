#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kanforge/errors.hpp"

namespace kanforge {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init)
    {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw DimensionMismatch("ragged matrix literal");
            for (long long v : row)
                data_.emplace_back(v);
        }
    }

    static IntMatrix identity(int n)
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (v != 0)
                return false;
        return true;
    }

    IntMatrix transpose() const
    {
        IntMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    IntVector column(int c) const
    {
        IntVector v(rows_);
        for (int r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    /// Columns [first, first + count) as a new matrix.
    IntMatrix columns(int first, int count) const
    {
        IntMatrix out(rows_, count);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < count; ++c)
                out(r, c) = (*this)(r, first + c);
        return out;
    }

    IntMatrix top_rows(int count) const
    {
        IntMatrix out(count, cols_);
        for (int r = 0; r < count; ++r)
            for (int c = 0; c < cols_; ++c)
                out(r, c) = (*this)(r, c);
        return out;
    }

    /// [this | other]
    IntMatrix hconcat(const IntMatrix& other) const
    {
        if (rows_ != other.rows_)
            throw DimensionMismatch("hconcat of matrices with different row counts");
        IntMatrix out(rows_, cols_ + other.cols_);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c)
                out(r, c) = (*this)(r, c);
            for (int c = 0; c < other.cols_; ++c)
                out(r, cols_ + c) = other(r, c);
        }
        return out;
    }

    IntMatrix reduced_mod(const Integer& n) const
    {
        IntMatrix out = *this;
        if (n == 0)
            return out;
        for (auto& v : out.data_) {
            v %= n;
            if (v < 0)
                v += n;
        }
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product " + a.shape() + " * " + b.shape());
        IntMatrix out(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const Integer& v = a(r, k);
                if (v == 0)
                    continue;
                for (int c = 0; c < b.cols_; ++c)
                    out(r, c) += v * b(k, c);
            }
        return out;
    }

    friend IntVector operator*(const IntMatrix& a, const IntVector& v)
    {
        if (a.cols_ != static_cast<int>(v.size()))
            throw DimensionMismatch("matrix-vector product " + a.shape());
        IntVector out(a.rows_);
        for (int r = 0; r < a.rows_; ++r)
            for (int c = 0; c < a.cols_; ++c)
                if (v[c] != 0)
                    out[r] += a(r, c) * v[c];
        return out;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
    {
        a.require_same_shape(b);
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] += b.data_[i];
        return out;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
    {
        a.require_same_shape(b);
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

    bool operator==(const IntMatrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    // elementary operations used by the Smith normal form
    void swap_rows(int a, int b)
    {
        if (a == b)
            return;
        for (int c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(int a, int b)
    {
        if (a == b)
            return;
        for (int r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[target] += factor * row[source]
    void add_row(int target, int source, const Integer& factor)
    {
        if (factor == 0)
            return;
        for (int c = 0; c < cols_; ++c)
            if ((*this)(source, c) != 0)
                (*this)(target, c) += factor * (*this)(source, c);
    }
    /// col[target] += factor * col[source]
    void add_col(int target, int source, const Integer& factor)
    {
        if (factor == 0)
            return;
        for (int r = 0; r < rows_; ++r)
            if ((*this)(r, source) != 0)
                (*this)(r, target) += factor * (*this)(r, source);
    }
    void negate_row(int r)
    {
        for (int c = 0; c < cols_; ++c)
            (*this)(r, c) = -(*this)(r, c);
    }
    void negate_col(int c)
    {
        for (int r = 0; r < rows_; ++r)
            (*this)(r, c) = -(*this)(r, c);
    }

private:
    void require_same_shape(const IntMatrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw DimensionMismatch("shape mismatch " + shape() + " vs " + b.shape());
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

inline Integer mod_floor(const Integer& a, const Integer& n)
{
    Integer r = a % n;
    if (r < 0)
        r += n;
    return r;
}

} // namespace kanforge
