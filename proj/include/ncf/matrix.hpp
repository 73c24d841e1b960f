#ifndef NCF_MATRIX_HPP
#define NCF_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ncf/errors.hpp"
#include "ncf/rational.hpp"

namespace ncf {

/* Dense row-major matrix over an exact (Rational) or floating (double)
 * scalar. Dimensions in this library stay small (pencil blocks, probe
 * sizes), so there is no attempt at blocking or sparsity.
 */
template <typename S>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    Mat(std::initializer_list<std::initializer_list<S>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        requireSameShape(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        requireSameShape(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    Mat& operator+=(const Mat& o) {
        requireSameShape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& aik = (*this)(i, k);
                if (isZero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    Mat operator*(const S& s) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    friend Mat operator*(const S& s, const Mat& m) { return m * s; }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool isZeroMatrix() const {
        for (const auto& x : a_)
            if (!isZero(x)) return false;
        return true;
    }

    void setBlock(std::size_t r0, std::size_t c0, const Mat& m) {
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("setBlock");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block");
        Mat r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    /// Keeps the given rows and columns, in order.
    Mat select(const std::vector<std::size_t>& rowIdx, const std::vector<std::size_t>& colIdx) const {
        Mat r(rowIdx.size(), colIdx.size());
        for (std::size_t i = 0; i < rowIdx.size(); ++i)
            for (std::size_t j = 0; j < colIdx.size(); ++j) r(i, j) = (*this)(rowIdx[i], colIdx[j]);
        return r;
    }

    double frobeniusNorm() const {
        double s = 0;
        for (const auto& x : a_) {
            double d = toDouble(x);
            s += d * d;
        }
        return std::sqrt(s);
    }

private:
    void requireSameShape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape");
    }

    std::size_t rows_, cols_;
    std::vector<S> a_;
};

using MatQ = Mat<Rational>;
using MatD = Mat<double>;

template <typename S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const S& aij = a(i, j);
            if (isZero(aij)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

inline MatD toDoubleMat(const MatQ& m) {
    MatD r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = toDouble(m(i, j));
    return r;
}

} // namespace ncf

#endif
