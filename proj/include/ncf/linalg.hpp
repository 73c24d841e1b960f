#ifndef NCF_LINALG_HPP
#define NCF_LINALG_HPP

#include <cstdlib>
#include <vector>

#include "ncf/matrix.hpp"

namespace ncf {

namespace detail {

inline double pivotMagnitude(const Rational& q) { return std::abs(toDouble(q)); }
inline double pivotMagnitude(double x) { return std::abs(x); }

// Float-mode singularity: pivot below 1e-12 of the largest magnitude seen
// in its column. Exact mode: pivot must be nonzero.
inline constexpr double kPivotRelTol = 1e-12;

} // namespace detail

/// Solves A·X = B for square A by elimination with partial pivoting.
/// Exact scalars give an exact solution; doubles are solved to machine
/// precision with a relative pivot threshold.
template <typename S>
Mat<S> matSolve(Mat<S> a, Mat<S> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("matSolve: A not square");
    if (b.rows() != n) throw DimensionMismatch("matSolve: rhs rows");

    std::vector<double> colScale(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            colScale[j] = std::max(colScale[j], detail::pivotMagnitude(a(i, j)));

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = detail::pivotMagnitude(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double m = detail::pivotMagnitude(a(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        bool singular;
        if constexpr (std::is_same_v<S, double>)
            singular = best <= detail::kPivotRelTol * colScale[k];
        else
            singular = isZero(a(piv, k));
        if (singular) throw SingularMatrix("matSolve: singular at column " + std::to_string(k));

        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (isZero(a(i, k))) continue;
            S f = a(i, k) / a(k, k);
            a(i, k) = S(0);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
        }
    }
    // back substitution
    Mat<S> x(n, b.cols());
    for (std::size_t jj = 0; jj < b.cols(); ++jj) {
        for (std::size_t ii = n; ii-- > 0;) {
            S s = b(ii, jj);
            for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x(j, jj);
            x(ii, jj) = s / a(ii, ii);
        }
    }
    return x;
}

template <typename S>
Mat<S> matInverse(const Mat<S>& a) {
    return matSolve(a, Mat<S>::identity(a.rows()));
}

template <typename S>
bool isInvertible(const Mat<S>& a) {
    try {
        matSolve(a, Mat<S>::identity(a.rows()));
        return true;
    } catch (const SingularMatrix&) {
        return false;
    }
}

/// Exact rank via row reduction.
std::size_t rankExact(MatQ a);

/// Any exact solution of M·x = rhs (free variables set to zero).
/// Throws SingularMatrix if the system is inconsistent.
MatQ solveAnyExact(MatQ m, MatQ rhs);

/// Exact least squares via the normal equations; returns an exact
/// minimizer (zero-residual solution whenever one exists).
MatQ lstsqExact(const MatQ& a, const MatQ& b);

/// Minimum-norm least-squares solution, float mode (rank-revealing).
MatD lstsqMinNorm(const MatD& a, const MatD& b);

/// Solves V·X = B where V has full column rank, exactly.
MatQ solveFullColumnRank(const MatQ& v, const MatQ& b);

/// Incrementally maintained span of exact column vectors. Keeps the
/// original insertion order of the accepted (independent) vectors so a
/// projection basis can be read back out.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

    /// Adds v to the span; returns true when v was independent.
    bool insert(const std::vector<Rational>& v);
    bool contains(const std::vector<Rational>& v) const;

    std::size_t size() const { return originals_.size(); }
    std::size_t dim() const { return dim_; }

    /// dim × size matrix whose columns are the accepted vectors.
    MatQ basisMatrix() const;

private:
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    std::size_t dim_;
    std::vector<std::vector<Rational>> echelon_; // pivot-normalized rows
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<Rational>> originals_;
};

} // namespace ncf

#endif
