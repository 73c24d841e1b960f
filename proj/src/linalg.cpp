#include "ncf/linalg.hpp"

#include <Eigen/Dense>

namespace ncf {

namespace {

// In-place reduction to row echelon form; returns pivot columns.
std::vector<std::size_t> echelonize(MatQ& a) {
    std::vector<std::size_t> pivotCols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && isZero(a(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
        Rational inv = Rational(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || isZero(a(i, col))) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivotCols.push_back(col);
        ++row;
    }
    return pivotCols;
}

} // namespace

std::size_t rankExact(MatQ a) {
    return echelonize(a).size();
}

MatQ solveAnyExact(MatQ m, MatQ rhs) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rhs.rows() != rows) throw DimensionMismatch("solveAnyExact: rhs rows");
    // reduce the augmented matrix [m | rhs]
    MatQ aug(rows, cols + rhs.cols());
    aug.setBlock(0, 0, m);
    aug.setBlock(0, cols, rhs);
    auto pivots = echelonize(aug);
    // consistency: a pivot in the rhs part means no solution
    for (auto p : pivots)
        if (p >= cols) throw SingularMatrix("solveAnyExact: inconsistent system");
    MatQ x(cols, rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(pivots[r], j) = aug(r, cols + j);
    return x;
}

MatQ lstsqExact(const MatQ& a, const MatQ& b) {
    MatQ at = a.transpose();
    return solveAnyExact(at * a, at * b);
}

MatD lstsqMinNorm(const MatD& a, const MatD& b) {
    Eigen::MatrixXd ea(a.rows(), a.cols()), eb(b.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) ea(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) eb(i, j) = b(i, j);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(ea);
    Eigen::MatrixXd ex = cod.solve(eb);
    MatD x(a.cols(), b.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = ex(i, j);
    return x;
}

MatQ solveFullColumnRank(const MatQ& v, const MatQ& b) {
    if (v.rows() != b.rows()) throw DimensionMismatch("solveFullColumnRank");
    MatQ work = v;
    auto pivots = echelonize(work);
    if (pivots.size() != v.cols())
        throw SingularMatrix("solveFullColumnRank: columns are dependent");
    // Row-select an invertible square subsystem. echelonize permuted rows,
    // so recompute pivot rows against the original matrix instead.
    std::vector<std::size_t> rowsSel;
    {
        EchelonSpan span(v.cols());
        for (std::size_t i = 0; i < v.rows() && rowsSel.size() < v.cols(); ++i) {
            std::vector<Rational> row(v.cols());
            for (std::size_t j = 0; j < v.cols(); ++j) row[j] = v(i, j);
            if (span.insert(row)) rowsSel.push_back(i);
        }
    }
    std::vector<std::size_t> allCols(v.cols());
    for (std::size_t j = 0; j < v.cols(); ++j) allCols[j] = j;
    MatQ vs = v.select(rowsSel, allCols);
    std::vector<std::size_t> bCols(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) bCols[j] = j;
    MatQ bs = b.select(rowsSel, bCols);
    MatQ x = matSolve(vs, bs);
    if (v * x != b) throw SingularMatrix("solveFullColumnRank: inconsistent system");
    return x;
}

bool EchelonSpan::insert(const std::vector<Rational>& v) {
    if (v.size() != dim_) throw DimensionMismatch("EchelonSpan::insert");
    auto r = reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && isZero(r[piv])) ++piv;
    if (piv == dim_) return false;
    Rational inv = Rational(1) / r[piv];
    for (auto& x : r) x *= inv;
    echelon_.push_back(std::move(r));
    pivots_.push_back(piv);
    originals_.push_back(v);
    return true;
}

bool EchelonSpan::contains(const std::vector<Rational>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (!isZero(x)) return false;
    return true;
}

MatQ EchelonSpan::basisMatrix() const {
    MatQ m(dim_, originals_.size());
    for (std::size_t j = 0; j < originals_.size(); ++j)
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = originals_[j][i];
    return m;
}

std::vector<Rational> EchelonSpan::reduce(std::vector<Rational> v) const {
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        const Rational& c = v[pivots_[k]];
        if (isZero(c)) continue;
        Rational f = c;
        for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * echelon_[k][j];
    }
    return v;
}

} // namespace ncf
