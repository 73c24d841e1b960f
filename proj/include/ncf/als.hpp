#ifndef NCF_ALS_HPP
#define NCF_ALS_HPP

#include <vector>

#include "ncf/alphabet.hpp"
#include "ncf/matrix.hpp"
#include "ncf/ncpoly.hpp"

namespace ncf {

/* A linear pencil A = A_0 + A_1 x_1 + ... + A_d x_d over the rationals:
 * one square coefficient block per letter plus the scalar block A_0.
 */
class LinearPencil {
public:
    LinearPencil() = default;
    LinearPencil(std::size_t dim, std::size_t letters)
        : coeff_(letters + 1, MatQ(dim, dim)), dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t letters() const { return coeff_.empty() ? 0 : coeff_.size() - 1; }

    /// Coefficient block; index 0 is the scalar part.
    MatQ& coeff(std::size_t l) { return coeff_[l]; }
    const MatQ& coeff(std::size_t l) const { return coeff_[l]; }

    /// Entry of the pencil as the affine vector (a_0, a_1, ..., a_d).
    std::vector<Rational> entryAt(std::size_t i, std::size_t j) const {
        std::vector<Rational> e(coeff_.size());
        for (std::size_t l = 0; l < coeff_.size(); ++l) e[l] = coeff_[l](i, j);
        return e;
    }

    bool operator==(const LinearPencil& o) const { return coeff_ == o.coeff_; }

private:
    std::vector<MatQ> coeff_;
    std::size_t dim_ = 0;
};

/* Admissible linear system (u, A, v) with u = e_1 kept implicit. The
 * represented element is the first component of the solution of As = v.
 * The distinguished empty system (dim 0) represents the zero element.
 */
class Als {
public:
    Als() = default;

    /// The empty system for the zero element.
    static Als zero(Alphabet alpha);

    /// Dim-1 system for a scalar; the zero scalar yields the empty system.
    static Als constant(Alphabet alpha, const Rational& c);

    /// Dim-2 system with solution (x, 1)^T.
    static Als letter(Alphabet alpha, Letter x);

    Als(Alphabet alpha, LinearPencil pencil, MatQ v);

    const Alphabet& alphabet() const { return alpha_; }
    const LinearPencil& pencil() const { return pencil_; }
    const MatQ& v() const { return v_; }
    std::size_t dim() const { return pencil_.dim(); }
    bool isZeroSystem() const { return dim() == 0; }

    bool operator==(const Als& o) const {
        return alpha_ == o.alpha_ && pencil_ == o.pencil_ && v_ == o.v_;
    }

private:
    Alphabet alpha_;
    LinearPencil pencil_;
    MatQ v_; // n×1
};

Als alsAdd(const Als& f, const Als& g);
Als alsMul(const Als& f, const Als& g);
Als alsScale(const Rational& c, const Als& f);

/// Inverse by bordering: dimension n+1, first solution component 1/f.
/// The caller asserts f != 0; evaluation raises NotInvertible downstream.
Als alsInverse(const Als& f);

/// P·(u,A,v)·Q = (uQ, PAQ, Pv). Requires invertible P, Q with the first
/// row of Q equal to e_1 so the result stays admissible.
Als applyTransform(const Als& f, const MatQ& p, const MatQ& q);

/// Normalizes a general linear representation (arbitrary nonzero row u)
/// to an admissible one by a column transform. A zero u yields the
/// empty system.
Als admissibilize(const Alphabet& alpha, const MatQ& u, const LinearPencil& pencil, const MatQ& v);

/// Power-series coefficients of the represented element to total degree
/// maxDeg. Requires an invertible scalar block A_0.
NcPoly seriesExpand(const Als& f, std::size_t maxDeg);

/// True when the scalar block A_0 is invertible (the element expands as
/// a power series at the origin).
bool isSeriesExpandable(const Als& f);

/// Builds the pencil system from a polynomial, one staircase per word.
/// Convenience for test fixtures and the expression front-end.
Als alsFromPoly(const NcPoly& p);

} // namespace ncf

#endif
