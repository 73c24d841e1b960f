#include "ncf/minimize.hpp"

#include <deque>
#include <numeric>

#include "ncf/linalg.hpp"

namespace ncf {

namespace {

std::vector<Rational> columnOf(const MatQ& m, std::size_t j) {
    std::vector<Rational> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

MatQ columnToMat(const std::vector<Rational>& v) {
    MatQ m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

// State-space form of a series-expandable system: transition matrices
// N_l = -A_0^{-1} A_l, entry column b = A_0^{-1} v, exit row c = u = e_1.
struct StateSpace {
    std::vector<MatQ> n; // index 1..d used
    MatQ b;              // dim × 1
    MatQ c;              // 1 × dim
    std::size_t dim = 0;
};

// Closure of the column span of seed under left multiplication by all
// transition matrices; stabilizes within dim steps.
MatQ spanClosure(const std::vector<MatQ>& trans, const MatQ& seed, std::size_t dim) {
    EchelonSpan span(dim);
    std::deque<std::vector<Rational>> queue;
    for (std::size_t j = 0; j < seed.cols(); ++j) {
        auto v = columnOf(seed, j);
        if (span.insert(v)) queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
        auto v = std::move(queue.front());
        queue.pop_front();
        MatQ vm = columnToMat(v);
        for (std::size_t l = 1; l < trans.size(); ++l) {
            auto w = columnOf(trans[l] * vm, 0);
            if (span.insert(w)) queue.push_back(std::move(w));
        }
    }
    return span.basisMatrix();
}

StateSpace restrictToColumnSpan(const StateSpace& s, const MatQ& basis) {
    StateSpace r;
    r.dim = basis.cols();
    r.n.resize(s.n.size());
    for (std::size_t l = 1; l < s.n.size(); ++l)
        r.n[l] = solveFullColumnRank(basis, s.n[l] * basis);
    r.b = solveFullColumnRank(basis, s.b);
    r.c = s.c * basis;
    return r;
}

StateSpace transposed(const StateSpace& s) {
    StateSpace t;
    t.dim = s.dim;
    t.n.resize(s.n.size());
    for (std::size_t l = 1; l < s.n.size(); ++l) t.n[l] = s.n[l].transpose();
    t.b = s.c.transpose();
    t.c = s.b.transpose();
    return t;
}

Als stateSpaceToAls(const Alphabet& alpha, const StateSpace& s) {
    if (s.dim == 0) return Als::zero(alpha);
    LinearPencil p(s.dim, alpha.size());
    p.coeff(0) = MatQ::identity(s.dim);
    for (std::size_t l = 1; l <= alpha.size(); ++l) p.coeff(l) = -s.n[l];
    return admissibilize(alpha, s.c, p, s.b);
}

Als minimizeSeries(const Als& f) {
    const std::size_t n = f.dim(), d = f.alphabet().size();
    StateSpace s;
    s.dim = n;
    MatQ a0inv = matInverse(f.pencil().coeff(0));
    s.n.resize(d + 1);
    for (std::size_t l = 1; l <= d; ++l) s.n[l] = -(a0inv * f.pencil().coeff(l));
    s.b = a0inv * f.v();
    s.c = MatQ(1, n);
    s.c(0, 0) = Rational(1);

    // reachability reduction
    MatQ reach = spanClosure(s.n, s.b, n);
    if (reach.cols() == 0) return Als::zero(f.alphabet());
    StateSpace fwd = restrictToColumnSpan(s, reach);

    // observability reduction = reachability of the transposed system
    StateSpace bwdT = transposed(fwd);
    MatQ obs = spanClosure(bwdT.n, bwdT.b, fwd.dim);
    if (obs.cols() == 0) return Als::zero(f.alphabet());
    StateSpace minimalT = restrictToColumnSpan(bwdT, obs);

    return stateSpaceToAls(f.alphabet(), transposed(minimalT));
}

// --- structural reductions for the non-series case -------------------

struct Working {
    std::vector<MatQ> coeff; // 0..d
    MatQ v;
    std::size_t dim() const { return v.rows(); }
};

bool anyLetterEntry(const Working& w, std::size_t i, std::size_t j) {
    for (std::size_t l = 1; l < w.coeff.size(); ++l)
        if (!isZero(w.coeff[l](i, j))) return true;
    return false;
}

void restrictTo(Working& w, const std::vector<std::size_t>& keep) {
    for (auto& m : w.coeff) m = m.select(keep, keep);
    std::vector<std::size_t> col0{0};
    w.v = w.v.select(keep, col0);
}

// Decoupled trailing block: indices not reached from row 0 following
// nonzero entries row -> column never influence the first solution
// component.
bool dropUnreachedFromTop(Working& w) {
    const std::size_t n = w.dim();
    std::vector<bool> in(n, false);
    std::deque<std::size_t> queue{0};
    in[0] = true;
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < n; ++k) {
            if (in[k]) continue;
            bool touch = false;
            for (const auto& m : w.coeff)
                if (!isZero(m(j, k))) {
                    touch = true;
                    break;
                }
            if (touch) {
                in[k] = true;
                queue.push_back(k);
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) keep.push_back(i);
    if (keep.size() == n) return false;
    restrictTo(w, keep);
    return true;
}

// Dual closure from the support of v following column -> row; solution
// components outside it are zero. Returns false in `nonzero` when the
// first component itself drops out (the element is 0).
bool dropZeroSolutionBlock(Working& w, bool& isZeroElement) {
    const std::size_t n = w.dim();
    std::vector<bool> in(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (!isZero(w.v(i, 0))) {
            in[i] = true;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        std::size_t k = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (in[j]) continue;
            bool touch = false;
            for (const auto& m : w.coeff)
                if (!isZero(m(j, k))) {
                    touch = true;
                    break;
                }
            if (touch) {
                in[j] = true;
                queue.push_back(j);
            }
        }
    }
    if (!in[0]) {
        isZeroElement = true;
        return true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) keep.push_back(i);
    if (keep.size() == n) return false;
    restrictTo(w, keep);
    return true;
}

void deleteRowCol(Working& w, std::size_t row, std::size_t col) {
    const std::size_t n = w.dim();
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != row) rows.push_back(i);
        if (i != col) cols.push_back(i);
    }
    for (auto& m : w.coeff) m = m.select(rows, cols);
    std::vector<std::size_t> col0{0};
    w.v = w.v.select(rows, col0);
}

// A row whose entries are all scalar with zero right-hand side pins one
// solution component to a combination of the others; eliminate it by an
// admissible column transform and drop the row and pivot column.
bool scalarRowElimination(Working& w, bool& isZeroElement) {
    const std::size_t n = w.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (!isZero(w.v(i, 0))) continue;
        bool scalarRow = true;
        for (std::size_t j = 0; j < n && scalarRow; ++j)
            if (anyLetterEntry(w, i, j)) scalarRow = false;
        if (!scalarRow) continue;

        std::size_t pivot = n;
        for (std::size_t j = n; j-- > 1;)
            if (!isZero(w.coeff[0](i, j))) {
                pivot = j;
                break;
            }
        if (pivot == n) {
            if (!isZero(w.coeff[0](i, 0))) {
                isZeroElement = true; // the row forces s_1 = 0
                return true;
            }
            continue; // all-zero row: leave for the caller
        }
        Rational inv = Rational(1) / w.coeff[0](i, pivot);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == pivot) continue;
            Rational factor = w.coeff[0](i, k) * inv;
            if (isZero(factor)) continue;
            for (auto& m : w.coeff)
                for (std::size_t r = 0; r < n; ++r) m(r, k) -= factor * m(r, pivot);
        }
        deleteRowCol(w, i, pivot);
        return true;
    }
    return false;
}

// Dual move: a column that is scalar everywhere is cleared to a single
// pivot by row transforms, then dropped together with the pivot row.
bool scalarColumnElimination(Working& w) {
    const std::size_t n = w.dim();
    for (std::size_t j = 1; j < n; ++j) {
        bool scalarCol = true;
        for (std::size_t i = 0; i < n && scalarCol; ++i)
            if (anyLetterEntry(w, i, j)) scalarCol = false;
        if (!scalarCol) continue;

        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!isZero(w.coeff[0](i, j))) {
                pivot = i;
                break;
            }
        if (pivot == n) continue;
        Rational inv = Rational(1) / w.coeff[0](pivot, j);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == pivot) continue;
            Rational factor = w.coeff[0](r, j) * inv;
            if (isZero(factor)) continue;
            for (auto& m : w.coeff)
                for (std::size_t k = 0; k < n; ++k) m(r, k) -= factor * m(pivot, k);
            w.v(r, 0) -= factor * w.v(pivot, 0);
        }
        deleteRowCol(w, pivot, j);
        return true;
    }
    return false;
}

Als minimizeStructural(const Als& f) {
    Working w;
    w.coeff.resize(f.alphabet().size() + 1);
    for (std::size_t l = 0; l <= f.alphabet().size(); ++l) w.coeff[l] = f.pencil().coeff(l);
    w.v = f.v();

    bool isZeroElement = false;
    bool changed = true;
    while (changed && w.dim() > 0 && !isZeroElement) {
        changed = false;
        changed |= dropUnreachedFromTop(w);
        if (w.dim() == 0) break;
        changed |= dropZeroSolutionBlock(w, isZeroElement);
        if (isZeroElement || w.dim() == 0) break;
        changed |= scalarRowElimination(w, isZeroElement);
        if (isZeroElement || w.dim() == 0) break;
        changed |= scalarColumnElimination(w);
    }
    if (isZeroElement || w.dim() == 0) return Als::zero(f.alphabet());

    LinearPencil p(w.dim(), f.alphabet().size());
    for (std::size_t l = 0; l <= f.alphabet().size(); ++l) p.coeff(l) = w.coeff[l];
    Als reduced(f.alphabet(), std::move(p), w.v);
    // elimination may have exposed an invertible scalar block; if so the
    // certified reduction can finish the job
    if (isSeriesExpandable(reduced)) return minimizeSeries(reduced);
    return reduced;
}

} // namespace

Als minimize(const Als& f) {
    if (f.isZeroSystem()) return f;
    if (isSeriesExpandable(f)) return minimizeSeries(f);
    return minimizeStructural(f);
}

std::size_t alsRank(const Als& f) {
    if (f.isZeroSystem()) return 0;
    if (!isSeriesExpandable(f))
        throw RankNotCertified("rank is only certified for series-expandable systems");
    return minimize(f).dim();
}

} // namespace ncf
