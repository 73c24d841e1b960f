#include "ncf/als.hpp"

#include "ncf/linalg.hpp"

namespace ncf {

namespace {

void requireSameAlphabet(const Als& f, const Als& g) {
    if (f.alphabet() != g.alphabet()) throw AlphabetMismatch("systems over different alphabets");
}

} // namespace

Als::Als(Alphabet alpha, LinearPencil pencil, MatQ v)
    : alpha_(std::move(alpha)), pencil_(std::move(pencil)), v_(std::move(v)) {
    if (pencil_.letters() != alpha_.size())
        throw DimensionMismatch("pencil letter count does not match alphabet");
    if (v_.rows() != pencil_.dim() || (pencil_.dim() > 0 && v_.cols() != 1))
        throw DimensionMismatch("v must be a dim x 1 column");
}

Als Als::zero(Alphabet alpha) {
    std::size_t d = alpha.size();
    return Als(std::move(alpha), LinearPencil(0, d), MatQ(0, 1));
}

Als Als::constant(Alphabet alpha, const Rational& c) {
    if (isZero(c)) return zero(std::move(alpha));
    LinearPencil p(1, alpha.size());
    p.coeff(0)(0, 0) = Rational(1);
    MatQ v(1, 1);
    v(0, 0) = c;
    return Als(std::move(alpha), std::move(p), std::move(v));
}

Als Als::letter(Alphabet alpha, Letter x) {
    alpha.name(x); // range check
    LinearPencil p(2, alpha.size());
    p.coeff(0) = MatQ::identity(2);
    p.coeff(x.index)(0, 1) = Rational(-1);
    MatQ v(2, 1);
    v(1, 0) = Rational(1);
    return Als(std::move(alpha), std::move(p), std::move(v));
}

Als alsAdd(const Als& f, const Als& g) {
    requireSameAlphabet(f, g);
    if (f.isZeroSystem()) return g;
    if (g.isZeroSystem()) return f;
    const std::size_t nf = f.dim(), ng = g.dim(), d = f.alphabet().size();
    LinearPencil p(nf + ng, d);
    for (std::size_t l = 0; l <= d; ++l) {
        const MatQ& af = f.pencil().coeff(l);
        const MatQ& ag = g.pencil().coeff(l);
        p.coeff(l).setBlock(0, 0, af);
        p.coeff(l).setBlock(nf, nf, ag);
        // coupling -A_f e_1 e_1^T: minus the first column of A_f, placed
        // in the first column of the g block
        for (std::size_t i = 0; i < nf; ++i) p.coeff(l)(i, nf) = -af(i, 0);
    }
    MatQ v(nf + ng, 1);
    v.setBlock(0, 0, f.v());
    v.setBlock(nf, 0, g.v());
    return Als(f.alphabet(), std::move(p), std::move(v));
}

Als alsMul(const Als& f, const Als& g) {
    requireSameAlphabet(f, g);
    if (f.isZeroSystem() || g.isZeroSystem()) return Als::zero(f.alphabet());
    const std::size_t nf = f.dim(), ng = g.dim(), d = f.alphabet().size();
    LinearPencil p(nf + ng, d);
    for (std::size_t l = 0; l <= d; ++l) {
        p.coeff(l).setBlock(0, 0, f.pencil().coeff(l));
        p.coeff(l).setBlock(nf, nf, g.pencil().coeff(l));
    }
    // scalar coupling -v_f e_1^T in the upper right
    for (std::size_t i = 0; i < nf; ++i) p.coeff(0)(i, nf) = -f.v()(i, 0);
    MatQ v(nf + ng, 1);
    v.setBlock(nf, 0, g.v());
    return Als(f.alphabet(), std::move(p), std::move(v));
}

Als alsScale(const Rational& c, const Als& f) {
    if (isZero(c) || f.isZeroSystem()) return Als::zero(f.alphabet());
    return Als(f.alphabet(), f.pencil(), f.v() * c);
}

Als alsInverse(const Als& f) {
    if (f.isZeroSystem()) throw NotInvertible("inverse of the zero element");
    const std::size_t n = f.dim(), d = f.alphabet().size();
    LinearPencil p(n + 1, d);
    for (std::size_t l = 0; l <= d; ++l)
        p.coeff(l).setBlock(0, 1, f.pencil().coeff(l));
    for (std::size_t i = 0; i < n; ++i) p.coeff(0)(i, 0) = -f.v()(i, 0);
    p.coeff(0)(n, 1) = Rational(1); // pins the old first component to 1
    MatQ v(n + 1, 1);
    v(n, 0) = Rational(1);
    return Als(f.alphabet(), std::move(p), std::move(v));
}

Als applyTransform(const Als& f, const MatQ& p, const MatQ& q) {
    const std::size_t n = f.dim();
    if (p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n)
        throw DimensionMismatch("transform size");
    for (std::size_t j = 0; j < n; ++j)
        if (q(0, j) != (j == 0 ? Rational(1) : Rational(0)))
            throw NotAdmissible("first row of Q must be e_1");
    if (!isInvertible(p) || !isInvertible(q)) throw NotAdmissible("P and Q must be invertible");
    LinearPencil r(n, f.alphabet().size());
    for (std::size_t l = 0; l <= f.alphabet().size(); ++l) r.coeff(l) = p * f.pencil().coeff(l) * q;
    return Als(f.alphabet(), std::move(r), p * f.v());
}

Als admissibilize(const Alphabet& alpha, const MatQ& u, const LinearPencil& pencil, const MatQ& v) {
    const std::size_t n = pencil.dim();
    if (u.rows() != 1 || u.cols() != n) throw DimensionMismatch("u must be a 1 x dim row");
    if (n == 0) return Als::zero(alpha);
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j)
        if (!isZero(u(0, j))) {
            pivot = j;
            break;
        }
    if (pivot == n) return Als::zero(alpha); // u = 0 represents 0
    // Q columns: first column e_pivot / u_pivot, then for each other index
    // a vector killing that u coordinate. uQ = e_1 by construction.
    MatQ q(n, n);
    q(pivot, 0) = Rational(1) / u(0, pivot);
    std::size_t col = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        q(j, col) = Rational(1);
        q(pivot, col) = -u(0, j) / u(0, pivot);
        ++col;
    }
    LinearPencil r(n, alpha.size());
    for (std::size_t l = 0; l <= alpha.size(); ++l) r.coeff(l) = pencil.coeff(l) * q;
    return Als(alpha, std::move(r), v);
}

bool isSeriesExpandable(const Als& f) {
    if (f.isZeroSystem()) return true;
    return isInvertible(f.pencil().coeff(0));
}

NcPoly seriesExpand(const Als& f, std::size_t maxDeg) {
    NcPoly out(f.alphabet());
    if (f.isZeroSystem()) return out;
    const std::size_t n = f.dim(), d = f.alphabet().size();
    MatQ a0inv;
    try {
        a0inv = matInverse(f.pencil().coeff(0));
    } catch (const SingularMatrix&) {
        throw SeriesUndefined("scalar block A_0 is singular; no series at the origin");
    }
    std::vector<MatQ> step(d + 1); // step[l] = -A_0^{-1} A_l
    for (std::size_t l = 1; l <= d; ++l) step[l] = -(a0inv * f.pencil().coeff(l));
    MatQ tail = a0inv * f.v();

    MatQ e1(1, n);
    e1(0, 0) = Rational(1);
    std::vector<std::pair<Word, MatQ>> level;
    level.emplace_back(Word{}, e1);
    for (std::size_t deg = 0;; ++deg) {
        for (const auto& [w, r] : level) out.addTerm(w, (r * tail)(0, 0));
        if (deg == maxDeg) break;
        std::vector<std::pair<Word, MatQ>> next;
        next.reserve(level.size() * d);
        for (const auto& [w, r] : level)
            for (std::size_t l = 1; l <= d; ++l) {
                MatQ rn = r * step[l];
                if (rn.isZeroMatrix()) continue; // dead branch
                Word wn = w;
                wn.push_back(static_cast<std::uint32_t>(l));
                next.emplace_back(std::move(wn), std::move(rn));
            }
        if (next.empty()) break;
        level = std::move(next);
    }
    return out;
}

Als alsFromPoly(const NcPoly& p) {
    Als acc = Als::zero(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        const std::size_t k = w.size(), d = p.alphabet().size();
        LinearPencil pen(k + 1, d);
        pen.coeff(0) = MatQ::identity(k + 1);
        for (std::size_t j = 0; j < k; ++j) pen.coeff(w[j])(j, j + 1) = Rational(-1);
        MatQ v(k + 1, 1);
        v(k, 0) = c;
        acc = alsAdd(acc, Als(p.alphabet(), std::move(pen), std::move(v)));
    }
    return acc;
}

} // namespace ncf
