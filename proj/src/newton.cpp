#include "ncf/newton.hpp"

#include <cmath>

#include "ncf/derivation.hpp"
#include "ncf/linalg.hpp"
#include "ncf/mateval.hpp"
#include "ncf/minimize.hpp"

namespace ncf {

namespace {

// column-major vectorization, so vec(A·X·B) = (Bᵀ ⊗ A)·vec(X)
MatD vecCol(const MatD& m) {
    MatD v(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

MatD unvecCol(const MatD& v, std::size_t rows, std::size_t cols) {
    MatD m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = v(j * rows + i, 0);
    return m;
}

MatAssignmentD withUnknown(const MatAssignmentD& params, Letter x, const MatD& X, Letter b,
                           const MatD& B) {
    MatAssignmentD sigma = params;
    sigma.m = X.rows();
    sigma.byLetter[x.index] = X;
    sigma.byLetter[b.index] = B;
    return sigma;
}

// evaluated pencil entry (r,c) with the direction letter left out
MatD entryEval(const Als& g, std::size_t r, std::size_t c, Letter b, const MatAssignmentD& sigma) {
    const std::size_t m = sigma.m;
    MatD acc(m, m);
    const double a0 = toDouble(g.pencil().coeff(0)(r, c));
    for (std::size_t k = 0; k < m; ++k) acc(k, k) = a0;
    for (std::size_t l = 1; l <= g.alphabet().size(); ++l) {
        if (l == b.index) continue;
        double coeff = toDouble(g.pencil().coeff(l)(r, c));
        if (coeff == 0.0) continue;
        acc += sigma.get(static_cast<std::uint32_t>(l)) * coeff;
    }
    return acc;
}

} // namespace

Als extendAlphabet(const Als& f, const std::vector<std::string>& extraNames) {
    Alphabet ext = f.alphabet().extended(extraNames);
    if (f.isZeroSystem()) return Als::zero(ext);
    LinearPencil p(f.dim(), ext.size());
    for (std::size_t l = 0; l <= f.alphabet().size(); ++l) p.coeff(l) = f.pencil().coeff(l);
    return Als(ext, std::move(p), f.v());
}

Als buildStepSystem(const Als& f, Letter x, Letter b) {
    if (!f.pencil().coeff(b.index).isZeroMatrix())
        throw InvalidDirection("direction letter already occurs in f");
    return minimize(alsAdd(f, formalDerivative(f, Direction(x, b))));
}

MatD newtonStepProbe(const Als& g, Letter x, Letter b, const MatD& X,
                     const MatAssignmentD& params, double tolStep) {
    const std::size_t m = X.rows();
    MatD r0;
    try {
        r0 = alsEval(g, withUnknown(params, x, X, b, MatD(m, m)));
    } catch (const SingularPencil&) {
        throw StepSingular("step system singular at the current iterate");
    }
    MatD op(m * m, m * m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            MatD unit(m, m);
            unit(i, j) = 1.0;
            MatD probe;
            try {
                probe = alsEval(g, withUnknown(params, x, X, b, unit));
            } catch (const SingularPencil&) {
                throw StepSingular("step system singular at a basis probe");
            }
            MatD col = vecCol(probe - r0);
            for (std::size_t rr = 0; rr < m * m; ++rr) op(rr, j * m + i) = col(rr, 0);
        }
    MatD rhs = -vecCol(r0);
    MatD sol = lstsqMinNorm(op, rhs);
    double resid = (op * sol - rhs).frobeniusNorm();
    double scale = std::max(rhs.frobeniusNorm(), 1e-300);
    if (resid > tolStep * scale)
        throw StepSingular("step operator rank-deficient: residual " + std::to_string(resid));
    return unvecCol(sol, m, m);
}

MatD newtonStepPq(const Als& g, Letter x, Letter b, const MatD& X, const MatAssignmentD& params,
                  const PqPattern& pattern, double tolStep) {
    const std::size_t n = g.dim(), m = X.rows();
    const MatQ& bCoeff = g.pencil().coeff(b.index);

    auto inRange = [&](std::size_t idx) { return idx < n; };
    for (const auto& [i, p] : pattern.tCells) {
        if (!inRange(i) || !inRange(p) || i >= p)
            throw PatternBilinear("P cells must lie strictly above the diagonal");
        if (!isZero(g.v()(p, 0)))
            throw PatternBilinear("P cell column meets the right-hand side");
        for (std::size_t j = 0; j < n; ++j)
            if (!isZero(bCoeff(p, j)))
                throw PatternBilinear("direction letter occurs in a P-multiplied row");
    }
    for (const auto& [q, j] : pattern.uCells) {
        if (!inRange(q) || !inRange(j) || q >= j)
            throw PatternBilinear("Q cells must lie strictly above the diagonal");
        if (q == 0) throw PatternBilinear("first row of Q must stay e_1");
        for (std::size_t i = 0; i < n; ++i)
            if (!isZero(bCoeff(i, q)))
                throw PatternBilinear("direction letter occurs in a Q-multiplied column");
    }
    for (const auto& [i, p] : pattern.tCells)
        for (const auto& [q, j] : pattern.uCells) {
            (void)i;
            (void)j;
            for (std::size_t l = 0; l <= g.alphabet().size(); ++l)
                if (!isZero(g.pencil().coeff(l)(p, q)))
                    throw PatternBilinear("pattern produces a bilinear T·A·U term");
        }
    // the vanishing region must cover u and the support of v, otherwise
    // a zero block does not certify a root
    bool coversU = false;
    for (auto r : pattern.zeroRows) coversU |= r == 0;
    if (!coversU) throw PatternBilinear("zero region must contain the u row");
    for (std::size_t i = 0; i < n; ++i) {
        if (isZero(g.v()(i, 0))) continue;
        bool covered = false;
        for (auto c : pattern.zeroCols) covered |= c == i;
        if (!covered) throw PatternBilinear("zero region must cover the support of v");
    }

    MatAssignmentD sigma = params;
    sigma.m = m;
    sigma.byLetter[x.index] = X;

    const std::size_t nt = pattern.tCells.size(), nu = pattern.uCells.size();
    const std::size_t unknowns = (1 + nt + nu) * m * m;
    const std::size_t eqs = pattern.zeroRows.size() * pattern.zeroCols.size() * m * m;
    MatD op(eqs, unknowns);
    MatD rhs(eqs, 1);
    const MatD eye = MatD::identity(m);

    std::size_t eqBase = 0;
    for (auto i : pattern.zeroRows)
        for (auto j : pattern.zeroCols) {
            MatD cij = entryEval(g, i, j, b, sigma);
            MatD rvec = -vecCol(cij);
            for (std::size_t r = 0; r < m * m; ++r) rhs(eqBase + r, 0) = rvec(r, 0);

            double beta = toDouble(bCoeff(i, j));
            if (beta != 0.0)
                for (std::size_t r = 0; r < m * m; ++r) op(eqBase + r, r) = beta;

            for (std::size_t t = 0; t < nt; ++t) {
                const auto& [ti, tp] = pattern.tCells[t];
                if (ti != i) continue;
                MatD mpj = entryEval(g, tp, j, b, sigma);
                MatD blockOp = kron(mpj.transpose(), eye); // vec(T·M) = (Mᵀ⊗I)vec(T)
                op.setBlock(eqBase, (1 + t) * m * m, blockOp);
            }
            for (std::size_t u = 0; u < nu; ++u) {
                const auto& [uq, uj] = pattern.uCells[u];
                if (uj != j) continue;
                MatD miq = entryEval(g, i, uq, b, sigma);
                MatD blockOp = kron(eye, miq); // vec(M·U) = (I⊗M)vec(U)
                op.setBlock(eqBase, (1 + nt + u) * m * m, blockOp);
            }
            eqBase += m * m;
        }

    MatD sol = lstsqMinNorm(op, rhs);
    double resid = (op * sol - rhs).frobeniusNorm();
    double scale = std::max(rhs.frobeniusNorm(), 1e-300);
    if (resid > tolStep * scale)
        throw StepSingular("transform system unsolvable: residual " + std::to_string(resid));
    MatD bvec(m * m, 1);
    for (std::size_t r = 0; r < m * m; ++r) bvec(r, 0) = sol(r, 0);
    return unvecCol(bvec, m, m);
}

NewtonResult newtonSolve(const NewtonProblem& problem, StepMethod method, const Als* pqSystem,
                         const PqPattern* pqPattern) {
    if (!problem.f.pencil().coeff(problem.b.index).isZeroMatrix())
        throw InvalidDirection("direction letter occurs in f");
    if (method == StepMethod::Pq && (pqSystem == nullptr || pqPattern == nullptr))
        throw PatternBilinear("transform method needs an explicit system and pattern");

    Als g = pqSystem ? *pqSystem : buildStepSystem(problem.f, problem.x, problem.b);

    NewtonResult result;
    result.x = problem.x0;
    std::size_t bigSteps = 0;
    for (std::size_t k = 0; k < problem.maxIter; ++k) {
        MatD B = method == StepMethod::Probe
                     ? newtonStepProbe(g, problem.x, problem.b, result.x, problem.params)
                     : newtonStepPq(g, problem.x, problem.b, result.x, problem.params, *pqPattern);
        NewtonTraceRow row;
        row.k = k;
        row.stepNorm = B.frobeniusNorm();
        if (problem.reference) row.errNorm = (result.x - *problem.reference).frobeniusNorm();
        if (problem.commutatorLetter) {
            const MatD& zp = problem.params.get(*problem.commutatorLetter);
            row.commNorm = (result.x * zp - zp * result.x).frobeniusNorm();
        }
        result.trace.rows.push_back(row);
        result.x += B;
        if (row.stepNorm < problem.tol) {
            result.trace.converged = true;
            break;
        }
        bigSteps = row.stepNorm > 1e6 ? bigSteps + 1 : 0;
        if (bigSteps >= 3) {
            result.trace.diverged = true;
            break;
        }
    }
    return result;
}

NewtonTrace commutativeCubeRootIteration(const MatD& z, const MatD& x0, std::size_t iters,
                                         const std::optional<MatD>& reference) {
    NewtonTrace trace;
    MatD x = x0;
    for (std::size_t k = 1; k <= iters; ++k) {
        MatD correction;
        try {
            correction = matSolve(x * x, z); // X^{-2} Z
        } catch (const SingularMatrix&) {
            throw SingularIterate("iterate became singular at step " + std::to_string(k));
        }
        MatD next = x * (2.0 / 3.0) + correction * (1.0 / 3.0);
        NewtonTraceRow row;
        row.k = k;
        row.stepNorm = (next - x).frobeniusNorm();
        if (reference) row.errNorm = (next - *reference).frobeniusNorm();
        row.commNorm = (next * z - z * next).frobeniusNorm();
        trace.rows.push_back(row);
        x = next;
    }
    return trace;
}

std::vector<ScalarNewtonRow> scalarCubeRootTable(double z, double x0, std::size_t iters) {
    std::vector<ScalarNewtonRow> rows;
    double x = x0;
    for (std::size_t k = 1; k <= iters; ++k) {
        double next = x - (x * x * x - z) / (3.0 * x * x);
        rows.push_back({k, std::abs(next - x), next});
        x = next;
    }
    return rows;
}

CubeRootFixture cubeRootFixture() {
    CubeRootFixture fx;
    fx.alpha = Alphabet{"x", "z", "b"};
    const Letter x = fx.alpha.letter("x"), z = fx.alpha.letter("z");

    {
        LinearPencil p(4, 3);
        p.coeff(0) = MatQ::identity(4);
        for (std::size_t i = 0; i < 3; ++i) p.coeff(x.index)(i, i + 1) = Rational(-1);
        p.coeff(z.index)(0, 3) = Rational(1);
        MatQ v(4, 1);
        v(3, 0) = Rational(1);
        fx.f = Als(fx.alpha, std::move(p), std::move(v));
    }
    {
        const Letter b = fx.alpha.letter("b");
        LinearPencil p(6, 3);
        p.coeff(0) = MatQ::identity(6);
        p.coeff(x.index)(0, 1) = Rational(-1);
        p.coeff(x.index)(1, 2) = Rational(-1);
        p.coeff(x.index)(2, 5) = Rational(-1);
        p.coeff(x.index)(3, 4) = Rational(-1);
        p.coeff(x.index)(4, 5) = Rational(-1);
        p.coeff(b.index)(0, 3) = Rational(-1);
        p.coeff(b.index)(1, 4) = Rational(-1);
        p.coeff(b.index)(2, 5) = Rational(-1);
        p.coeff(z.index)(0, 5) = Rational(1);
        MatQ v(6, 1);
        v(5, 0) = Rational(1);
        fx.stepSystem = Als(fx.alpha, std::move(p), std::move(v));
    }
    fx.pattern.tCells = {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    fx.pattern.uCells = {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
    fx.pattern.zeroRows = {0, 1, 2};
    fx.pattern.zeroCols = {3, 4, 5};

    fx.z = MatD{{47, 84, 54}, {42, 116, 99}, {9, 33, 32}};
    fx.cbrtZ = MatD{{3, 2, 0}, {1, 4, 3}, {0, 1, 2}};
    fx.x0 = MatD{{1, 0, 2}, {0, 1, 0}, {0, 0, 1}};
    return fx;
}

NewtonResult ncCubeRootDemo(StepMethod method) {
    CubeRootFixture fx = cubeRootFixture();
    NewtonProblem problem;
    problem.f = fx.f;
    problem.x = fx.alpha.letter("x");
    problem.b = fx.alpha.letter("b");
    problem.params.m = 3;
    problem.params.byLetter[fx.alpha.letter("z").index] = fx.z;
    problem.x0 = fx.x0;
    problem.reference = fx.cbrtZ;
    problem.commutatorLetter = fx.alpha.letter("z").index;
    if (method == StepMethod::Pq)
        return newtonSolve(problem, method, &fx.stepSystem, &fx.pattern);
    return newtonSolve(problem, method);
}

} // namespace ncf
