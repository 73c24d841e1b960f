#include "ncf/mateval.hpp"

#include <random>

#include "ncf/linalg.hpp"
#include "ncf/minimize.hpp"

namespace ncf {

namespace {

template <typename S>
Mat<S> coeffAs(const MatQ& m) {
    if constexpr (std::is_same_v<S, double>)
        return toDoubleMat(m);
    else
        return m;
}

} // namespace

template <typename S>
Mat<S> pencilEval(const Als& f, const MatAssignment<S>& sigma) {
    const std::size_t n = f.dim(), m = sigma.m, d = f.alphabet().size();
    Mat<S> acc = kron(coeffAs<S>(f.pencil().coeff(0)), Mat<S>::identity(m));
    for (std::size_t l = 1; l <= d; ++l) {
        const MatQ& block = f.pencil().coeff(l);
        if (block.isZeroMatrix()) continue;
        if (!sigma.has(static_cast<std::uint32_t>(l)))
            throw DimensionMismatch("letter '" + f.alphabet().names()[l - 1] + "' is unassigned");
        acc += kron(coeffAs<S>(block), sigma.get(static_cast<std::uint32_t>(l)));
    }
    (void)n;
    return acc;
}

template <typename S>
Mat<S> alsEval(const Als& f, const MatAssignment<S>& sigma) {
    const std::size_t m = sigma.m;
    if (f.isZeroSystem()) return Mat<S>(m, m);
    const std::size_t n = f.dim();
    Mat<S> pencil = pencilEval(f, sigma);
    Mat<S> rhs(n * m, m); // v ⊗ I_m
    for (std::size_t i = 0; i < n; ++i) {
        S vi;
        if constexpr (std::is_same_v<S, double>)
            vi = toDouble(f.v()(i, 0));
        else
            vi = f.v()(i, 0);
        if (isZero(vi)) continue;
        for (std::size_t k = 0; k < m; ++k) rhs(i * m + k, k) = vi;
    }
    Mat<S> sol;
    try {
        sol = matSolve(std::move(pencil), std::move(rhs));
    } catch (const SingularMatrix&) {
        throw SingularPencil("system pencil is singular at the given matrices");
    }
    return sol.block(0, 0, m, m); // u = e_1 picks the first m rows
}

template MatQ pencilEval(const Als&, const MatAssignmentQ&);
template MatD pencilEval(const Als&, const MatAssignmentD&);
template MatQ alsEval(const Als&, const MatAssignmentQ&);
template MatD alsEval(const Als&, const MatAssignmentD&);

MatQ randomProbeMatrix(std::size_t m, std::uint64_t& state) {
    std::mt19937_64 rng(state);
    std::uniform_int_distribution<int> entry(-10, 10);
    MatQ r(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r(i, j) = Rational(entry(rng));
    state = rng();
    return r;
}

MatAssignmentQ randomAssignment(const Alphabet& alpha, std::size_t m, std::uint64_t& state) {
    MatAssignmentQ sigma;
    sigma.m = m;
    for (std::uint32_t l = 1; l <= alpha.size(); ++l)
        sigma.byLetter[l] = randomProbeMatrix(m, state);
    return sigma;
}

ZeroVerdict isZeroProbabilistic(const Als& f, std::size_t trials, std::vector<std::size_t> sizes,
                                std::uint64_t seed) {
    ZeroVerdict verdict;
    if (f.isZeroSystem()) return verdict; // exactly zero
    if (sizes.empty())
        for (std::size_t m = 1; m <= f.dim(); ++m) sizes.push_back(m);
    std::uint64_t state = seed;
    for (std::size_t m : sizes) {
        for (std::size_t t = 0; t < trials; ++t) {
            MatAssignmentQ sigma = randomAssignment(f.alphabet(), m, state);
            MatQ value;
            try {
                value = alsEval(f, sigma);
            } catch (const SingularPencil&) {
                ++verdict.singularSkips;
                continue;
            }
            ++verdict.probes;
            if (!value.isZeroMatrix()) {
                verdict.probablyZero = false;
                verdict.witness = ProbeWitness{std::move(sigma), std::move(value)};
                return verdict;
            }
        }
    }
    return verdict;
}

EqualVerdict alsEqual(const Als& f, const Als& g, std::size_t trials, std::uint64_t seed) {
    if (f.alphabet() != g.alphabet()) throw AlphabetMismatch("comparing over different alphabets");
    Als diff = alsAdd(f, alsScale(Rational(-1), g));
    EqualVerdict verdict;
    if (isSeriesExpandable(diff)) {
        // zero series <=> the reduced system is empty; this decides
        // equality exactly in the series regime
        verdict.exact = true;
        verdict.equal = minimize(diff).isZeroSystem();
        return verdict;
    }
    std::vector<std::size_t> sizes;
    for (std::size_t m = 1; m <= std::min<std::size_t>(diff.dim(), 6); ++m) sizes.push_back(m);
    ZeroVerdict z = isZeroProbabilistic(diff, trials, sizes, seed);
    verdict.equal = z.probablyZero;
    verdict.singularSkips = z.singularSkips;
    verdict.witness = std::move(z.witness);
    return verdict;
}

} // namespace ncf
