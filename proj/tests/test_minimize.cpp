#include <doctest.h>

#include <set>

#include "ncf/derivation.hpp"
#include "ncf/linalg.hpp"
#include "ncf/mateval.hpp"
#include "ncf/minimize.hpp"
#include "test_util.hpp"

using namespace ncf;
using namespace ncftest;

namespace {

const Alphabet kXyz{"x", "y", "z"};

// Independent oracle: the minimal representation dimension of a
// polynomial equals the rank of its Hankel matrix, built brute-force on
// the prefixes (rows) and suffixes (columns) of the support words.
std::size_t hankelRank(const NcPoly& p) {
    std::set<Word> prefixes, suffixes;
    for (const auto& [w, c] : p.terms())
        for (std::size_t k = 0; k <= w.size(); ++k) {
            prefixes.insert(Word(w.begin(), w.begin() + k));
            suffixes.insert(Word(w.begin() + k, w.end()));
        }
    std::vector<Word> rows(prefixes.begin(), prefixes.end());
    std::vector<Word> cols(suffixes.begin(), suffixes.end());
    MatQ h(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Word w = rows[i];
            w.insert(w.end(), cols[j].begin(), cols[j].end());
            h(i, j) = p.coeff(w);
        }
    return rankExact(h);
}

NcPoly word(const char* letters, Rational c = Rational(1)) {
    Word w;
    for (const char* q = letters; *q; ++q) w.push_back(kXyz.letter(std::string(1, *q)).index);
    return NcPoly::monomial(kXyz, w, c);
}

// left family = coefficient columns of A^{-1}v, right family = rows of
// uA^{-1}; both must span fully for a minimal system. The closure only
// expands vectors that were independent, which suffices: the span of
// all word coefficients equals the closure span.
void checkFamiliesIndependent(const Als& f) {
    const std::size_t n = f.dim(), d = f.alphabet().size();
    MatQ a0inv = matInverse(f.pencil().coeff(0));
    std::vector<MatQ> step(d + 1);
    for (std::size_t l = 1; l <= d; ++l) step[l] = -(a0inv * f.pencil().coeff(l));
    MatQ b = a0inv * f.v();

    auto closureSize = [&](bool rows) {
        EchelonSpan span(n);
        std::vector<std::vector<Rational>> queue;
        std::vector<Rational> seed(n);
        for (std::size_t i = 0; i < n; ++i)
            seed[i] = rows ? (i == 0 ? Rational(1) : Rational(0)) : b(i, 0);
        if (span.insert(seed)) queue.push_back(seed);
        while (!queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            for (std::size_t l = 1; l <= d; ++l) {
                std::vector<Rational> nx(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        nx[i] += rows ? v[j] * step[l](j, i) : step[l](i, j) * v[j];
                if (span.insert(nx)) queue.push_back(std::move(nx));
            }
        }
        return span.size();
    };
    CHECK(closureSize(false) == n); // left family
    CHECK(closureSize(true) == n);  // right family
}

} // namespace

TEST_CASE("minimize the raw derivative of a single letter to the constant 1") {
    Als x = Als::letter(kXyz, kXyz.letter("x"));
    Als raw = formalDerivative(x, Direction(kXyz.letter("x")));
    CHECK(raw.dim() == 4);
    Als m = minimize(raw);
    CHECK(m.dim() == 1);
    CHECK(seriesExpand(m, 1) == NcPoly::constant(kXyz, Rational(1)));
}

TEST_CASE("word systems minimize to their Hankel rank") {
    // xyzx built by products: dim 8 -> 5
    Als f = alsMul(Als::letter(kXyz, kXyz.letter("x")),
                   alsMul(Als::letter(kXyz, kXyz.letter("y")),
                          alsMul(Als::letter(kXyz, kXyz.letter("z")),
                                 Als::letter(kXyz, kXyz.letter("x")))));
    CHECK(f.dim() == 8);
    Als m = minimize(f);
    CHECK(m.dim() == 5);
    CHECK(hankelRank(word("xyzx")) == 5);
    CHECK(seriesExpand(m, 4) == word("xyzx"));
}

TEST_CASE("rank fixtures") {
    Als f = polyToAlsViaOps(word("xyzx"));
    CHECK(alsRank(f) == 5);

    Als d = formalDerivative(f, Direction(kXyz.letter("x")));
    CHECK(alsRank(d) == 6);
    CHECK(hankelRank(word("xyz") + word("yzx")) == 6);

    CHECK(alsRank(Als::zero(kXyz)) == 0);
}

TEST_CASE("rank is not certified outside the series regime") {
    Als xinv = alsInverse(Als::letter(kXyz, kXyz.letter("x")));
    CHECK_THROWS_AS(alsRank(xinv), RankNotCertified);
}

TEST_CASE("minimize of the empty system") {
    CHECK(minimize(Als::zero(kXyz)).isZeroSystem());
}

TEST_CASE("series-case minimize matches the Hankel oracle on random polynomials") {
    auto rng = makeRng(1212);
    for (int t = 0; t < 50; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 4, 4);
        Als f = polyToAlsViaOps(p);
        Als m = minimize(f);
        CHECK(m.dim() == hankelRank(p));
        CHECK(seriesExpand(m, p.degree() + 2) == p);
        if (!m.isZeroSystem()) checkFamiliesIndependent(m);
    }
}

TEST_CASE("minimize preserves series to degree 8") {
    auto rng = makeRng(1313);
    for (int t = 0; t < 20; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 6, 5);
        Als f = polyToAlsViaOps(p);
        CHECK(seriesExpand(minimize(f), 8) == seriesExpand(f, 8));
    }
}

TEST_CASE("idempotence") {
    auto rng = makeRng(1414);
    for (int t = 0; t < 20; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 4, 4);
        Als m = minimize(polyToAlsViaOps(p));
        CHECK(minimize(m).dim() == m.dim());
    }
    // structural path: an inverse-bearing element
    Als g = alsInverse(alsAdd(alsInverse(Als::letter(kXyz, kXyz.letter("x"))),
                              Als::letter(kXyz, kXyz.letter("y"))));
    Als m = minimize(g);
    CHECK(m.dim() <= g.dim());
    CHECK(minimize(m).dim() == m.dim());
    CHECK(alsEqual(m, g).equal);
}

TEST_CASE("rank subadditivity under sum and product") {
    auto rng = makeRng(1515);
    for (int t = 0; t < 25; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 3, 3);
        NcPoly q = randomPoly(rng, kXyz, 3, 3);
        Als fp = polyToAlsViaOps(p), fq = polyToAlsViaOps(q);
        std::size_t rp = alsRank(fp), rq = alsRank(fq);
        CHECK(alsRank(alsAdd(fp, fq)) <= rp + rq);
        CHECK(alsRank(alsMul(fp, fq)) <= rp + rq);
    }
}

TEST_CASE("rank of a non-polynomial series") {
    Alphabet ax{"x"};
    Als geo = alsInverse(alsAdd(Als::constant(ax, Rational(1)),
                                alsScale(Rational(-1), Als::letter(ax, ax.letter("x")))));
    CHECK(alsRank(geo) == 1); // (1-x)^{-1} has a one-dimensional system
}
