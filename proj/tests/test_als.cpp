#include <doctest.h>

#include "ncf/als.hpp"
#include "ncf/linalg.hpp"
#include "ncf/mateval.hpp"
#include "ncf/serialize.hpp"
#include "test_util.hpp"

using namespace ncf;
using namespace ncftest;

namespace {

const Alphabet kXy{"x", "y"};
const Alphabet kXyz{"x", "y", "z"};

} // namespace

TEST_CASE("atoms") {
    CHECK(Als::constant(kXy, Rational(0)).isZeroSystem());

    Als c = Als::constant(kXy, Rational(5, 3));
    CHECK(c.dim() == 1);
    CHECK(seriesExpand(c, 2) == NcPoly::constant(kXy, Rational(5, 3)));

    Als x = Als::letter(kXy, kXy.letter("x"));
    CHECK(x.dim() == 2);
    CHECK(seriesExpand(x, 3) == NcPoly::letter(kXy, kXy.letter("x")));
}

TEST_CASE("dimension bookkeeping of the rational operations") {
    Als x = Als::letter(kXy, kXy.letter("x"));
    Als y = Als::letter(kXy, kXy.letter("y"));
    CHECK(alsAdd(x, y).dim() == 4);
    CHECK(alsMul(x, y).dim() == 4);
    CHECK(alsInverse(x).dim() == 3);
    CHECK(alsScale(Rational(7), x).dim() == 2);
}

TEST_CASE("add/mul/scale agree with the polynomial oracle") {
    Als x = Als::letter(kXy, kXy.letter("x"));
    Als y = Als::letter(kXy, kXy.letter("y"));
    NcPoly px = NcPoly::letter(kXy, kXy.letter("x"));
    NcPoly py = NcPoly::letter(kXy, kXy.letter("y"));

    CHECK(seriesExpand(alsAdd(x, y), 2) == px + py);
    CHECK(seriesExpand(alsMul(x, y), 3) == px * py);
    CHECK(seriesExpand(alsScale(Rational(2), x), 2) == px.scaled(Rational(2)));
    CHECK(alsScale(Rational(0), x).isZeroSystem());
    CHECK(alsScale(Rational(1), x) == x);

    Als zero = Als::zero(kXy);
    CHECK(alsAdd(x, zero) == x);
    CHECK(alsAdd(zero, y) == y);
    CHECK(alsMul(x, zero).isZeroSystem());

    Als one = Als::constant(kXy, Rational(1));
    CHECK(seriesExpand(alsMul(x, one), 2) == px);
}

TEST_CASE("random expression folds match oracle polynomial algebra") {
    auto rng = makeRng(909);
    for (int t = 0; t < 60; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 4, 3);
        NcPoly q = randomPoly(rng, kXyz, 4, 3);
        Als fp = polyToAlsViaOps(p), fq = polyToAlsViaOps(q);
        std::size_t deg = p.degree() + q.degree();
        CHECK(seriesExpand(alsAdd(fp, fq), std::max(p.degree(), q.degree())) == p + q);
        CHECK(seriesExpand(alsMul(fp, fq), deg) == p * q);
    }
}

TEST_CASE("geometric series of (1-x)^{-1}") {
    Alphabet ax{"x"};
    Als oneMinusX = alsAdd(Als::constant(ax, Rational(1)),
                           alsScale(Rational(-1), Als::letter(ax, ax.letter("x"))));
    Als inv = alsInverse(oneMinusX);
    NcPoly series = seriesExpand(inv, 4);
    NcPoly expected(ax);
    for (std::size_t k = 0; k <= 4; ++k)
        expected.addTerm(Word(k, ax.letter("x").index), Rational(1));
    CHECK(series == expected);
}

TEST_CASE("series of the dim-4 cubic system") {
    // staircase system for x^3 - z, scalar block invertible
    Alphabet xz{"x", "z"};
    LinearPencil p(4, 2);
    p.coeff(0) = MatQ::identity(4);
    for (std::size_t i = 0; i < 3; ++i) p.coeff(xz.letter("x").index)(i, i + 1) = Rational(-1);
    p.coeff(xz.letter("z").index)(0, 3) = Rational(1);
    MatQ v(4, 1);
    v(3, 0) = Rational(1);
    Als f(xz, p, v);

    NcPoly expected(xz);
    expected.addTerm(Word(3, xz.letter("x").index), Rational(1));
    expected.addTerm(Word(1, xz.letter("z").index), Rational(-1));
    CHECK(seriesExpand(f, 3) == expected);
}

TEST_CASE("series of the empty system is zero") {
    CHECK(seriesExpand(Als::zero(kXy), 5).isZeroPoly());
}

TEST_CASE("series requires an invertible scalar block") {
    Als xinv = alsInverse(Als::letter(kXy, kXy.letter("x")));
    CHECK_FALSE(isSeriesExpandable(xinv));
    CHECK_THROWS_AS(seriesExpand(xinv, 2), SeriesUndefined);
}

TEST_CASE("admissible transforms preserve the series") {
    auto rng = makeRng(1010);
    Als f = alsMul(Als::letter(kXy, kXy.letter("x")), Als::letter(kXy, kXy.letter("y")));
    NcPoly base = seriesExpand(f, 4);

    CHECK(applyTransform(f, MatQ::identity(f.dim()), MatQ::identity(f.dim())) == f);

    for (int t = 0; t < 20; ++t) {
        std::size_t n = f.dim();
        // random invertible P; random Q with first row e_1
        MatQ p = randomInvertibleMatQ(rng, n);
        MatQ q = randomInvertibleMatQ(rng, n);
        for (std::size_t j = 0; j < n; ++j) q(0, j) = j == 0 ? Rational(1) : Rational(0);
        if (!isInvertible(q)) continue;
        Als g = applyTransform(f, p, q);
        CHECK(seriesExpand(g, 4) == base);
    }
}

TEST_CASE("transform admissibility is enforced") {
    Als f = Als::letter(kXy, kXy.letter("x"));
    MatQ badQ{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK_THROWS_AS(applyTransform(f, MatQ::identity(2), badQ), NotAdmissible);
    MatQ singular(2, 2);
    CHECK_THROWS_AS(applyTransform(f, singular, MatQ::identity(2)), NotAdmissible);
}

TEST_CASE("row swap on the non-admissible rows keeps the element") {
    // dim-3 system for x*y: swap the last two rows by P
    Als f = alsMul(Als::letter(kXy, kXy.letter("x")), Als::letter(kXy, kXy.letter("y")));
    std::size_t n = f.dim();
    MatQ p = MatQ::identity(n);
    std::swap(p(n - 1, n - 1), p(n - 2, n - 1));
    std::swap(p(n - 2, n - 2), p(n - 1, n - 2));
    Als g = applyTransform(f, p, MatQ::identity(n));
    CHECK(seriesExpand(g, 3) == seriesExpand(f, 3));
}

TEST_CASE("inverse of inverse") {
    Als f = alsAdd(Als::letter(kXy, kXy.letter("x")), Als::letter(kXy, kXy.letter("y")));
    Als ff = alsInverse(alsInverse(f));
    EqualVerdict verdict = alsEqual(f, ff);
    CHECK(verdict.equal);
}

TEST_CASE("JSON round trip is bit exact") {
    auto rng = makeRng(1111);
    Als f = alsInverse(alsAdd(Als::letter(kXy, kXy.letter("x")),
                              Als::constant(kXy, Rational(7, 3))));
    nlohmann::json j = alsToJson(f);
    Als g = alsFromJson(j);
    CHECK(f == g);

    Als z = Als::zero(kXy);
    CHECK(alsFromJson(alsToJson(z)).isZeroSystem());
    (void)rng;
}
