#include <doctest.h>

#include "ncf/derivation.hpp"
#include "ncf/mateval.hpp"
#include "ncf/minimize.hpp"
#include "test_util.hpp"

using namespace ncf;
using namespace ncftest;

namespace {

const Alphabet kXyz{"x", "y", "z"};

NcPoly word(const char* letters, Rational c = Rational(1)) {
    Word w;
    for (const char* q = letters; *q; ++q) w.push_back(kXyz.letter(std::string(1, *q)).index);
    return NcPoly::monomial(kXyz, w, c);
}

// series of the i-th solution component, read off by renormalizing the
// system to u = e_i
NcPoly componentSeries(const Als& f, std::size_t i, std::size_t deg) {
    MatQ u(1, f.dim());
    u(0, i) = Rational(1);
    return seriesExpand(admissibilize(f.alphabet(), u, f.pencil(), f.v()), deg);
}

} // namespace

TEST_CASE("formal derivative block layout for the cubic staircase") {
    Alphabet ax{"x"};
    NcPoly x3(ax);
    x3.addTerm(Word(3, 1), Rational(1));
    Als f = alsFromPoly(x3);
    REQUIRE(f.dim() == 4);

    Als d = formalDerivative(f, Direction(ax.letter("x")));
    REQUIRE(d.dim() == 8);
    // diagonal copies of the pencil, A_x in the upper-right constant block
    CHECK(d.pencil().coeff(0).block(0, 0, 4, 4) == f.pencil().coeff(0));
    CHECK(d.pencil().coeff(0).block(4, 4, 4, 4) == f.pencil().coeff(0));
    CHECK(d.pencil().coeff(0).block(0, 4, 4, 4) == f.pencil().coeff(1));
    CHECK(d.pencil().coeff(1).block(0, 4, 4, 4).isZeroMatrix());
    CHECK(d.pencil().coeff(0).block(4, 0, 4, 4).isZeroMatrix());

    // solution vector (3x^2, 2x, 1, 0, x^3, x^2, x, 1)
    NcPoly one = NcPoly::constant(ax, Rational(1));
    auto mono = [&](std::size_t k, Rational c) {
        NcPoly p(ax);
        p.addTerm(Word(k, 1), c);
        return p;
    };
    CHECK(componentSeries(d, 0, 4) == mono(2, Rational(3)));
    CHECK(componentSeries(d, 1, 4) == mono(1, Rational(2)));
    CHECK(componentSeries(d, 2, 4) == one);
    CHECK(componentSeries(d, 3, 4).isZeroPoly());
    CHECK(componentSeries(d, 4, 4) == mono(3, Rational(1)));
    CHECK(componentSeries(d, 5, 4) == mono(2, Rational(1)));
    CHECK(componentSeries(d, 6, 4) == mono(1, Rational(1)));
    CHECK(componentSeries(d, 7, 4) == one);
}

TEST_CASE("formal derivative dimension is always 2n") {
    auto rng = makeRng(1616);
    for (int t = 0; t < 30; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 4, 4);
        Als f = polyToAlsViaOps(p);
        if (f.isZeroSystem()) continue;
        Als d = formalDerivative(f, Direction(kXyz.letter("x")));
        CHECK(d.dim() == 2 * f.dim());
    }
}

TEST_CASE("partial of the introduction cubic") {
    NcPoly p = word("xxx") + word("xx", Rational(4)) + word("x", Rational(3)) +
               NcPoly::constant(kXyz, Rational(5));
    Als d = partial(polyToAlsViaOps(p), kXyz.letter("x"));
    CHECK(seriesExpand(d, 3) ==
          word("xx", Rational(3)) + word("x", Rational(8)) + NcPoly::constant(kXyz, Rational(3)));
}

TEST_CASE("partial of xyzx against the displayed minimal system") {
    Als f = polyToAlsViaOps(word("xyzx"));
    Als d = partial(f, kXyz.letter("x"));
    CHECK(d.dim() == 6);
    CHECK(seriesExpand(d, 4) == word("xyz") + word("yzx"));

    // the displayed 6x6 system
    const Letter x = kXyz.letter("x"), y = kXyz.letter("y"), z = kXyz.letter("z");
    LinearPencil pen(6, 3);
    pen.coeff(0) = MatQ::identity(6);
    pen.coeff(x.index)(0, 1) = Rational(-1);
    pen.coeff(y.index)(0, 2) = Rational(-1);
    pen.coeff(y.index)(1, 3) = Rational(-1);
    pen.coeff(z.index)(2, 4) = Rational(-1);
    pen.coeff(z.index)(3, 5) = Rational(-1);
    pen.coeff(x.index)(4, 5) = Rational(-1);
    MatQ v(6, 1);
    v(5, 0) = Rational(1);
    Als displayed(kXyz, pen, v);
    CHECK(alsEqual(d, displayed).equal);
    CHECK(alsEqual(d, displayed).exact);
}

TEST_CASE("letters foreign to the derivation differentiate to zero") {
    Als f = polyToAlsViaOps(word("yyy"));
    Als d = partial(f, kXyz.letter("x"));
    CHECK(d.isZeroSystem());
}

TEST_CASE("directional derivative of x^2") {
    Alphabet xb{"x", "b"};
    NcPoly x2(xb);
    x2.addTerm(Word(2, 1), Rational(1));
    Als d = directional(polyToAlsViaOps(x2), xb.letter("x"), xb.letter("b"));
    NcPoly expected(xb);
    expected.addTerm(Word{1, 2}, Rational(1));
    expected.addTerm(Word{2, 1}, Rational(1));
    CHECK(seriesExpand(d, 2) == expected);
}

TEST_CASE("derivation is linear") {
    auto rng = makeRng(1717);
    for (int t = 0; t < 30; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 4, 3), q = randomPoly(rng, kXyz, 4, 3);
        Rational a = randomRational(rng), b = randomRational(rng);
        Als lhs = partial(alsAdd(alsScale(a, polyToAlsViaOps(p)), alsScale(b, polyToAlsViaOps(q))),
                          kXyz.letter("x"));
        NcPoly expect = p.hausdorffDerive(kXyz.letter("x")).scaled(a) +
                        q.hausdorffDerive(kXyz.letter("x")).scaled(b);
        CHECK(seriesExpand(lhs, 6) == expect);
    }
}

TEST_CASE("product rule against the oracle") {
    auto rng = makeRng(1818);
    for (int t = 0; t < 40; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 3, 3), q = randomPoly(rng, kXyz, 3, 3);
        Als fg = alsMul(polyToAlsViaOps(p), polyToAlsViaOps(q));
        Als d = partial(fg, kXyz.letter("x"));
        NcPoly expect = p.hausdorffDerive(kXyz.letter("x")) * q +
                        p * q.hausdorffDerive(kXyz.letter("x"));
        CHECK(seriesExpand(d, 6) == expect);
    }
}

TEST_CASE("derivative does not depend on the representation") {
    auto rng = makeRng(1919);
    for (int t = 0; t < 10; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 3, 3);
        Als f1 = polyToAlsViaOps(p);
        Als f2 = alsFromPoly(p); // different construction of the same element
        Als d1 = partial(f1, kXyz.letter("x"));
        Als d2 = partial(f2, kXyz.letter("x"));
        CHECK(alsEqual(d1, d2).equal);
    }
}

TEST_CASE("derivations in different letters commute") {
    auto rng = makeRng(2020);
    for (int t = 0; t < 20; ++t) {
        NcPoly p = randomPoly(rng, kXyz, 4, 3);
        Als f = polyToAlsViaOps(p);
        Als xy = partial(partial(f, kXyz.letter("x")), kXyz.letter("y"));
        Als yx = partial(partial(f, kXyz.letter("y")), kXyz.letter("x"));
        CHECK(alsEqual(xy, yx).equal);
    }
}

TEST_CASE("higher derivatives") {
    Als f = polyToAlsViaOps(word("xxy"));
    CHECK(higherDerivative(f, Word{}) == f);

    Word xy{kXyz.letter("x").index, kXyz.letter("y").index};
    Word yx{kXyz.letter("y").index, kXyz.letter("x").index};
    CHECK(alsEqual(higherDerivative(f, xy), higherDerivative(f, yx)).equal);

    // third derivative of x^3 is the constant 6
    Als cube = polyToAlsViaOps(word("xxx"));
    Word xxx(3, kXyz.letter("x").index);
    Als d3 = higherDerivative(cube, xxx);
    CHECK(seriesExpand(d3, 1) == NcPoly::constant(kXyz, Rational(6)));
}

TEST_CASE("gradient") {
    Als xPlusY = alsAdd(Als::letter(kXyz, kXyz.letter("x")), Als::letter(kXyz, kXyz.letter("y")));
    auto g = gradient(xPlusY);
    REQUIRE(g.size() == 3);
    CHECK(seriesExpand(g[0], 1) == NcPoly::constant(kXyz, Rational(1)));
    CHECK(seriesExpand(g[1], 1) == NcPoly::constant(kXyz, Rational(1)));
    CHECK(g[2].isZeroSystem());

    auto gxy = gradient(polyToAlsViaOps(word("xy")));
    CHECK(seriesExpand(gxy[0], 2) == word("y"));
    CHECK(seriesExpand(gxy[1], 2) == word("x"));
    CHECK(gxy[2].isZeroSystem());

    for (const auto& comp : gradient(Als::constant(kXyz, Rational(9)))) CHECK(comp.isZeroSystem());
}

TEST_CASE("jacobian") {
    std::vector<Als> fs{Als::letter(kXyz, kXyz.letter("x")), Als::letter(kXyz, kXyz.letter("y"))};
    auto j = jacobian(fs);
    REQUIRE(j.size() == 2);
    CHECK(seriesExpand(j[0][0], 1) == NcPoly::constant(kXyz, Rational(1)));
    CHECK(j[0][1].isZeroSystem());
    CHECK(j[1][0].isZeroSystem());
    CHECK(seriesExpand(j[1][1], 1) == NcPoly::constant(kXyz, Rational(1)));

    auto j2 = jacobian({polyToAlsViaOps(word("xy")), Als::constant(kXyz, Rational(2))});
    CHECK(seriesExpand(j2[0][0], 2) == word("y"));
    CHECK(seriesExpand(j2[0][1], 2) == word("x"));
    for (const auto& cell : j2[1]) CHECK(cell.isZeroSystem());
}

TEST_CASE("direction must differ from the letter") {
    CHECK_THROWS_AS(Direction(kXyz.letter("x"), kXyz.letter("x")), InvalidDirection);
}
