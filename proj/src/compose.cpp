#include "ncf/compose.hpp"

#include "ncf/derivation.hpp"
#include "ncf/linalg.hpp"
#include "ncf/mateval.hpp"

namespace ncf {

namespace {

// Probes fullness of A_g ∘ f: a full matrix stays invertible at generic
// matrix points, a non-full one is singular at every point. One
// invertible probe therefore certifies fullness; all probes singular is
// strong evidence against it.
void probeFullness(const Als& g, const Substitution& sub, const SubstituteOptions& opt) {
    const std::size_t n = g.dim(), dOut = sub.outer.size();
    std::uint64_t state = opt.seed;
    std::size_t evaluated = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t t = 0; t < opt.probeTrials; ++t) {
            MatAssignmentQ inner = randomAssignment(sub.inner, m, state);
            // evaluate the images, then the outer pencil at those values
            MatQ pencil = kron(g.pencil().coeff(0), MatQ::identity(m));
            bool skip = false;
            for (std::size_t i = 1; i <= dOut; ++i) {
                if (g.pencil().coeff(i).isZeroMatrix()) continue;
                MatQ value;
                try {
                    value = alsEval(sub.images[i - 1], inner);
                } catch (const SingularPencil&) {
                    skip = true;
                    break;
                }
                pencil += kron(g.pencil().coeff(i), value);
            }
            if (skip) continue;
            ++evaluated;
            if (isInvertible(pencil)) return; // full for sure
        }
    }
    if (evaluated == 0) {
        if (opt.warnings)
            opt.warnings->push_back(
                "fullness of the substituted pencil could not be probed; proceeding");
        return;
    }
    throw SingularAtAllProbes("substituted pencil evaluated singular at every probe");
}

} // namespace

void Substitution::validate() const {
    if (images.size() != outer.size())
        throw AlphabetMismatch("substitution must cover every outer letter");
    for (const auto& img : images)
        if (img.alphabet() != inner)
            throw AlphabetMismatch("substitution image over the wrong alphabet");
}

Als substitute(const Als& g, const Substitution& sub, const SubstituteOptions& opt) {
    sub.validate();
    if (g.alphabet() != sub.outer) throw AlphabetMismatch("outer alphabet mismatch");
    if (g.isZeroSystem()) return Als::zero(sub.inner);
    if (opt.checkFullness) probeFullness(g, sub, opt);

    const std::size_t n = g.dim(), dOut = sub.outer.size(), dIn = sub.inner.size();

    // one inner copy per letter occurrence in the outer pencil
    struct Occurrence {
        std::size_t row, col, letter, offset;
    };
    std::vector<Occurrence> occ;
    std::size_t total = n;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = 1; i <= dOut; ++i) {
                if (isZero(g.pencil().coeff(i)(r, c))) continue;
                const Als& img = sub.images[i - 1];
                if (img.isZeroSystem()) continue; // letter replaced by 0
                occ.push_back({r, c, i, total});
                total += img.dim();
            }

    LinearPencil p(total, dIn);
    p.coeff(0).setBlock(0, 0, g.pencil().coeff(0)); // the scalar part survives
    for (const auto& o : occ) {
        const Als& img = sub.images[o.letter - 1];
        const Rational& alpha = g.pencil().coeff(o.letter)(o.row, o.col);
        for (std::size_t l = 0; l <= dIn; ++l)
            p.coeff(l).setBlock(o.offset, o.offset, img.pencil().coeff(l));
        p.coeff(0)(o.row, o.offset) = Rational(1); // u_f row: e_1
        for (std::size_t i = 0; i < img.dim(); ++i)
            p.coeff(0)(o.offset + i, o.col) = -alpha * img.v()(i, 0);
    }
    MatQ v(total, 1);
    v.setBlock(0, 0, g.v());
    return Als(sub.inner, std::move(p), std::move(v));
}

Alphabet doubledAlphabet(const Alphabet& alpha) {
    std::vector<std::string> primed;
    primed.reserve(alpha.size());
    for (const auto& name : alpha.names()) {
        std::string candidate = name + "'";
        while (alpha.hasName(candidate)) candidate += "'";
        primed.push_back(candidate);
    }
    return alpha.extended(primed);
}

Als totalDirectionalDerivative(const Als& g, const Alphabet& doubled) {
    const std::size_t n = g.dim(), d = g.alphabet().size();
    if (doubled.size() != 2 * d) throw AlphabetMismatch("doubled alphabet size");
    LinearPencil p(2 * n, 2 * d);
    for (std::size_t l = 0; l <= d; ++l) {
        p.coeff(l).setBlock(0, 0, g.pencil().coeff(l));
        p.coeff(l).setBlock(n, n, g.pencil().coeff(l));
    }
    // coupling blocks Σ_i A_g^{(i)} ⊗ y_i'
    for (std::size_t i = 1; i <= d; ++i) p.coeff(d + i).setBlock(0, n, g.pencil().coeff(i));
    MatQ v(2 * n, 1);
    v.setBlock(n, 0, g.v());
    return Als(doubled, std::move(p), std::move(v));
}

Als chainDerivative(const Als& g, const Substitution& sub, Letter x, const SubstituteOptions& opt) {
    sub.validate();
    if (g.alphabet() != sub.outer) throw AlphabetMismatch("outer alphabet mismatch");
    sub.inner.name(x);
    if (g.isZeroSystem()) return Als::zero(sub.inner);

    Alphabet doubled = doubledAlphabet(sub.outer);
    Als gPrime = totalDirectionalDerivative(g, doubled);

    Substitution ext;
    ext.outer = doubled;
    ext.inner = sub.inner;
    ext.images = sub.images;
    for (const auto& img : sub.images) ext.images.push_back(partial(img, x));
    return substitute(gPrime, ext, opt);
}

} // namespace ncf
