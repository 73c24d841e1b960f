#include "ncf/derivation.hpp"

#include "ncf/minimize.hpp"

namespace ncf {

Als formalDerivative(const Als& f, const Direction& d) {
    if (f.isZeroSystem()) return f;
    f.alphabet().name(d.x);
    if (d.dir) f.alphabet().name(*d.dir);
    const std::size_t n = f.dim(), nl = f.alphabet().size();
    const std::size_t slot = d.dir ? d.dir->index : 0;
    LinearPencil p(2 * n, nl);
    for (std::size_t l = 0; l <= nl; ++l) {
        const MatQ& a = f.pencil().coeff(l);
        p.coeff(l).setBlock(0, 0, a);
        p.coeff(l).setBlock(n, n, a);
    }
    // the coupling block A_x lands in the coefficient slot of the direction
    p.coeff(slot).setBlock(0, n, f.pencil().coeff(d.x.index));
    MatQ v(2 * n, 1);
    v.setBlock(n, 0, f.v());
    return Als(f.alphabet(), std::move(p), std::move(v));
}

Als partial(const Als& f, Letter x) {
    return minimize(formalDerivative(f, Direction(x)));
}

Als directional(const Als& f, Letter x, Letter dir) {
    return minimize(formalDerivative(f, Direction(x, dir)));
}

Als higherDerivative(const Als& f, const Word& w) {
    Als acc = f;
    for (auto idx : w) acc = partial(acc, Letter{idx});
    return acc;
}

std::vector<Als> gradient(const Als& f) {
    std::vector<Als> g;
    g.reserve(f.alphabet().size());
    for (std::uint32_t l = 1; l <= f.alphabet().size(); ++l)
        g.push_back(partial(f, Letter{l}));
    return g;
}

std::vector<std::vector<Als>> jacobian(const std::vector<Als>& fs) {
    std::vector<std::vector<Als>> j;
    j.reserve(fs.size());
    for (const auto& f : fs) j.push_back(gradient(f));
    return j;
}

} // namespace ncf
