#ifndef NCF_DERIVATION_HPP
#define NCF_DERIVATION_HPP

#include <optional>
#include <vector>

#include "ncf/als.hpp"

namespace ncf {

/// Derivation direction: replace x by a single letter, or by the unit 1
/// (empty direction) for the classical partial derivative.
struct Direction {
    Letter x;
    std::optional<Letter> dir; // nullopt = unit direction

    Direction(Letter x_, std::optional<Letter> dir_ = std::nullopt) : x(x_), dir(dir_) {
        if (dir && dir->index == x.index)
            throw InvalidDirection("direction letter must differ from the derivation letter");
    }
};

/// The raw block construction of the derivative system: dimension exactly
/// 2n, not minimized.
Als formalDerivative(const Als& f, const Direction& d);

/// Partial derivative (unit direction), minimized.
Als partial(const Als& f, Letter x);

/// Directional derivative, minimized.
Als directional(const Als& f, Letter x, Letter dir);

/// Iterated partial derivative along the letters of w; the empty word
/// returns f itself.
Als higherDerivative(const Als& f, const Word& w);

/// All partials, in letter order.
std::vector<Als> gradient(const Als& f);

/// Row i, column j holds the j-th partial of fs[i].
std::vector<std::vector<Als>> jacobian(const std::vector<Als>& fs);

} // namespace ncf

#endif
