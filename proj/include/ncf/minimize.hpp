#ifndef NCF_MINIMIZE_HPP
#define NCF_MINIMIZE_HPP

#include "ncf/als.hpp"

namespace ncf {

/* Dimension reduction.
 *
 * When the scalar block A_0 is invertible the element is a recognizable
 * series; a two-sided weighted-automaton reduction (reachability span,
 * then observability span) yields the exact minimal dimension, which
 * certifies the left/right-family independence criterion.
 *
 * Otherwise only structural reductions are applied (decoupled block
 * elimination and scalar-pivot row/column elimination via admissible
 * transforms); the result represents the same element but is not
 * claimed minimal.
 */
Als minimize(const Als& f);

/// Minimal representation dimension. Only certified in the series-
/// expandable regime; throws RankNotCertified when A_0 is singular.
std::size_t alsRank(const Als& f);

} // namespace ncf

#endif
