#ifndef NCF_COMPOSE_HPP
#define NCF_COMPOSE_HPP

#include <string>
#include <vector>

#include "ncf/als.hpp"

namespace ncf {

/// Total substitution: outer letter i is replaced by images[i-1], a
/// system over the inner alphabet. An empty image stands for the zero
/// element.
struct Substitution {
    Alphabet outer;
    Alphabet inner;
    std::vector<Als> images; // one per outer letter, over `inner`

    void validate() const;
};

struct SubstituteOptions {
    std::size_t probeTrials = 3;
    std::uint64_t seed = 0x5eedf00d;
    bool checkFullness = true;
    std::vector<std::string>* warnings = nullptr;
};

/// g ∘ f by linearization by enlargement: every letter occurrence in an
/// entry of the outer pencil gets its own copy of the inner system,
/// wired in through a unit row and a scaled -v column. The substituted
/// pencil must stay full; this is screened by random matrix probes
/// (sizes 1..dim g) and SingularAtAllProbes is raised when every probe
/// evaluates singular.
Als substitute(const Als& g, const Substitution& sub, const SubstituteOptions& opt = {});

/// Free chain rule, right path: the total directional derivative of g
/// over the doubled alphabet is substituted with (f, ∂_x f). The result
/// represents ∂_x (g ∘ f).
Als chainDerivative(const Als& g, const Substitution& sub, Letter x,
                    const SubstituteOptions& opt = {});

/// The 2n-dimensional system for Σ_i ∂_{y_i|y_i'} g over the doubled
/// alphabet (primed letters appended after the originals).
Als totalDirectionalDerivative(const Als& g, const Alphabet& doubled);

/// Doubled alphabet: the original names followed by primed copies.
Alphabet doubledAlphabet(const Alphabet& alpha);

} // namespace ncf

#endif
