#ifndef NCF_MATEVAL_HPP
#define NCF_MATEVAL_HPP

#include <cstdint>
#include <optional>

#include "ncf/als.hpp"
#include "ncf/assignment.hpp"

namespace ncf {

/// A_0⊗I + Σ A_l⊗σ(x_l); letters with zero coefficient block may be
/// left unassigned.
template <typename S>
Mat<S> pencilEval(const Als& f, const MatAssignment<S>& sigma);

/// (u⊗I)·A(σ)^{-1}·(v⊗I). For v = e_n this is the upper-right m×m
/// block of the inverse. Throws SingularPencil when undefined at σ.
template <typename S>
Mat<S> alsEval(const Als& f, const MatAssignment<S>& sigma);

struct ProbeWitness {
    MatAssignmentQ assignment;
    MatQ value;
};

struct ZeroVerdict {
    bool probablyZero = true;
    std::size_t probes = 0;        // evaluations that went through
    std::size_t singularSkips = 0; // draws discarded for singular pencils
    std::optional<ProbeWitness> witness;
};

/// Evaluates at random exact assignments (entries uniform in -10..10)
/// over each size; any nonzero value certifies NonZero with a witness.
/// Sizes default to 1..dim.
ZeroVerdict isZeroProbabilistic(const Als& f, std::size_t trials = 3,
                                std::vector<std::size_t> sizes = {},
                                std::uint64_t seed = 0x5eedf00d);

struct EqualVerdict {
    bool equal = false;
    bool exact = false; // true when decided by series reduction, not probing
    std::size_t singularSkips = 0;
    std::optional<ProbeWitness> witness; // for the difference f - g
};

/// Equality of represented elements. Exact (decidable) when the
/// difference is series-expandable; otherwise probabilistic with probe
/// sizes 1..min(dim, 6).
EqualVerdict alsEqual(const Als& f, const Als& g, std::size_t trials = 3,
                      std::uint64_t seed = 0x5eedf00d);

/// Uniform random m×m matrix with integer entries in [-10, 10].
MatQ randomProbeMatrix(std::size_t m, std::uint64_t& state);

/// Random exact assignment for every letter of the alphabet.
MatAssignmentQ randomAssignment(const Alphabet& alpha, std::size_t m, std::uint64_t& state);

} // namespace ncf

#endif
