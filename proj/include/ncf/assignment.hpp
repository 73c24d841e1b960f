#ifndef NCF_ASSIGNMENT_HPP
#define NCF_ASSIGNMENT_HPP

#include <map>

#include "ncf/alphabet.hpp"
#include "ncf/matrix.hpp"

namespace ncf {

/// An evaluation point: one m×m matrix per letter, all of equal size.
template <typename S>
struct MatAssignment {
    std::size_t m = 1;
    std::map<std::uint32_t, Mat<S>> byLetter;

    void set(Letter l, Mat<S> value) {
        if (value.rows() != m || value.cols() != m)
            throw DimensionMismatch("assignment matrix is not m x m");
        byLetter[l.index] = std::move(value);
    }

    bool has(std::uint32_t index) const { return byLetter.count(index) != 0; }

    const Mat<S>& get(std::uint32_t index) const {
        auto it = byLetter.find(index);
        if (it == byLetter.end())
            throw DimensionMismatch("no matrix assigned to letter index " + std::to_string(index));
        return it->second;
    }
};

using MatAssignmentQ = MatAssignment<Rational>;
using MatAssignmentD = MatAssignment<double>;

inline MatAssignmentD toDoubleAssignment(const MatAssignmentQ& q) {
    MatAssignmentD d;
    d.m = q.m;
    for (const auto& [idx, mat] : q.byLetter) d.byLetter[idx] = toDoubleMat(mat);
    return d;
}

} // namespace ncf

#endif
