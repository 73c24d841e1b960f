#ifndef NCF_NCPOLY_HPP
#define NCF_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include "ncf/alphabet.hpp"
#include "ncf/matrix.hpp"

namespace ncf {

template <typename S>
struct MatAssignment; // mateval.hpp

/* Non-commutative polynomials as finitely supported word -> coefficient
 * maps. This is the brute-force reference representation: slow but
 * simple, used as an independent oracle against the pencil machinery.
 */
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(Alphabet alpha) : alpha_(std::move(alpha)) {}

    static NcPoly zero(Alphabet alpha) { return NcPoly(std::move(alpha)); }
    static NcPoly constant(Alphabet alpha, const Rational& c);
    static NcPoly letter(Alphabet alpha, Letter x);
    static NcPoly monomial(Alphabet alpha, Word w, const Rational& c);

    const Alphabet& alphabet() const { return alpha_; }
    bool isZeroPoly() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    std::size_t degree() const; // 0 for the zero polynomial

    Rational coeff(const Word& w) const;
    const std::map<Word, Rational>& terms() const { return terms_; }

    void addTerm(const Word& w, const Rational& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Rational& c) const;
    NcPoly pow(unsigned n) const;

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NcPoly& o) const { return terms_ != o.terms_; }

    /// Drops every term of total degree above maxDeg.
    NcPoly truncated(std::size_t maxDeg) const;

    /// Hausdorff derivative: every occurrence of x in each word is
    /// replaced by `dir` (a letter different from x), or deleted when
    /// `dir` is absent (the partial-derivative case).
    NcPoly hausdorffDerive(Letter x, std::optional<Letter> dir = std::nullopt) const;

    /// Evaluates at square matrices; the empty word contributes the
    /// identity. All letters in the support must be assigned.
    template <typename S>
    Mat<S> evalAt(const MatAssignment<S>& sigma) const;

    /// Human-readable form, terms in the canonical (lexicographic) order.
    std::string toString() const;

private:
    void requireSameAlphabet(const NcPoly& o) const {
        if (alpha_ != o.alpha_) throw AlphabetMismatch("polynomial alphabets differ");
    }

    Alphabet alpha_;
    std::map<Word, Rational> terms_; // no zero coefficients stored
};

} // namespace ncf

#endif
