#include "ncf/ncpoly.hpp"

#include "ncf/assignment.hpp"

namespace ncf {

NcPoly NcPoly::constant(Alphabet alpha, const Rational& c) {
    NcPoly p(std::move(alpha));
    p.addTerm(Word{}, c);
    return p;
}

NcPoly NcPoly::letter(Alphabet alpha, Letter x) {
    alpha.name(x); // range check
    NcPoly p(std::move(alpha));
    p.addTerm(Word{x.index}, Rational(1));
    return p;
}

NcPoly NcPoly::monomial(Alphabet alpha, Word w, const Rational& c) {
    NcPoly p(std::move(alpha));
    p.addTerm(w, c);
    return p;
}

std::size_t NcPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
}

Rational NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::addTerm(const Word& w, const Rational& c) {
    if (isZero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (isZero(it->second)) terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    requireSameAlphabet(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.addTerm(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    requireSameAlphabet(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.addTerm(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    requireSameAlphabet(o);
    NcPoly r(alpha_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.addTerm(w, c1 * c2);
        }
    return r;
}

NcPoly NcPoly::scaled(const Rational& c) const {
    NcPoly r(alpha_);
    if (isZero(c)) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

NcPoly NcPoly::pow(unsigned n) const {
    NcPoly r = NcPoly::constant(alpha_, Rational(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

NcPoly NcPoly::truncated(std::size_t maxDeg) const {
    NcPoly r(alpha_);
    for (const auto& [w, c] : terms_)
        if (w.size() <= maxDeg) r.terms_.emplace(w, c);
    return r;
}

NcPoly NcPoly::hausdorffDerive(Letter x, std::optional<Letter> dir) const {
    alpha_.name(x);
    if (dir && dir->index == x.index)
        throw InvalidDirection("derivative direction must differ from the letter");
    NcPoly r(alpha_);
    for (const auto& [w, c] : terms_) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != x.index) continue;
            Word d;
            d.reserve(w.size());
            d.insert(d.end(), w.begin(), w.begin() + i);
            if (dir) d.push_back(dir->index);
            d.insert(d.end(), w.begin() + i + 1, w.end());
            r.addTerm(d, c);
        }
    }
    return r;
}

template <typename S>
Mat<S> NcPoly::evalAt(const MatAssignment<S>& sigma) const {
    const std::size_t m = sigma.m;
    Mat<S> acc(m, m);
    for (const auto& [w, c] : terms_) {
        Mat<S> prod = Mat<S>::identity(m);
        for (auto idx : w) prod = prod * sigma.get(idx);
        if constexpr (std::is_same_v<S, double>)
            acc += prod * toDouble(c);
        else
            acc += prod * c;
    }
    return acc;
}

template MatQ NcPoly::evalAt(const MatAssignmentQ&) const;
template MatD NcPoly::evalAt(const MatAssignmentD&) const;

std::string NcPoly::toString() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool wantCoeff = w.empty() || a != Rational(1);
        if (wantCoeff) s += ratToString(a);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i || wantCoeff) s += "*";
            s += alpha_.name(Letter{w[i]});
        }
    }
    return s;
}

} // namespace ncf
