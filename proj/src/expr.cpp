#include "ncf/expr.hpp"

#include <cctype>

namespace ncf {

ExprPtr Expr::constant(Rational c) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Const;
    e->value = std::move(c);
    return e;
}

ExprPtr Expr::var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Mul;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Neg;
    e->lhs = std::move(a);
    return e;
}

ExprPtr Expr::inv(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Inv;
    e->lhs = std::move(a);
    return e;
}

ExprPtr Expr::scale(Rational c, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Scale;
    e->value = std::move(c);
    e->lhs = std::move(a);
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skipWs();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    ExprPtr expr() {
        skipWs();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        ExprPtr acc = term();
        if (negate) acc = Expr::neg(acc);
        for (;;) {
            skipWs();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = Expr::add(acc, term());
            } else if (c == '-') {
                ++pos_;
                acc = Expr::add(acc, Expr::neg(term()));
            } else {
                return acc;
            }
        }
    }

    ExprPtr term() {
        ExprPtr acc = factor();
        for (;;) {
            skipWs();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = Expr::mul(acc, factor());
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
                acc = Expr::mul(acc, factor()); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        skipWs();
        if (peek() != '^') return base;
        ++pos_;
        skipWs();
        if (peek() == '-') {
            ++pos_;
            if (peek() != '1') throw SyntaxError("only ^-1 is supported as a negative power", pos_);
            ++pos_;
            return Expr::inv(base);
        }
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw SyntaxError("expected an exponent", pos_);
        unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (n == 0) return Expr::constant(Rational(1));
        ExprPtr acc = base;
        for (unsigned long i = 1; i < n; ++i) acc = Expr::mul(acc, base);
        return acc;
    }

    ExprPtr atom() {
        skipWs();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (name == "inv") {
                expect('(');
                ExprPtr e = expr();
                expect(')');
                return Expr::inv(e);
            }
            return Expr::var(std::move(name));
        }
        throw SyntaxError("expected a value", pos_);
    }

    ExprPtr number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        // a '/' directly followed by digits makes an exact fraction
        if (peek() == '/') {
            std::size_t save = pos_;
            ++pos_;
            skipWs();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            } else {
                pos_ = save;
            }
        }
        try {
            return Expr::constant(ratFromString(text_.substr(start, pos_ - start)));
        } catch (const Error& e) {
            throw SyntaxError(e.what(), start);
        }
    }

    std::string ident() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skipWs();
        if (peek() != c)
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void collectNamesInto(const ExprPtr& e, std::vector<std::string>& names) {
    if (!e) return;
    if (e->kind == Expr::Kind::Var) {
        for (const auto& n : names)
            if (n == e->name) return;
        names.push_back(e->name);
        return;
    }
    collectNamesInto(e->lhs, names);
    collectNamesInto(e->rhs, names);
}

} // namespace

std::vector<std::string> collectNames(const ExprPtr& e) {
    std::vector<std::string> names;
    collectNamesInto(e, names);
    return names;
}

ParseResult parseExpr(std::string_view text, const std::optional<Alphabet>& declared) {
    ParseResult result;
    result.expr = Parser(text).parse();
    if (declared) {
        result.alphabet = *declared;
        for (const auto& name : collectNames(result.expr))
            if (!result.alphabet.hasName(name))
                throw UnknownLetter("undeclared letter: " + name);
    } else {
        result.alphabet = Alphabet(collectNames(result.expr));
        if (result.alphabet.size() > 0)
            result.warnings.push_back("letters inferred in order of first appearance: " +
                                      [&] {
                                          std::string s;
                                          for (const auto& n : result.alphabet.names()) {
                                              if (!s.empty()) s += ",";
                                              s += n;
                                          }
                                          return s;
                                      }());
    }
    return result;
}

std::string printExpr(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Const:
            return sgn(e->value) < 0 ? "(" + ratToString(e->value) + ")" : ratToString(e->value);
        case Expr::Kind::Var:
            return e->name;
        case Expr::Kind::Add:
            return "(" + printExpr(e->lhs) + " + " + printExpr(e->rhs) + ")";
        case Expr::Kind::Mul:
            return "(" + printExpr(e->lhs) + " * " + printExpr(e->rhs) + ")";
        case Expr::Kind::Neg:
            return "(-" + printExpr(e->lhs) + ")";
        case Expr::Kind::Inv:
            return "inv(" + printExpr(e->lhs) + ")";
        case Expr::Kind::Scale:
            return "(" + ratToString(e->value) + " * " + printExpr(e->lhs) + ")";
    }
    throw Error("corrupt expression node");
}

Als exprToAls(const ExprPtr& e, const Alphabet& alpha) {
    switch (e->kind) {
        case Expr::Kind::Const:
            return Als::constant(alpha, e->value);
        case Expr::Kind::Var:
            return Als::letter(alpha, alpha.letter(e->name));
        case Expr::Kind::Add:
            return alsAdd(exprToAls(e->lhs, alpha), exprToAls(e->rhs, alpha));
        case Expr::Kind::Mul:
            // scalar factors fold as scalings to keep dimensions down
            if (e->lhs->kind == Expr::Kind::Const)
                return alsScale(e->lhs->value, exprToAls(e->rhs, alpha));
            if (e->rhs->kind == Expr::Kind::Const)
                return alsScale(e->rhs->value, exprToAls(e->lhs, alpha));
            return alsMul(exprToAls(e->lhs, alpha), exprToAls(e->rhs, alpha));
        case Expr::Kind::Neg:
            return alsScale(Rational(-1), exprToAls(e->lhs, alpha));
        case Expr::Kind::Inv:
            return alsInverse(exprToAls(e->lhs, alpha));
        case Expr::Kind::Scale:
            return alsScale(e->value, exprToAls(e->lhs, alpha));
    }
    throw Error("corrupt expression node");
}

NcPoly exprToPoly(const ExprPtr& e, const Alphabet& alpha) {
    switch (e->kind) {
        case Expr::Kind::Const:
            return NcPoly::constant(alpha, e->value);
        case Expr::Kind::Var:
            return NcPoly::letter(alpha, alpha.letter(e->name));
        case Expr::Kind::Add:
            return exprToPoly(e->lhs, alpha) + exprToPoly(e->rhs, alpha);
        case Expr::Kind::Mul:
            return exprToPoly(e->lhs, alpha) * exprToPoly(e->rhs, alpha);
        case Expr::Kind::Neg:
            return exprToPoly(e->lhs, alpha).scaled(Rational(-1));
        case Expr::Kind::Inv:
            throw Error("inverse is not polynomial");
        case Expr::Kind::Scale:
            return exprToPoly(e->lhs, alpha).scaled(e->value);
    }
    throw Error("corrupt expression node");
}

} // namespace ncf
