#ifndef NCF_EXPR_HPP
#define NCF_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncf/als.hpp"
#include "ncf/ncpoly.hpp"

namespace ncf {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree for nc rational expressions. Variables are stored by
/// name; letters are resolved against an alphabet when folding.
struct Expr {
    enum class Kind { Const, Var, Add, Mul, Neg, Inv, Scale };

    Kind kind;
    Rational value;          // Const, Scale
    std::string name;        // Var
    ExprPtr lhs, rhs;        // Add, Mul; lhs only for Neg, Inv, Scale

    static ExprPtr constant(Rational c);
    static ExprPtr var(std::string name);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr inv(ExprPtr a);
    static ExprPtr scale(Rational c, ExprPtr a);
};

struct ParseResult {
    ExprPtr expr;
    Alphabet alphabet;
    std::vector<std::string> warnings;
};

/* Grammar:
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (['*'] factor)*
 *   factor := atom ('^' ('-1' | nat))?
 *   atom   := rational | ident | '(' expr ')' | 'inv' '(' expr ')'
 * Multiplication is non-commutative and left-associative; juxtaposition
 * multiplies. Rational literals are "p", "p/q" or decimals (converted
 * exactly).
 *
 * With `declared` set, unknown identifiers raise UnknownLetter;
 * otherwise letters are inferred in order of first appearance (with a
 * warning) and slot order follows that appearance order.
 */
ParseResult parseExpr(std::string_view text, const std::optional<Alphabet>& declared = std::nullopt);

/// Round-trippable text form.
std::string printExpr(const ExprPtr& e);

/// Folds the tree through the rational operations.
Als exprToAls(const ExprPtr& e, const Alphabet& alpha);

/// Polynomial fold; throws on Inv. The independent oracle path.
NcPoly exprToPoly(const ExprPtr& e, const Alphabet& alpha);

/// Letters appearing in the tree, in order of first appearance.
std::vector<std::string> collectNames(const ExprPtr& e);

} // namespace ncf

#endif
