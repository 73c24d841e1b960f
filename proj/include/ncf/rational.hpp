#ifndef NCF_RATIONAL_HPP
#define NCF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncf {

/* Exact scalars are GMP rationals, kept canonical (gcd 1, positive
 * denominator) by mpq_class itself. The float backend is plain double;
 * generic code switches on the scalar type where tolerances matter.
 */
using Rational = mpq_class;

inline bool isZero(const Rational& q) { return sgn(q) == 0; }
inline bool isZero(double x) { return x == 0.0; }

inline double toDouble(const Rational& q) { return q.get_d(); }
inline double toDouble(double x) { return x; }

/// Parses "p", "p/q" or a decimal literal ("1.25", "-0.5e3") exactly.
Rational ratFromString(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string ratToString(const Rational& q);

/// Shortest decimal string that round-trips through double.
std::string doubleToString(double x);

} // namespace ncf

#endif
