#ifndef MSK_RATIONAL_HPP
#define MSK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace msk {

// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
// denominator) as long as every value entering arithmetic is canonical,
// which parse_rational guarantees.
using Rational = mpq_class;

using QVector = std::vector<Rational>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Accepts "a" or "a/b" with optional leading sign. Throws parse_error on
// anything else (including zero denominators).
Rational parse_rational(const std::string& text);

// Canonical form: "a" for integers, "a/b" otherwise, b > 0, gcd(a,b) = 1.
std::string to_string(const Rational& q);

std::string to_string(const QVector& v);

}  // namespace msk

#endif
