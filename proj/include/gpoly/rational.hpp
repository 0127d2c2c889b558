#pragma once

#include <gmpxx.h>
#include <string>

namespace gpoly {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator) after every operation.
using Rat = mpq_class;

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exp);

inline int rat_sign(const Rat& r) { return sgn(r); }

} // namespace gpoly
