#ifndef PADIC_RATIONAL_HPP
#define PADIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace padic {

// Exact arithmetic is delegated to GMP. A canonical mpq_class already has
// the invariants we rely on everywhere (positive denominator, gcd-reduced,
// zero stored as 0/1); parse_rational canonicalizes, and every arithmetic
// result of canonical operands stays canonical.
using integer = mpz_class;
using rational = mpq_class;

// Accepts "a" or "a/b" with an optional leading sign on a. Rejects anything
// else with a position-bearing parse_error; b = 0 is a parse error too.
rational parse_rational(const std::string& text);
integer parse_integer(const std::string& text);

std::string to_string(const rational& x);  // "a" or "a/b", canonical
std::string to_string(const integer& n);

}  // namespace padic

#endif
