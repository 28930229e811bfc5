#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace inveul {

// The scalar used everywhere: an exact, arbitrary-precision signed integer.
// Coefficient values grow super-exponentially in n, so nothing in the library
// ever touches machine-width arithmetic or floating point.
using BigCoeff = mpz_class;

// num / divisor, throwing DivisibilityViolation unless the division is exact.
// `context` names the recurrence or formula for the error message.
BigCoeff exact_div(const BigCoeff& num, long divisor, const char* context);

std::string to_decimal(const BigCoeff& v);

// Parses an optionally signed decimal string. Throws Error on anything else
// (no whitespace, no exponents, no base prefixes).
BigCoeff parse_decimal(std::string_view s);

}  // namespace inveul
