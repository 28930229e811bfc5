#include "inveul/bigcoeff.hpp"

#include <cctype>
#include <cstdlib>

#include "inveul/errors.hpp"

namespace inveul {

BigCoeff exact_div(const BigCoeff& num, long divisor, const char* context) {
  if (divisor == 0) {
    throw DivisibilityViolation(std::string(context) + ": division by zero");
  }
  BigCoeff d(divisor);
  if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) {
    throw DivisibilityViolation(std::string(context) + ": " + to_decimal(num) +
                                " is not divisible by " + std::to_string(divisor));
  }
  BigCoeff q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string to_decimal(const BigCoeff& v) { return v.get_str(10); }

BigCoeff parse_decimal(std::string_view s) {
  if (s.empty()) throw Error("parse_decimal: empty string");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error("parse_decimal: sign without digits");
  for (size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw Error("parse_decimal: not a decimal integer: '" + std::string(s) + "'");
    }
  }
  return BigCoeff(std::string(s), 10);
}

}  // namespace inveul
