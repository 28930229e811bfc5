#include "inveul/closed_forms.hpp"

#include <utility>

#include "inveul/errors.hpp"

namespace inveul {

BigCoeff binomial(long upper, long lower) {
  if (lower < 0) return 0;
  BigCoeff result;
  const BigCoeff m(upper);
  // mpz_bin_ui implements the falling-factorial definition, including
  // negative upper arguments.
  mpz_bin_ui(result.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(lower));
  return result;
}

BigCoeff telephone_number(long n) {
  if (n < 0) throw IndexOutOfRange("telephone_number: n must be >= 0");
  BigCoeff prev2 = 1;  // T(0)
  BigCoeff prev1 = 1;  // T(1)
  if (n == 0) return prev2;
  for (long m = 2; m <= n; ++m) {
    BigCoeff cur = prev1 + (m - 1) * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

BigCoeff double_factorial(long m) {
  BigCoeff result = 1;
  for (long v = m; v >= 2; v -= 2) result *= v;
  return result;
}

namespace {

// One value of the auxiliary sum s(n) for parameters (x, y).
BigCoeff s_term(long x, long y, long n) {
  BigCoeff sum = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    sum += binomial(x + k - 1, k) * binomial(y + n - 2 * k, n - 2 * k);
  }
  return sum;
}

}  // namespace

std::vector<BigCoeff> s_sequence(const SnParams& p, long n_max) {
  if (n_max < 0) throw IndexOutOfRange("s_sequence: n_max must be >= 0");
  std::vector<BigCoeff> s;
  s.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) s.push_back(s_term(p.x, p.y, n));
  return s;
}

VerificationReport verify_s_recurrence(const SnParams& p, long n_max) {
  if (n_max < 2) throw IndexOutOfRange("verify_s_recurrence: n_max must be >= 2");
  VerificationReport report;
  report.methods = "s(n) direct summation vs three-term recurrence";
  report.n_lo = 0;
  report.n_hi = n_max - 2;
  const std::vector<BigCoeff> s = s_sequence(p, n_max);
  for (long n = 0; n + 2 <= n_max; ++n) {
    BigCoeff residual = (2 * p.x + p.y + n + 1) * s[static_cast<size_t>(n)]
                      + (p.y + 1) * s[static_cast<size_t>(n + 1)]
                      - (n + 2) * s[static_cast<size_t>(n + 2)];
    if (residual != 0) {
      report.ok = false;
      report.first_mismatch = "x=" + std::to_string(p.x) + " y=" + std::to_string(p.y) +
                              " n=" + std::to_string(n) + ": residual " +
                              to_decimal(residual);
      return report;
    }
  }
  return report;
}

BigCoeff j_closed(long half_n, long k) {
  if (half_n < 1) throw IndexOutOfRange("j_closed: half_n must be >= 1");
  if (k < 0 || k > 2 * half_n) {
    throw IndexOutOfRange("j_closed: k out of range 0..2n");
  }
  BigCoeff sum = 0;
  for (long i = 0; i <= k; ++i) {
    const long tri = i * (i + 1) / 2;
    BigCoeff term = binomial(2 * half_n + 1, k - i) * binomial(tri + half_n - 1, tri - 1);
    if ((k - i) % 2 != 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

BigCoeff i_closed(long n, long k) {
  if (n < 1) throw IndexOutOfRange("i_closed: n must be >= 1");
  if (k < 0 || k > n - 1) {
    throw IndexOutOfRange("i_closed: k out of range 0..n-1");
  }
  BigCoeff sum = 0;
  for (long r = 0; r <= k; ++r) {
    BigCoeff term = binomial(n + 1, k - r) * s_term(r * (r + 1) / 2, r, n);
    if ((k - r) % 2 != 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

DescentRow i_closed_row(int n) {
  if (n < 1) throw IndexOutOfRange("i_closed_row: n must be >= 1");
  std::vector<BigCoeff> coeffs;
  coeffs.reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) coeffs.push_back(i_closed(n, k));
  return make_descent_row(Family::Involution, n, std::move(coeffs));
}

DescentRow j_closed_row(int n) {
  if (n < 2) throw IndexOutOfRange("j_closed_row: n must be >= 2");
  if (n % 2 != 0) throw OddIndex("j_closed_row: n must be even");
  std::vector<BigCoeff> coeffs;
  coeffs.reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) coeffs.push_back(j_closed(n / 2, k));
  return make_descent_row(Family::FixedPointFree, n, std::move(coeffs));
}

namespace {

// Integer weight (m / (m - i)) C(m - i, i) of the power-sum expansion,
// evaluated with a checked division.
BigCoeff power_sum_weight(long m, long i, const char* context) {
  const long denom = m - i;
  return exact_div(m * binomial(denom, i), denom, context);
}

}  // namespace

BigCoeff a_explicit(const DescentRow& row, long k) {
  if (row.family != Family::Involution) {
    throw Error("a_explicit: expected an involution row");
  }
  const long n = row.n;
  if (k < 0 || 2 * k > n - 1) {
    throw IndexOutOfRange("a_explicit: k out of range 0..(n-1)/2");
  }
  const bool center = 2 * k + 1 == n;
  BigCoeff sum = center ? row.at(k) : BigCoeff(0);
  const long j_hi = center ? k - 1 : k;
  for (long j = 0; j <= j_hi; ++j) {
    BigCoeff term = power_sum_weight(n - 2 * j - 1, k - j, "a_explicit weight") * row.at(j);
    if ((k - j) % 2 != 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

BigCoeff b_explicit(const DescentRow& row, long k) {
  if (row.family != Family::FixedPointFree) {
    throw Error("b_explicit: expected a fixed-point-free row");
  }
  const long n = row.n;
  if (n % 2 != 0) throw OddIndex("b_explicit: row size must be even");
  if (k < 1 || 2 * k > n) {
    throw IndexOutOfRange("b_explicit: k out of range 1..n/2");
  }
  const bool center = 2 * k == n;
  BigCoeff sum = center ? row.at(k) : BigCoeff(0);
  const long j_hi = center ? k - 1 : k;
  for (long j = 1; j <= j_hi; ++j) {
    BigCoeff term = power_sum_weight(n - 2 * j, k - j, "b_explicit weight") * row.at(j);
    if ((k - j) % 2 != 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

GammaRow a_explicit_row(const DescentRow& row) {
  GammaRow g{GammaFamily::A, row.n, {}};
  for (long k = 0; k <= g.k_max(); ++k) g.gammas.push_back(a_explicit(row, k));
  validate(g);
  return g;
}

GammaRow b_explicit_row(const DescentRow& row) {
  if (row.n % 2 != 0) throw OddIndex("b_explicit_row: row size must be even");
  GammaRow g{GammaFamily::B, row.n, {}};
  for (long k = 1; k <= g.k_max(); ++k) g.gammas.push_back(b_explicit(row, k));
  validate(g);
  return g;
}

}  // namespace inveul
