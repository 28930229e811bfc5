#include "inveul/polyseq.hpp"

#include <algorithm>
#include <utility>

#include "inveul/errors.hpp"

namespace inveul {

namespace {
const BigCoeff kZero{0};
}  // namespace

const char* family_name(Family f) {
  return f == Family::Involution ? "I" : "J";
}

const char* gamma_family_name(GammaFamily f) {
  return f == GammaFamily::A ? "a" : "b";
}

const BigCoeff& DescentRow::at(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs.size())) return kZero;
  return coeffs[static_cast<size_t>(k)];
}

void validate(const DescentRow& row) {
  if (row.n < 1) throw Error("DescentRow: n must be positive");
  if (static_cast<long>(row.coeffs.size()) != row.n) {
    throw Error("DescentRow: expected exactly " + std::to_string(row.n) +
                " coefficients, got " + std::to_string(row.coeffs.size()));
  }
  for (const BigCoeff& c : row.coeffs) {
    if (c < 0) throw Error("DescentRow: negative entry " + to_decimal(c));
  }
  if (row.family == Family::Involution) {
    if (row.coeffs[0] != 1) {
      throw Error("DescentRow: involution rows start with 1");
    }
  } else {
    if (row.coeffs[0] != 0) {
      throw Error("DescentRow: fixed-point-free rows start with 0");
    }
    if (row.n % 2 != 0) {
      for (const BigCoeff& c : row.coeffs) {
        if (c != 0) {
          throw Error("DescentRow: odd fixed-point-free rows are all zero");
        }
      }
    }
  }
}

DescentRow make_descent_row(Family f, int n, std::vector<BigCoeff> coeffs) {
  DescentRow row{f, n, std::move(coeffs)};
  validate(row);
  return row;
}

DescentRow zero_fixed_point_free_row(int n) {
  if (n < 1) throw Error("zero_fixed_point_free_row: n must be positive");
  return DescentRow{Family::FixedPointFree, n,
                    std::vector<BigCoeff>(static_cast<size_t>(n))};
}

long GammaRow::k_max() const {
  return family == GammaFamily::B ? n / 2 : (n - 1) / 2;
}

const BigCoeff& GammaRow::at(long k) const {
  const long i = k - k_min();
  if (i < 0 || i >= static_cast<long>(gammas.size())) return kZero;
  return gammas[static_cast<size_t>(i)];
}

void validate(const GammaRow& row) {
  if (row.n < 1) throw Error("GammaRow: n must be positive");
  if (row.family == GammaFamily::B && row.n % 2 != 0) {
    throw Error("GammaRow: family B is defined for even n only");
  }
  const long expected = row.k_max() - row.k_min() + 1;
  if (static_cast<long>(row.gammas.size()) != expected) {
    throw Error("GammaRow: expected " + std::to_string(expected) +
                " entries, got " + std::to_string(row.gammas.size()));
  }
}

GammaRow make_gamma_row(GammaFamily f, int n, std::vector<BigCoeff> gammas) {
  GammaRow row{f, n, std::move(gammas)};
  validate(row);
  return row;
}

bool is_symmetric(const DescentRow& row) {
  const long n = row.n;
  if (row.family == Family::Involution) {
    for (long k = 0; 2 * k < n; ++k) {
      if (row.at(k) != row.at(n - 1 - k)) return false;
    }
    return true;
  }
  // Fixed-point-free: palindromic about n/2 with the conceptual coeffs[n] = 0,
  // which forces coeffs[0] = 0 as well.
  for (long k = 0; 2 * k <= n; ++k) {
    if (row.at(k) != row.at(n - k)) return false;
  }
  return true;
}

bool is_unimodal(const DescentRow& row) {
  const long lo = row.family == Family::FixedPointFree ? 1 : 0;
  const long hi = row.n - 1;
  long i = lo;
  while (i < hi && row.at(i) <= row.at(i + 1)) ++i;
  while (i < hi && row.at(i) >= row.at(i + 1)) ++i;
  return i >= hi;
}

bool is_log_concave(std::span<const BigCoeff> seq) {
  for (size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  }
  return true;
}

bool abel_identity_holds(std::span<const BigCoeff> x, std::span<const BigCoeff> a) {
  if (x.size() != a.size()) throw Error("abel: lists must have equal length");
  BigCoeff lhs = 0;
  for (size_t i = 0; i < x.size(); ++i) lhs += a[i] * x[i];
  BigCoeff rhs = 0;
  BigCoeff prefix = 0;
  for (size_t k = 0; k < x.size(); ++k) {
    prefix += a[k];
    const BigCoeff& next = (k + 1 < x.size()) ? x[k + 1] : kZero;
    rhs += (x[k] - next) * prefix;
  }
  return lhs == rhs;
}

bool abel_nonneg(std::span<const BigCoeff> x, std::span<const BigCoeff> a) {
  if (x.size() != a.size()) throw Error("abel: lists must have equal length");
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] < x[i + 1]) return false;
  }
  if (!x.empty() && x.back() < 0) return false;
  BigCoeff prefix = 0;
  for (const BigCoeff& ai : a) {
    prefix += ai;
    if (prefix < 0) return false;
  }
  BigCoeff sum = 0;
  for (size_t i = 0; i < x.size(); ++i) sum += a[i] * x[i];
  if (sum < 0 || !abel_identity_holds(x, a)) {
    throw Error("abel_nonneg: conclusion violated despite valid hypotheses");
  }
  return true;
}

BigCoeff evaluate(const DescentRow& row, long t) {
  BigCoeff acc = 0;
  for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

BigCoeff evaluate_derivative(const DescentRow& row, long t) {
  // d/dt sum c_k t^k = sum k c_k t^(k-1), evaluated by Horner.
  BigCoeff acc = 0;
  for (long k = row.n - 1; k >= 1; --k) {
    acc *= t;
    acc += k * row.at(k);
  }
  return acc;
}

BigCoeff coefficient_sum(const DescentRow& row) {
  BigCoeff sum = 0;
  for (const BigCoeff& c : row.coeffs) sum += c;
  return sum;
}

namespace {

// Adds sign * g * t^k (1+t)^e into work, running Pascal's rule in place.
void add_shifted_binomial(std::vector<BigCoeff>& work, const BigCoeff& g,
                          long k, long e, int sign) {
  BigCoeff binom = 1;
  for (long j = 0; j <= e; ++j) {
    if (sign > 0) {
      work[static_cast<size_t>(k + j)] += g * binom;
    } else {
      work[static_cast<size_t>(k + j)] -= g * binom;
    }
    binom *= (e - j);
    binom /= (j + 1);  // exact: C(e,j)*(e-j) is a multiple of j+1
  }
}

}  // namespace

GammaRow gamma_expand(const DescentRow& row) {
  if (!is_symmetric(row)) {
    throw NonSymmetricInput("gamma_expand: row " + std::string(family_name(row.family)) +
                            "_" + std::to_string(row.n) + " is not symmetric");
  }
  const bool fpf = row.family == Family::FixedPointFree;
  if (fpf && row.n % 2 != 0) {
    throw OddIndex("gamma_expand: no gamma basis for odd fixed-point-free rows");
  }
  GammaRow g{fpf ? GammaFamily::B : GammaFamily::A, row.n, {}};
  std::vector<BigCoeff> work = row.coeffs;
  for (long k = g.k_min(); k <= g.k_max(); ++k) {
    BigCoeff gamma = work[static_cast<size_t>(k)];
    if (gamma != 0) {
      const long e = fpf ? row.n - 2 * k : row.n - 1 - 2 * k;
      add_shifted_binomial(work, gamma, k, e, -1);
    }
    g.gammas.push_back(std::move(gamma));
  }
  for (const BigCoeff& c : work) {
    if (c != 0) {
      throw Error("gamma_expand: peeling left a nonzero remainder");
    }
  }
  return g;
}

DescentRow gamma_reconstruct(const GammaRow& g) {
  validate(g);
  const bool fpf = g.family == GammaFamily::B;
  std::vector<BigCoeff> coeffs(static_cast<size_t>(g.n));
  for (long k = g.k_min(); k <= g.k_max(); ++k) {
    const BigCoeff& gamma = g.at(k);
    if (gamma == 0) continue;
    const long e = fpf ? g.n - 2 * k : g.n - 1 - 2 * k;
    add_shifted_binomial(coeffs, gamma, k, e, +1);
  }
  return DescentRow{fpf ? Family::FixedPointFree : Family::Involution, g.n,
                    std::move(coeffs)};
}

}  // namespace inveul
