#include "inveul/recurrences.hpp"

#include <utility>

#include "inveul/errors.hpp"

namespace inveul {

namespace {

// Base rows, n <= 2. Everything above is produced by the recurrences, keeping
// this module independent of the closed-form route it is checked against.
DescentRow i_base_row(int n) {
  if (n == 1) return DescentRow{Family::Involution, 1, {BigCoeff(1)}};
  return DescentRow{Family::Involution, 2, {BigCoeff(1), BigCoeff(1)}};
}

DescentRow j_base_row() {
  return DescentRow{Family::FixedPointFree, 2, {BigCoeff(0), BigCoeff(1)}};
}

GammaRow a_base_row(int n) {
  return GammaRow{GammaFamily::A, n, {BigCoeff(1)}};  // a_1 = a_2 = (1)
}

GammaRow b_base_row() {
  return GammaRow{GammaFamily::B, 2, {BigCoeff(1)}};  // b at k=1
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(what);
}

}  // namespace

DescentRow i_row_step(const DescentRow& prev1, const DescentRow& prev2, int n) {
  require(n >= 3, "i_row_step: n must be >= 3");
  require(prev1.family == Family::Involution && prev1.n == n - 1,
          "i_row_step: prev1 must be the involution row n-1");
  require(prev2.family == Family::Involution && prev2.n == n - 2,
          "i_row_step: prev2 must be the involution row n-2");
  std::vector<BigCoeff> coeffs(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    BigCoeff rhs = (k + 1) * prev1.at(k)
                 + (n - k) * prev1.at(k - 1)
                 + ((k + 1) * (k + 1) + n - 2) * prev2.at(k)
                 + (2 * k * (n - k - 1) - n + 3) * prev2.at(k - 1)
                 + ((n - k) * (n - k) + n - 2) * prev2.at(k - 2);
    coeffs[static_cast<size_t>(k)] = exact_div(rhs, n, "involution recurrence");
  }
  DescentRow row{Family::Involution, n, std::move(coeffs)};
  validate(row);
  return row;
}

DescentRow j_row_step(const DescentRow& prev, int n) {
  require(n >= 4 && n % 2 == 0, "j_row_step: n must be even and >= 4");
  require(prev.family == Family::FixedPointFree && prev.n == n - 2,
          "j_row_step: prev must be the fixed-point-free row n-2");
  std::vector<BigCoeff> coeffs(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    BigCoeff rhs = (k * (k + 1) + n - 2) * prev.at(k)
                 + 2 * ((k - 1) * (n - k - 1) + 1) * prev.at(k - 1)
                 + ((n - k) * (n - k + 1) + n - 2) * prev.at(k - 2);
    coeffs[static_cast<size_t>(k)] = exact_div(rhs, n, "fixed-point-free recurrence");
  }
  DescentRow row{Family::FixedPointFree, n, std::move(coeffs)};
  validate(row);
  return row;
}

GammaRow a_row_step(const GammaRow& prev1, const GammaRow& prev2, int n) {
  require(n >= 3, "a_row_step: n must be >= 3");
  require(prev1.family == GammaFamily::A && prev1.n == n - 1,
          "a_row_step: prev1 must be the gamma-a row n-1");
  require(prev2.family == GammaFamily::A && prev2.n == n - 2,
          "a_row_step: prev2 must be the gamma-a row n-2");
  GammaRow row{GammaFamily::A, n, {}};
  for (long k = 0; 2 * k <= n - 1; ++k) {
    BigCoeff rhs = (k + 1) * prev1.at(k)
                 + (2 * n - 4 * k) * prev1.at(k - 1)
                 + (k * (k + 2) + n - 1) * prev2.at(k)
                 + ((k - 1) * (4 * n - 8 * k - 14) + 2 * n - 8) * prev2.at(k - 1)
                 + 4 * (n - 2 * k) * (n - 2 * k + 1) * prev2.at(k - 2);
    row.gammas.push_back(exact_div(rhs, n, "gamma-a recurrence"));
  }
  validate(row);
  return row;
}

GammaRow b_row_step(const GammaRow& prev, int n) {
  require(n >= 4 && n % 2 == 0, "b_row_step: n must be even and >= 4");
  require(prev.family == GammaFamily::B && prev.n == n - 2,
          "b_row_step: prev must be the gamma-b row n-2");
  GammaRow row{GammaFamily::B, n, {}};
  for (long k = 1; 2 * k <= n; ++k) {
    BigCoeff rhs = (k * (k + 1) + n - 2) * prev.at(k)
                 + (2 + 2 * (k - 1) * (2 * n - 4 * k - 3)) * prev.at(k - 1)
                 + 8 * (n / 2 - k + 1) * (n - 2 * k + 1) * prev.at(k - 2);
    row.gammas.push_back(exact_div(rhs, n, "gamma-b recurrence"));
  }
  validate(row);
  return row;
}

const DescentRow& Triangles::i_row(int n) {
  if (n < 1) throw IndexOutOfRange("i_row: n must be >= 1");
  std::scoped_lock lock(i_mu_);
  auto it = i_rows_.find(n);
  if (it != i_rows_.end()) return it->second;
  int built = i_rows_.empty() ? 0 : i_rows_.rbegin()->first;
  for (int m = built + 1; m <= n; ++m) {
    DescentRow row = m <= 2 ? i_base_row(m)
                            : i_row_step(i_rows_.at(m - 1), i_rows_.at(m - 2), m);
    i_rows_.emplace(m, std::move(row));
  }
  return i_rows_.at(n);
}

const DescentRow& Triangles::j_row(int n) {
  if (n < 2) throw IndexOutOfRange("j_row: n must be >= 2");
  if (n % 2 != 0) {
    throw OddIndex("j_row: no fixed-point-free involutions at odd n = " +
                   std::to_string(n));
  }
  std::scoped_lock lock(j_mu_);
  auto it = j_rows_.find(n);
  if (it != j_rows_.end()) return it->second;
  int built = j_rows_.empty() ? 0 : j_rows_.rbegin()->first;
  for (int m = built + 2; m <= n; m += 2) {
    DescentRow row = m == 2 ? j_base_row() : j_row_step(j_rows_.at(m - 2), m);
    j_rows_.emplace(m, std::move(row));
  }
  return j_rows_.at(n);
}

const GammaRow& Triangles::a_row(int n) {
  if (n < 1) throw IndexOutOfRange("a_row: n must be >= 1");
  std::scoped_lock lock(a_mu_);
  auto it = a_rows_.find(n);
  if (it != a_rows_.end()) return it->second;
  int built = a_rows_.empty() ? 0 : a_rows_.rbegin()->first;
  for (int m = built + 1; m <= n; ++m) {
    GammaRow row = m <= 2 ? a_base_row(m)
                          : a_row_step(a_rows_.at(m - 1), a_rows_.at(m - 2), m);
    a_rows_.emplace(m, std::move(row));
  }
  return a_rows_.at(n);
}

const GammaRow& Triangles::b_row(int n) {
  if (n < 2) throw IndexOutOfRange("b_row: n must be >= 2");
  if (n % 2 != 0) {
    throw OddIndex("b_row: gamma-b rows exist at even n only, got " +
                   std::to_string(n));
  }
  std::scoped_lock lock(b_mu_);
  auto it = b_rows_.find(n);
  if (it != b_rows_.end()) return it->second;
  int built = b_rows_.empty() ? 0 : b_rows_.rbegin()->first;
  for (int m = built + 2; m <= n; m += 2) {
    GammaRow row = m == 2 ? b_base_row() : b_row_step(b_rows_.at(m - 2), m);
    b_rows_.emplace(m, std::move(row));
  }
  return b_rows_.at(n);
}

int Triangles::max_i() const {
  std::scoped_lock lock(i_mu_);
  return i_rows_.empty() ? 0 : i_rows_.rbegin()->first;
}

int Triangles::max_j() const {
  std::scoped_lock lock(j_mu_);
  return j_rows_.empty() ? 0 : j_rows_.rbegin()->first;
}

int Triangles::max_a() const {
  std::scoped_lock lock(a_mu_);
  return a_rows_.empty() ? 0 : a_rows_.rbegin()->first;
}

int Triangles::max_b() const {
  std::scoped_lock lock(b_mu_);
  return b_rows_.empty() ? 0 : b_rows_.rbegin()->first;
}

}  // namespace inveul
