#include "inveul/recurrences.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "inveul/closed_forms.hpp"
#include "inveul/errors.hpp"
#include "inveul/golden.hpp"

namespace inveul {
namespace {

std::vector<BigCoeff> big(std::initializer_list<long> values) {
  return std::vector<BigCoeff>(values.begin(), values.end());
}

TEST(IRowTest, SmallRows) {
  Triangles t;
  EXPECT_EQ(t.i_row(1).coeffs, big({1}));
  EXPECT_EQ(t.i_row(2).coeffs, big({1, 1}));
  EXPECT_EQ(t.i_row(4).coeffs, big({1, 4, 4, 1}));
  EXPECT_EQ(t.i_row(6).coeffs, big({1, 9, 28, 28, 9, 1}));
  EXPECT_EQ(t.i_row(7).coeffs, big({1, 12, 57, 92, 57, 12, 1}));
  EXPECT_EQ(coefficient_sum(t.i_row(7)), 232);
  EXPECT_THROW(t.i_row(0), IndexOutOfRange);
}

TEST(JRowTest, SmallRows) {
  Triangles t;
  EXPECT_EQ(t.j_row(2).coeffs, big({0, 1}));
  EXPECT_EQ(t.j_row(4).coeffs, big({0, 1, 1, 1}));
  EXPECT_EQ(t.j_row(6).coeffs, big({0, 1, 3, 7, 3, 1}));
  EXPECT_EQ(t.j_row(8).coeffs, big({0, 1, 6, 27, 37, 27, 6, 1}));
  EXPECT_EQ(coefficient_sum(t.j_row(8)), 105);  // 7!!
  EXPECT_THROW(t.j_row(5), OddIndex);
  EXPECT_THROW(t.j_row(0), IndexOutOfRange);
}

TEST(JRowTest, SingleStepFromHandBuiltRow) {
  // One recurrence step applied to an independently constructed row.
  const DescentRow j6 =
      make_descent_row(Family::FixedPointFree, 6, big({0, 1, 3, 7, 3, 1}));
  const DescentRow j8 = j_row_step(j6, 8);
  EXPECT_EQ(j8.coeffs, big({0, 1, 6, 27, 37, 27, 6, 1}));
  EXPECT_THROW(j_row_step(j6, 10), Error);  // wrong predecessor index
}

TEST(ARowTest, MatchesReference) {
  Triangles t;
  EXPECT_EQ(t.a_row(1).gammas, big({1}));
  EXPECT_EQ(t.a_row(2).gammas, big({1}));
  EXPECT_EQ(t.a_row(5).gammas, big({1, 2, 2}));
  EXPECT_EQ(t.a_row(7).gammas, big({1, 6, 18, 0}));
  EXPECT_EQ(t.a_row(13).gammas, big({1, 30, 579, 3626, 8360, 4800, 440}));
}

TEST(BRowTest, MatchesReference) {
  Triangles t;
  EXPECT_EQ(t.b_row(2).gammas, big({1}));
  EXPECT_EQ(t.b_row(8).gammas, big({1, 0, 12, -7}));
  EXPECT_EQ(t.b_row(10).gammas, big({1, 2, 36, -10, 25}));
  EXPECT_EQ(t.b_row(18).gammas,
            big({1, 20, 728, 7902, 50165, 122571, 135545, 33188, 4417}));
  EXPECT_THROW(t.b_row(7), OddIndex);
}

TEST(TrianglesTest, MatchGoldenTables) {
  Triangles t;
  for (const DescentRow& row : golden::involution_rows()) {
    EXPECT_EQ(t.i_row(row.n).coeffs, row.coeffs) << "I row " << row.n;
  }
  for (const DescentRow& row : golden::fixed_point_free_rows()) {
    if (row.n % 2 != 0) continue;  // the all-zero odd rows are not cached
    EXPECT_EQ(t.j_row(row.n).coeffs, row.coeffs) << "J row " << row.n;
  }
  for (const GammaRow& row : golden::gamma_a_rows()) {
    EXPECT_EQ(t.a_row(row.n).gammas, row.gammas) << "a row " << row.n;
  }
  for (const GammaRow& row : golden::gamma_b_rows()) {
    EXPECT_EQ(t.b_row(row.n).gammas, row.gammas) << "b row " << row.n;
  }
}

TEST(TrianglesTest, RowSumsFollowTheCountingRecurrences) {
  Triangles t;
  for (int n = 3; n <= 60; ++n) {
    const BigCoeff sum = coefficient_sum(t.i_row(n));
    EXPECT_EQ(sum, coefficient_sum(t.i_row(n - 1)) +
                       (n - 1) * coefficient_sum(t.i_row(n - 2)));
    EXPECT_EQ(sum, telephone_number(n));
  }
  for (int n = 4; n <= 60; n += 2) {
    const BigCoeff sum = coefficient_sum(t.j_row(n));
    EXPECT_EQ(sum, (n - 1) * coefficient_sum(t.j_row(n - 2)));
    EXPECT_EQ(sum, double_factorial(n - 1));
  }
}

TEST(TrianglesTest, SymmetryPropagates) {
  Triangles t;
  for (int n = 1; n <= 60; ++n) EXPECT_TRUE(is_symmetric(t.i_row(n))) << n;
  for (int n = 2; n <= 60; n += 2) EXPECT_TRUE(is_symmetric(t.j_row(n))) << n;
}

TEST(TrianglesTest, GammaRowsAgreeWithPeeling) {
  Triangles t;
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(gamma_expand(t.i_row(n)).gammas, t.a_row(n).gammas) << n;
  }
  for (int n = 2; n <= 40; n += 2) {
    EXPECT_EQ(gamma_expand(t.j_row(n)).gammas, t.b_row(n).gammas) << n;
  }
}

TEST(TrianglesTest, CenterGammaIdentities) {
  Triangles t;
  for (int n = 3; n <= 41; n += 2) {
    // odd n = 2q+1: last entry of the gamma row is (-1)^q I_n(-1)
    const long q = (n - 1) / 2;
    BigCoeff expected = evaluate(t.i_row(n), -1);
    if (q % 2 != 0) expected = -expected;
    EXPECT_EQ(t.a_row(n).gammas.back(), expected) << n;
  }
  for (int n = 4; n <= 42; n += 2) {
    // even n = 2q+2: last entry is (-1)^q I_n'(-1)
    const long q = (n - 2) / 2;
    BigCoeff expected = evaluate_derivative(t.i_row(n), -1);
    if (q % 2 != 0) expected = -expected;
    EXPECT_EQ(t.a_row(n).gammas.back(), expected) << n;
  }
}

TEST(TrianglesTest, ConcurrentReadersSeeConsistentRows) {
  Triangles t;
  t.i_row(40);
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&t, &ok] {
      for (int n = 1; n <= 60; ++n) {
        if (coefficient_sum(t.i_row(n)) != telephone_number(n)) ok = false;
      }
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_TRUE(ok);
  EXPECT_EQ(t.max_i(), 60);
}

}  // namespace
}  // namespace inveul
