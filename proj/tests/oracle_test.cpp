#include "inveul/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

#include "inveul/closed_forms.hpp"
#include "inveul/errors.hpp"
#include "inveul/golden.hpp"
#include "inveul/recurrences.hpp"

namespace inveul {
namespace {

std::vector<BigCoeff> big(std::initializer_list<long> values) {
  return std::vector<BigCoeff>(values.begin(), values.end());
}

InvolutionWord word(std::initializer_list<int> mapping) {
  return InvolutionWord{std::vector<int>(mapping)};
}

TEST(InvolutionWordTest, Predicates) {
  EXPECT_TRUE(word({1, 2, 3}).is_involution());
  EXPECT_TRUE(word({2, 1, 4, 3}).is_fixed_point_free());
  EXPECT_FALSE(word({2, 3, 1}).is_involution());  // a 3-cycle
  EXPECT_FALSE(word({1, 2}).is_fixed_point_free());
  EXPECT_FALSE(word({3, 2, 1, 4, 7}).is_involution());  // image out of range
}

TEST(DescentCountTest, Examples) {
  EXPECT_EQ(descent_count(word({1, 2, 3, 4, 5})), 0);
  EXPECT_EQ(descent_count(word({2, 1})), 1);
  EXPECT_EQ(descent_count(word({2, 1, 4, 3})), 2);
  EXPECT_EQ(descent_count(word({})), 0);
}

TEST(EnumerateTest, CountsAndUniqueness) {
  std::set<std::vector<int>> seen;
  enumerate(4, Family::Involution, [&](const InvolutionWord& w) {
    EXPECT_TRUE(w.is_involution());
    EXPECT_TRUE(seen.insert(w.mapping).second) << "duplicate word";
  });
  EXPECT_EQ(seen.size(), 10u);

  seen.clear();
  enumerate(6, Family::FixedPointFree, [&](const InvolutionWord& w) {
    EXPECT_TRUE(w.is_fixed_point_free());
    EXPECT_TRUE(seen.insert(w.mapping).second);
  });
  EXPECT_EQ(seen.size(), 15u);  // 5!!

  int count = 0;
  enumerate(3, Family::FixedPointFree, [&](const InvolutionWord&) { ++count; });
  EXPECT_EQ(count, 0);

  count = 0;
  enumerate(0, Family::Involution, [&](const InvolutionWord& w) {
    EXPECT_EQ(w.size(), 0);
    ++count;
  });
  EXPECT_EQ(count, 1);
}

TEST(EnumerateTest, CountsMatchTelephoneAndDoubleFactorial) {
  for (int n = 1; n <= 9; ++n) {
    long count = 0;
    enumerate(n, Family::Involution, [&](const InvolutionWord&) { ++count; });
    EXPECT_EQ(BigCoeff(count), telephone_number(n)) << n;
  }
  for (int n = 2; n <= 10; n += 2) {
    long count = 0;
    enumerate(n, Family::FixedPointFree, [&](const InvolutionWord&) { ++count; });
    EXPECT_EQ(BigCoeff(count), double_factorial(n - 1)) << n;
  }
}

TEST(BruteForceRowTest, MatchesGoldenRows) {
  EXPECT_EQ(brute_force_row(6, Family::Involution).coeffs,
            big({1, 9, 28, 28, 9, 1}));
  EXPECT_EQ(brute_force_row(6, Family::FixedPointFree).coeffs,
            big({0, 1, 3, 7, 3, 1}));
  EXPECT_EQ(brute_force_row(8, Family::FixedPointFree).coeffs,
            big({0, 1, 6, 27, 37, 27, 6, 1}));
  EXPECT_EQ(brute_force_row(3, Family::FixedPointFree).coeffs, big({0, 0, 0}));
}

TEST(BruteForceRowTest, FeasibilityCeilingIsEnforcedAndOverridable) {
  OracleOptions tight;
  tight.involution_limit = 4;
  tight.fixed_point_free_limit = 4;
  EXPECT_THROW(brute_force_row(5, Family::Involution, tight), FeasibilityExceeded);
  EXPECT_THROW(brute_force_row(6, Family::FixedPointFree, tight), FeasibilityExceeded);
  EXPECT_NO_THROW(brute_force_row(4, Family::Involution, tight));

  OracleOptions raised;
  raised.involution_limit = 15;
  EXPECT_NO_THROW(brute_force_row(5, Family::Involution, raised));
  EXPECT_THROW(brute_force_row(15, Family::Involution), FeasibilityExceeded);
}

TEST(BruteForceRowTest, ParallelAndSequentialHistogramsAgree) {
  for (int threads : {2, 3, 8}) {
    OracleOptions sequential;
    sequential.threads = 1;
    OracleOptions parallel;
    parallel.threads = static_cast<unsigned>(threads);
    EXPECT_EQ(brute_force_row(10, Family::Involution, sequential).coeffs,
              brute_force_row(10, Family::Involution, parallel).coeffs);
    EXPECT_EQ(brute_force_row(12, Family::FixedPointFree, sequential).coeffs,
              brute_force_row(12, Family::FixedPointFree, parallel).coeffs);
  }
}

TEST(BruteForceRowTest, AgreesWithRecurrences) {
  Triangles t;
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(brute_force_row(n, Family::Involution).coeffs, t.i_row(n).coeffs) << n;
  }
  for (int n = 2; n <= 12; n += 2) {
    EXPECT_EQ(brute_force_row(n, Family::FixedPointFree).coeffs, t.j_row(n).coeffs)
        << n;
  }
}

}  // namespace
}  // namespace inveul
