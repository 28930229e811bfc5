#pragma once

#include <vector>

#include "inveul/bigcoeff.hpp"
#include "inveul/polyseq.hpp"
#include "inveul/report.hpp"

namespace inveul {

// Generalized binomial coefficient via the falling-factorial product
//   C(m, j) = m (m-1) ... (m-j+1) / j!   for j >= 0,
// which stays meaningful for negative m (C(-1, 0) = 1, C(-1, 2) = 1, ...);
// C(m, j) = 0 for j < 0.
BigCoeff binomial(long upper, long lower);

// Number of involutions of {1..n}: T(n) = T(n-1) + (n-1) T(n-2).
BigCoeff telephone_number(long n);

// m!! with the empty-product convention for m <= 0. (2n-1)!! counts the
// fixed-point-free involutions of {1..2n}.
BigCoeff double_factorial(long m);

// Parameters of the auxiliary binomial sum
//   s(n) = sum_{k=0}^{n/2} C(x+k-1, k) C(y+n-2k, n-2k),
// whose generating function is (1-u^2)^(-x) (1-u)^(-y-1). The descent
// distributions instantiate it at x = r(r+1)/2, y = r.
struct SnParams {
  long x = 0;
  long y = 0;
};

// s(0..n_max), computed term by term from the double sum (no recurrence).
std::vector<BigCoeff> s_sequence(const SnParams& p, long n_max);

// Checks the three-term recurrence
//   (2x + y + n + 1) s(n) + (y + 1) s(n+1) - (n + 2) s(n+2) = 0
// exactly for every n <= n_max - 2 against the direct summation.
VerificationReport verify_s_recurrence(const SnParams& p, long n_max);

// Coefficient of t^k in the descent polynomial of the fixed-point-free
// involutions of {1..2n}, as an alternating binomial sum extracted from the
// generating function. `half_n` is n, i.e. half the permutation size;
// 0 <= k <= 2 half_n. For fixed k the value is a polynomial in half_n of
// degree k(k+1)/2 - 1 with leading coefficient 1/(k(k+1)/2 - 1)!.
BigCoeff j_closed(long half_n, long k);

// Coefficient of t^k in the descent polynomial of the involutions of {1..n},
// via the same extraction route; 0 <= k <= n-1.
BigCoeff i_closed(long n, long k);

// Whole rows assembled from the closed forms (n is the permutation size).
DescentRow i_closed_row(int n);
DescentRow j_closed_row(int n);  // even n >= 2; OddIndex otherwise

// Alternating-sum expressions for the gamma coefficients, computed directly
// from a descent row — independent of both the gamma recurrences and the
// peeling transform. Each term's rational weight combines to an integer; the
// division is checked and a remainder throws DivisibilityViolation.
BigCoeff a_explicit(const DescentRow& involution_row, long k);
BigCoeff b_explicit(const DescentRow& fixed_point_free_row, long k);

GammaRow a_explicit_row(const DescentRow& involution_row);
GammaRow b_explicit_row(const DescentRow& fixed_point_free_row);

}  // namespace inveul
