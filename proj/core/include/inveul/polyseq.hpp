#pragma once

#include <span>
#include <vector>

#include "inveul/bigcoeff.hpp"

namespace inveul {

enum class Family { Involution, FixedPointFree };

const char* family_name(Family f);  // "I" / "J"

// One row of a descent-number triangle: coeffs[k] counts the members of the
// family on {1..n} with exactly k descents, i.e. the coefficient of t^k in the
// row's descent polynomial.
//
// Rows are dense. Structural zeros (index 0 for the fixed-point-free family,
// entire rows at odd n) are stored explicitly so that index k always means
// "coefficient of t^k"; reads outside 0..n-1 yield zero.
struct DescentRow {
  Family family = Family::Involution;
  int n = 0;                     // size of the permuted set
  std::vector<BigCoeff> coeffs;  // indexed by k = 0..n-1

  const BigCoeff& at(long k) const;  // bounds-checked, zero outside the row
};

// Throws Error on a structural-invariant violation: wrong length, a negative
// entry, a wrong leading coefficient (1 for involutions, 0 for the
// fixed-point-free family), or a nonzero entry in an odd fixed-point-free row.
void validate(const DescentRow& row);

DescentRow make_descent_row(Family f, int n, std::vector<BigCoeff> coeffs);

// The all-zero row of the fixed-point-free family (the only valid content at
// odd n, where the family is empty).
DescentRow zero_fixed_point_free_row(int n);

enum class GammaFamily { A, B };

const char* gamma_family_name(GammaFamily f);  // "a" / "b"

// Expansion coefficients of a symmetric descent polynomial in the basis
// t^k (1+t)^(d-2k):
//
//   family A (involutions, degree n-1):        k = 0 .. (n-1)/2
//   family B (fixed-point-free, n even):       k = 1 .. n/2
//
// Entries are exact integers and may be negative (family B is at small n).
struct GammaRow {
  GammaFamily family = GammaFamily::A;
  int n = 0;
  std::vector<BigCoeff> gammas;  // entry i holds the coefficient at k_min()+i

  long k_min() const { return family == GammaFamily::B ? 1 : 0; }
  long k_max() const;
  const BigCoeff& at(long k) const;  // zero outside k_min()..k_max()
};

void validate(const GammaRow& row);
GammaRow make_gamma_row(GammaFamily f, int n, std::vector<BigCoeff> gammas);

// Structural predicates -------------------------------------------------------

// Palindromic coefficients: involution rows about (n-1)/2; fixed-point-free
// rows about n/2 on the support 1..n-1, with the conceptual coefficient at
// index n equal to zero.
bool is_symmetric(const DescentRow& row);

// Weakly increasing up to some peak, then weakly decreasing, over the family's
// index range (0..n-1 for involutions, 1..n-1 for fixed-point-free rows whose
// indices 0 and n are structurally zero).
bool is_unimodal(const DescentRow& row);

// seq[i]^2 >= seq[i-1]*seq[i+1] for every interior i.
bool is_log_concave(std::span<const BigCoeff> seq);

// Abel summation --------------------------------------------------------------

// The exact identity
//   sum_i a_i x_i = sum_k (x_k - x_{k+1}) (a_0 + ... + a_k),   x_{n+1} := 0,
// which holds for arbitrary integer lists of equal length.
bool abel_identity_holds(std::span<const BigCoeff> x, std::span<const BigCoeff> a);

// True iff x is weakly decreasing with x.back() >= 0 and every prefix sum of a
// is nonnegative. When the hypotheses hold the nonnegativity of sum a_i x_i
// and the identity above are checked exactly; a violation there would be a
// library bug and throws. A failed hypothesis returns false, it is not an
// error.
bool abel_nonneg(std::span<const BigCoeff> x, std::span<const BigCoeff> a);

// Evaluation --------------------------------------------------------------------

BigCoeff evaluate(const DescentRow& row, long t);
BigCoeff evaluate_derivative(const DescentRow& row, long t);
BigCoeff coefficient_sum(const DescentRow& row);  // = evaluate(row, 1)

// Gamma expansion ---------------------------------------------------------------

// Expands a symmetric row in the gamma basis by iterative peeling: read the
// lowest undetermined coefficient, subtract gamma_k * t^k (1+t)^(d-2k), and
// repeat; the remainder must vanish exactly. Throws NonSymmetricInput when the
// row is not symmetric and OddIndex for odd fixed-point-free rows (the basis
// exists only at even n).
GammaRow gamma_expand(const DescentRow& row);

// Exact inverse of gamma_expand. Accepts any well-formed GammaRow; the result
// satisfies the DescentRow structural invariants only when the input is the
// expansion of an actual descent row.
DescentRow gamma_reconstruct(const GammaRow& g);

}  // namespace inveul
