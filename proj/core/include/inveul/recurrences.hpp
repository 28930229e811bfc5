#pragma once

#include <map>
#include <mutex>

#include "inveul/polyseq.hpp"

namespace inveul {

// Single steps of the four linear recurrences. Every step divides the
// accumulated right-hand side by the row index (n, resp. 2n) with a checked
// exact division: a nonzero remainder throws DivisibilityViolation. The
// algebra behind the recurrences guarantees exactness, so the check acts as a
// built-in self-test of both the implementation and its inputs.
//
// Out-of-range coefficient reads of the predecessor rows yield zero.

// I_n from I_{n-1} and I_{n-2}; n >= 3.
DescentRow i_row_step(const DescentRow& prev1, const DescentRow& prev2, int n);

// J_n from J_{n-2}; even n >= 4.
DescentRow j_row_step(const DescentRow& prev, int n);

// a_n from a_{n-1} and a_{n-2}; n >= 3.
GammaRow a_row_step(const GammaRow& prev1, const GammaRow& prev2, int n);

// b_n from b_{n-2}; even n >= 4.
GammaRow b_row_step(const GammaRow& prev, int n);

// Memoized bottom-up computation of the four coefficient triangles.
//
// Thread-safety: each family is guarded by its own lock, so distinct triangles
// can be built concurrently while row computation within one family stays
// sequential (it is inherently ordered in n). Returned references stay valid
// and immutable for the lifetime of the cache.
class Triangles {
 public:
  const DescentRow& i_row(int n);  // n >= 1
  const DescentRow& j_row(int n);  // even n >= 2; OddIndex for odd n
  const GammaRow& a_row(int n);    // n >= 1
  const GammaRow& b_row(int n);    // even n >= 2; OddIndex for odd n

  // Highest computed index per family; 0 when nothing was computed yet.
  int max_i() const;
  int max_j() const;
  int max_a() const;
  int max_b() const;

 private:
  mutable std::mutex i_mu_, j_mu_, a_mu_, b_mu_;
  std::map<int, DescentRow> i_rows_, j_rows_;
  std::map<int, GammaRow> a_rows_, b_rows_;
};

}  // namespace inveul
