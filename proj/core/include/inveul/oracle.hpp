#pragma once

#include <functional>
#include <vector>

#include "inveul/polyseq.hpp"

namespace inveul {

// An involution in one-line notation: mapping[i] is the image of i+1.
struct InvolutionWord {
  std::vector<int> mapping;

  int size() const { return static_cast<int>(mapping.size()); }
  bool is_involution() const;       // applying the mapping twice is the identity
  bool is_fixed_point_free() const; // additionally no i with mapping[i-1] == i
};

// Number of positions i (1 <= i < n) with mapping[i-1] > mapping[i].
int descent_count(const InvolutionWord& w);

// Visits every involution (Family::Involution) or fixed-point-free involution
// (Family::FixedPointFree) of {1..n} exactly once, in a deterministic order.
// The visited word is owned by the enumerator and reused between calls; copy
// it to keep it. Odd n under FixedPointFree visits nothing.
void enumerate(int n, Family family,
               const std::function<void(const InvolutionWord&)>& visit);

struct OracleOptions {
  // Feasibility ceilings. Enumeration work follows the telephone numbers
  // resp. the odd double factorials, so raising these is a deliberate act.
  int involution_limit = 14;
  int fixed_point_free_limit = 16;
  unsigned threads = 0;  // 0 = one worker per hardware thread
};

// Ground-truth descent histogram by direct enumeration. The enumeration tree
// is split near the root and partitioned over workers, each tallying a
// private histogram; the merged row is independent of scheduling. Throws
// FeasibilityExceeded above the configured ceiling.
DescentRow brute_force_row(int n, Family family, const OracleOptions& opts = {});

}  // namespace inveul
