#pragma once

#include <string>

namespace inveul {

// Outcome of an exact cross-check between independent computations of the
// same quantity.
struct VerificationReport {
  std::string methods;         // what was compared against what
  long n_lo = 0;               // inclusive index range covered
  long n_hi = 0;
  bool ok = true;
  std::string first_mismatch;  // empty iff ok; exact values at the first failure
};

}  // namespace inveul
