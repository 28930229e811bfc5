#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inveul/oracle.hpp"
#include "inveul/recurrences.hpp"
#include "inveul/report.hpp"

namespace inveul {

enum class ScanProperty {
  UnimodalI,     // proved: any witness is an implementation bug
  UnimodalJ,     // proved (checked on indices 1..n-1)
  LogConcaveI,   // open
  GammaNonnegA,  // open, conjectured for all n
  GammaNonnegB,  // open, conjectured for n >= 18 (permutation size)
  BoundaryA,     // center gamma coefficients of family A
  BoundaryB,     // center gamma coefficients of family B
};

const char* scan_property_name(ScanProperty p);  // "unimodal-i", "gamma-b", ...
std::optional<ScanProperty> parse_scan_property(std::string_view name);

struct Witness {
  int n = 0;
  long k = 0;
  BigCoeff value;
  // True when the witness lies below the property's conjectured threshold
  // (known small-n negatives of family B) and is therefore expected.
  bool expected_pre_threshold = false;
};

struct ScanResult {
  ScanProperty property = ScanProperty::UnimodalI;
  int n_lo = 0;
  int n_hi = 0;
  bool all_hold = true;
  std::vector<Witness> witnesses;  // nonempty iff !all_hold; exact values
};

struct ScanOptions {
  // Overrides the conjectured threshold below which witnesses are classified
  // as expected. Defaults per property: 18 for the family-B properties
  // (permutation size), none otherwise.
  std::optional<int> threshold;
};

// Exhaustively checks `property` for every valid index in [n_lo, n_hi]
// (even indices only for the J/B-based properties), reporting exact
// witnesses for every violation.
ScanResult scan(Triangles& triangles, ScanProperty property, int n_lo, int n_hi,
                const ScanOptions& opts = {});

// Checks only the center gamma coefficient of each row in range — the single
// value the nonnegativity conjectures reduce to. For family A the two
// alternating-sum identities tying the center coefficient to the signed
// (derivative) evaluation of the involution row at -1 are also verified
// exactly; a failure there is a library bug and throws.
ScanResult boundary_check(Triangles& triangles, GammaFamily family, int n_lo,
                          int n_hi, const ScanOptions& opts = {});

// Index-by-index comparison of two ways of producing the same row; the
// building block of cross_verify, exposed for fault-injection tests.
VerificationReport compare_row_sources(const std::string& methods,
                                       const std::vector<int>& indices,
                                       const std::function<DescentRow(int)>& lhs,
                                       const std::function<DescentRow(int)>& rhs);

struct CrossVerifyOptions {
  OracleOptions oracle;
};

// The build's primary self-test: recurrence rows must equal the closed-form
// rows for every index up to n_max_recurrence, and both must equal the
// brute-force histogram up to n_max_oracle. A mismatch is reported (with both
// full rows), not thrown.
VerificationReport cross_verify(Triangles& triangles, int n_max_recurrence,
                                int n_max_oracle,
                                const CrossVerifyOptions& opts = {});

}  // namespace inveul
