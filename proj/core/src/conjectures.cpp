#include "inveul/conjectures.hpp"

#include <utility>

#include "inveul/closed_forms.hpp"
#include "inveul/errors.hpp"

namespace inveul {

const char* scan_property_name(ScanProperty p) {
  switch (p) {
    case ScanProperty::UnimodalI: return "unimodal-i";
    case ScanProperty::UnimodalJ: return "unimodal-j";
    case ScanProperty::LogConcaveI: return "log-concave-i";
    case ScanProperty::GammaNonnegA: return "gamma-a";
    case ScanProperty::GammaNonnegB: return "gamma-b";
    case ScanProperty::BoundaryA: return "boundary-a";
    case ScanProperty::BoundaryB: return "boundary-b";
  }
  return "?";
}

std::optional<ScanProperty> parse_scan_property(std::string_view name) {
  for (ScanProperty p : {ScanProperty::UnimodalI, ScanProperty::UnimodalJ,
                         ScanProperty::LogConcaveI, ScanProperty::GammaNonnegA,
                         ScanProperty::GammaNonnegB, ScanProperty::BoundaryA,
                         ScanProperty::BoundaryB}) {
    if (name == scan_property_name(p)) return p;
  }
  return std::nullopt;
}

namespace {

bool even_only(ScanProperty p) {
  return p == ScanProperty::UnimodalJ || p == ScanProperty::GammaNonnegB ||
         p == ScanProperty::BoundaryB;
}

std::optional<int> default_threshold(ScanProperty p) {
  if (p == ScanProperty::GammaNonnegB || p == ScanProperty::BoundaryB) return 18;
  return std::nullopt;
}

// First index where the sequence rises again after having fallen, i.e. the
// spot that breaks unimodality; the row is unimodal iff there is none.
std::optional<long> unimodality_break(const DescentRow& row) {
  const long lo = row.family == Family::FixedPointFree ? 1 : 0;
  const long hi = row.n - 1;
  long i = lo;
  while (i < hi && row.at(i) <= row.at(i + 1)) ++i;
  while (i < hi && row.at(i) >= row.at(i + 1)) ++i;
  if (i >= hi) return std::nullopt;
  return i + 1;
}

}  // namespace

ScanResult scan(Triangles& triangles, ScanProperty property, int n_lo, int n_hi,
                const ScanOptions& opts) {
  if (n_lo > n_hi) throw IndexOutOfRange("scan: empty range");
  if (property == ScanProperty::BoundaryA) {
    return boundary_check(triangles, GammaFamily::A, n_lo, n_hi, opts);
  }
  if (property == ScanProperty::BoundaryB) {
    return boundary_check(triangles, GammaFamily::B, n_lo, n_hi, opts);
  }

  ScanResult result{property, n_lo, n_hi, true, {}};
  const std::optional<int> threshold =
      opts.threshold ? opts.threshold : default_threshold(property);
  int n = n_lo;
  if (even_only(property)) {
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
  } else if (n < 1) {
    n = 1;
  }
  const int step = even_only(property) ? 2 : 1;

  for (; n <= n_hi; n += step) {
    switch (property) {
      case ScanProperty::UnimodalI: {
        const DescentRow& row = triangles.i_row(n);
        if (auto k = unimodality_break(row)) {
          result.witnesses.push_back({n, *k, row.at(*k), false});
        }
        break;
      }
      case ScanProperty::UnimodalJ: {
        const DescentRow& row = triangles.j_row(n);
        if (auto k = unimodality_break(row)) {
          result.witnesses.push_back({n, *k, row.at(*k), false});
        }
        break;
      }
      case ScanProperty::LogConcaveI: {
        const DescentRow& row = triangles.i_row(n);
        for (long k = 1; k + 1 < row.n; ++k) {
          BigCoeff defect = row.at(k) * row.at(k) - row.at(k - 1) * row.at(k + 1);
          if (defect < 0) {
            result.witnesses.push_back({n, k, std::move(defect), false});
          }
        }
        break;
      }
      case ScanProperty::GammaNonnegA: {
        const GammaRow& g = triangles.a_row(n);
        for (long k = g.k_min(); k <= g.k_max(); ++k) {
          if (g.at(k) < 0) result.witnesses.push_back({n, k, g.at(k), false});
        }
        break;
      }
      case ScanProperty::GammaNonnegB: {
        const GammaRow& g = triangles.b_row(n);
        for (long k = g.k_min(); k <= g.k_max(); ++k) {
          if (g.at(k) < 0) {
            result.witnesses.push_back({n, k, g.at(k), threshold && n < *threshold});
          }
        }
        break;
      }
      default:
        break;
    }
  }
  result.all_hold = result.witnesses.empty();
  return result;
}

ScanResult boundary_check(Triangles& triangles, GammaFamily family, int n_lo,
                          int n_hi, const ScanOptions& opts) {
  if (n_lo > n_hi) throw IndexOutOfRange("boundary_check: empty range");
  const ScanProperty property =
      family == GammaFamily::A ? ScanProperty::BoundaryA : ScanProperty::BoundaryB;
  ScanResult result{property, n_lo, n_hi, true, {}};
  const std::optional<int> threshold =
      opts.threshold ? opts.threshold : default_threshold(property);

  if (family == GammaFamily::A) {
    for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
      const GammaRow& g = triangles.a_row(n);
      const long q = g.k_max();  // center index: (n-1)/2
      const BigCoeff& boundary = g.at(q);
      const DescentRow& row = triangles.i_row(n);
      // Signed-evaluation form and explicit alternating sum; both must equal
      // the recurrence value exactly.
      BigCoeff via_eval;
      BigCoeff via_sum = 0;
      if (n % 2 == 1) {
        via_eval = evaluate(row, -1);
        for (long k = 0; k < n; ++k) {
          BigCoeff term = row.at(k);
          if ((q - k) % 2 != 0) via_sum -= term; else via_sum += term;
        }
      } else {
        via_eval = evaluate_derivative(row, -1);
        for (long k = 1; k < n; ++k) {
          BigCoeff term = k * row.at(k);
          if ((q + 1 - k) % 2 != 0) via_sum -= term; else via_sum += term;
        }
      }
      if (q % 2 != 0) via_eval = -via_eval;
      if (via_eval != boundary || via_sum != boundary) {
        throw Error("boundary_check: alternating-sum identity violated at n=" +
                    std::to_string(n) + ": recurrence " + to_decimal(boundary) +
                    ", evaluation " + to_decimal(via_eval) + ", sum " +
                    to_decimal(via_sum));
      }
      if (boundary < 0) result.witnesses.push_back({n, q, boundary, false});
    }
  } else {
    for (int n = std::max(2, n_lo + (n_lo % 2)); n <= n_hi; n += 2) {
      const GammaRow& g = triangles.b_row(n);
      const long q = g.k_max();  // center index: n/2
      const BigCoeff& boundary = g.at(q);
      if (boundary < 0) {
        result.witnesses.push_back({n, q, boundary, threshold && n < *threshold});
      }
    }
  }
  result.all_hold = result.witnesses.empty();
  return result;
}

namespace {

std::string row_to_string(const DescentRow& row) {
  std::string s = "(";
  for (size_t i = 0; i < row.coeffs.size(); ++i) {
    if (i) s += ",";
    s += to_decimal(row.coeffs[i]);
  }
  return s + ")";
}

}  // namespace

VerificationReport compare_row_sources(const std::string& methods,
                                       const std::vector<int>& indices,
                                       const std::function<DescentRow(int)>& lhs,
                                       const std::function<DescentRow(int)>& rhs) {
  VerificationReport report;
  report.methods = methods;
  if (!indices.empty()) {
    report.n_lo = indices.front();
    report.n_hi = indices.back();
  }
  for (int n : indices) {
    const DescentRow left = lhs(n);
    const DescentRow right = rhs(n);
    for (long k = 0; k < std::max(left.n, right.n); ++k) {
      if (left.at(k) != right.at(k)) {
        report.ok = false;
        report.first_mismatch =
            methods + " disagree at n=" + std::to_string(n) + " k=" +
            std::to_string(k) + ": " + to_decimal(left.at(k)) + " vs " +
            to_decimal(right.at(k)) + "; rows " + row_to_string(left) + " vs " +
            row_to_string(right);
        return report;
      }
    }
  }
  return report;
}

VerificationReport cross_verify(Triangles& triangles, int n_max_recurrence,
                                int n_max_oracle, const CrossVerifyOptions& opts) {
  if (n_max_recurrence < 1) {
    throw IndexOutOfRange("cross_verify: n_max_recurrence must be >= 1");
  }
  if (n_max_oracle > n_max_recurrence) n_max_oracle = n_max_recurrence;

  std::vector<int> all, evens, all_oracle, evens_oracle;
  for (int n = 1; n <= n_max_recurrence; ++n) {
    all.push_back(n);
    if (n % 2 == 0 && n >= 2) evens.push_back(n);
  }
  for (int n = 1; n <= n_max_oracle; ++n) {
    all_oracle.push_back(n);
    if (n % 2 == 0 && n >= 2) evens_oracle.push_back(n);
  }

  auto i_rec = [&](int n) { return triangles.i_row(n); };
  auto j_rec = [&](int n) { return triangles.j_row(n); };
  auto i_cf = [](int n) { return i_closed_row(n); };
  auto j_cf = [](int n) { return j_closed_row(n); };
  auto i_bf = [&](int n) { return brute_force_row(n, Family::Involution, opts.oracle); };
  auto j_bf = [&](int n) { return brute_force_row(n, Family::FixedPointFree, opts.oracle); };

  VerificationReport combined;
  combined.methods = "recurrence vs closed form vs enumeration";
  combined.n_lo = 1;
  combined.n_hi = n_max_recurrence;
  for (const VerificationReport& r : {
           compare_row_sources("involution recurrence vs closed form", all, i_rec, i_cf),
           compare_row_sources("fixed-point-free recurrence vs closed form", evens, j_rec, j_cf),
           compare_row_sources("involution recurrence vs enumeration", all_oracle, i_rec, i_bf),
           compare_row_sources("fixed-point-free recurrence vs enumeration", evens_oracle, j_rec, j_bf),
       }) {
    if (!r.ok) {
      combined.ok = false;
      combined.first_mismatch = r.first_mismatch;
      return combined;
    }
  }
  return combined;
}

}  // namespace inveul
