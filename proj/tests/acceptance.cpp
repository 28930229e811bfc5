// Acceptance suite: runs every acceptance criterion at its stated bound and
// tolerance (everything here is exact integer arithmetic) and prints one
// pass/fail line per criterion. Exit status 0 iff all criteria pass.
//
// Conjecture scans (criterion 7) pass when the scanner completes; any
// counterexample they find is printed as a finding, not a failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "inveul/closed_forms.hpp"
#include "inveul/conjectures.hpp"
#include "inveul/errors.hpp"
#include "inveul/golden.hpp"
#include "inveul/oracle.hpp"
#include "inveul/recurrences.hpp"

namespace {

using namespace inveul;
using Clock = std::chrono::steady_clock;

struct Check {
  std::ostringstream failures;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) failures << "\n       " << what;
  }
  template <class T, class U>
  void require_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == want)) failures << "\n       " << what;
  }
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << ms << " ms";
  return out.str();
}

// 1. Reference descent rows, n <= 6, both families, bit-exact, < 1 s.
void criterion_1(Triangles& t, Check& c) {
  const auto start = Clock::now();
  for (const DescentRow& golden_row : golden::involution_rows()) {
    c.require_eq(t.i_row(golden_row.n).coeffs, golden_row.coeffs,
                 "involution row " + std::to_string(golden_row.n));
  }
  for (const DescentRow& golden_row : golden::fixed_point_free_rows()) {
    const DescentRow computed = golden_row.n % 2 == 0
                                    ? t.j_row(golden_row.n)
                                    : zero_fixed_point_free_row(golden_row.n);
    c.require_eq(computed.coeffs, golden_row.coeffs,
                 "fixed-point-free row " + std::to_string(golden_row.n));
  }
  c.require(elapsed_ms(start) < 1000.0, "exceeded the 1 s budget");
}

// 2. Gamma-a reference values for n <= 16, identical via recurrence,
//    alternating formula and peeling; < 1 s.
void criterion_2(Triangles& t, Check& c) {
  const auto start = Clock::now();
  for (const GammaRow& golden_row : golden::gamma_a_rows()) {
    const int n = golden_row.n;
    const GammaRow& rec = t.a_row(n);
    c.require_eq(rec.gammas, golden_row.gammas,
                 "gamma-a recurrence row " + std::to_string(n));
    c.require_eq(a_explicit_row(t.i_row(n)).gammas, golden_row.gammas,
                 "gamma-a explicit row " + std::to_string(n));
    c.require_eq(gamma_expand(t.i_row(n)).gammas, golden_row.gammas,
                 "gamma-a peeled row " + std::to_string(n));
  }
  c.require_eq(t.a_row(16).at(7), BigCoeff(44376), "spot value at (16,7)");
  c.require(elapsed_ms(start) < 1000.0, "exceeded the 1 s budget");
}

// 3. Gamma-b reference values for even n <= 24, same three-way independence,
//    including every negative entry; < 1 s.
void criterion_3(Triangles& t, Check& c) {
  const auto start = Clock::now();
  for (const GammaRow& golden_row : golden::gamma_b_rows()) {
    const int n = golden_row.n;
    c.require_eq(t.b_row(n).gammas, golden_row.gammas,
                 "gamma-b recurrence row " + std::to_string(n));
    c.require_eq(b_explicit_row(t.j_row(n)).gammas, golden_row.gammas,
                 "gamma-b explicit row " + std::to_string(n));
    c.require_eq(gamma_expand(t.j_row(n)).gammas, golden_row.gammas,
                 "gamma-b peeled row " + std::to_string(n));
  }
  c.require_eq(t.b_row(4).at(2), BigCoeff(-1), "negative entry (4,2)");
  c.require_eq(t.b_row(8).at(4), BigCoeff(-7), "negative entry (8,4)");
  c.require_eq(t.b_row(12).at(6), BigCoeff(-65), "negative entry (12,6)");
  c.require_eq(t.b_row(16).at(8), BigCoeff(-583), "negative entry (16,8)");
  c.require(elapsed_ms(start) < 1000.0, "exceeded the 1 s budget");
}

// 4. Oracle equivalence: enumeration = recurrence = closed form, involutions
//    to n = 12 and fixed-point-free to n = 14; < 60 s single-threaded and
//    < 15 s with 8 workers.
void criterion_4(Triangles& t, Check& c) {
  OracleOptions single;
  single.threads = 1;
  const auto start1 = Clock::now();
  for (int n = 1; n <= 12; ++n) {
    const DescentRow brute = brute_force_row(n, Family::Involution, single);
    c.require_eq(brute.coeffs, t.i_row(n).coeffs,
                 "involution oracle vs recurrence at n=" + std::to_string(n));
    c.require_eq(brute.coeffs, i_closed_row(n).coeffs,
                 "involution oracle vs closed form at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 14; n += 2) {
    const DescentRow brute = brute_force_row(n, Family::FixedPointFree, single);
    c.require_eq(brute.coeffs, t.j_row(n).coeffs,
                 "fixed-point-free oracle vs recurrence at n=" + std::to_string(n));
    c.require_eq(brute.coeffs, j_closed_row(n).coeffs,
                 "fixed-point-free oracle vs closed form at n=" + std::to_string(n));
  }
  const double sequential_ms = elapsed_ms(start1);
  c.require(sequential_ms < 60000.0, "exceeded the 60 s single-threaded budget");
  c.require_eq(coefficient_sum(t.i_row(12)), telephone_number(12),
               "involution word count at n=12");
  c.require_eq(telephone_number(12), BigCoeff(140152), "140152 words at n=12");
  c.require_eq(double_factorial(13), BigCoeff(135135), "135135 words at n=14");

  OracleOptions eight;
  eight.threads = 8;
  const auto start8 = Clock::now();
  c.require_eq(brute_force_row(12, Family::Involution, eight).coeffs,
               t.i_row(12).coeffs, "8-worker involution histogram");
  c.require_eq(brute_force_row(14, Family::FixedPointFree, eight).coeffs,
               t.j_row(14).coeffs, "8-worker fixed-point-free histogram");
  c.require(elapsed_ms(start8) < 15000.0, "exceeded the 15 s 8-worker budget");
  c.notes << "sequential sweep " << fmt_ms(sequential_ms);
}

// 5. Counting identities to n = 200: involution row sums are the telephone
//    numbers, fixed-point-free row sums the odd double factorials.
void criterion_5(Triangles& t, Check& c) {
  c.require_eq(telephone_number(7), BigCoeff(232), "telephone number T(7)");
  c.require_eq(telephone_number(10), BigCoeff(9496), "telephone number T(10)");
  for (int n = 1; n <= 200; ++n) {
    if (coefficient_sum(t.i_row(n)) != telephone_number(n)) {
      c.require(false, "involution row sum at n=" + std::to_string(n));
      return;
    }
  }
  for (int n = 2; n <= 200; n += 2) {
    if (coefficient_sum(t.j_row(n)) != double_factorial(n - 1)) {
      c.require(false, "fixed-point-free row sum at n=" + std::to_string(n));
      return;
    }
  }
}

// 6. Proved-theorem suite to n = 200: symmetry and unimodality of every row;
//    every recurrence step divides exactly (a violation throws and fails the
//    criterion — rebuilding in a fresh cache exercises all ~200^2 divisions
//    per triangle).
void criterion_6(Check& c) {
  Triangles fresh;
  for (int n = 1; n <= 200; ++n) {
    const DescentRow& row = fresh.i_row(n);
    if (!is_symmetric(row) || !is_unimodal(row)) {
      c.require(false, "involution row " + std::to_string(n));
      return;
    }
  }
  for (int n = 2; n <= 200; n += 2) {
    const DescentRow& row = fresh.j_row(n);
    if (!is_symmetric(row) || !is_unimodal(row)) {
      c.require(false, "fixed-point-free row " + std::to_string(n));
      return;
    }
  }
  fresh.a_row(200);
  fresh.b_row(200);
  c.require(scan(fresh, ScanProperty::UnimodalI, 1, 200).all_hold,
            "unimodality scan over the involution rows");
  c.require(scan(fresh, ScanProperty::UnimodalJ, 2, 200).all_hold,
            "unimodality scan over the fixed-point-free rows");
}

// 7. Conjecture scans (open questions; the requirement is that the scanner
//    completes and reports — witnesses are findings): gamma-a to 500, gamma-b
//    on 18..1000, log-concavity to 500, boundary identities to 500. < 10 min.
void criterion_7(Triangles& t, Check& c) {
  const auto start = Clock::now();
  auto describe = [&](const ScanResult& r) {
    std::ostringstream out;
    out << scan_property_name(r.property) << "[" << r.n_lo << ".." << r.n_hi
        << "] ";
    if (r.all_hold) {
      out << "all-hold";
    } else {
      out << r.witnesses.size() << " witness(es):";
      const size_t shown = std::min<size_t>(r.witnesses.size(), 6);
      for (size_t i = 0; i < shown; ++i) {
        const Witness& w = r.witnesses[i];
        out << " (" << w.n << "," << w.k << "," << to_decimal(w.value) << ")";
      }
      if (shown < r.witnesses.size()) out << " ...";
    }
    return out.str();
  };
  c.notes << describe(scan(t, ScanProperty::GammaNonnegA, 1, 500)) << "; "
          << describe(scan(t, ScanProperty::GammaNonnegB, 18, 1000)) << "; "
          << describe(scan(t, ScanProperty::LogConcaveI, 1, 500)) << "; "
          << describe(boundary_check(t, GammaFamily::A, 1, 500));
  c.require(elapsed_ms(start) < 600000.0, "exceeded the 10 min budget");
}

// 8. Auxiliary identities: the three-term recurrence of the binomial sum on
//    the whole parameter grid |x|,|y| <= 10 for n <= 40, and the degree-in-n
//    forward-difference property of the closed form for k <= 6.
void criterion_8(Check& c) {
  for (long x = -10; x <= 10; ++x) {
    for (long y = -10; y <= 10; ++y) {
      const VerificationReport r = verify_s_recurrence({x, y}, 40);
      if (!r.ok) {
        c.require(false, "s recurrence fails: " + r.first_mismatch);
        return;
      }
    }
  }
  for (long n = 1; n <= 30; ++n) {
    c.require_eq(j_closed(n, 0), BigCoeff(0), "degree property at k=0");
  }
  for (long k = 1; k <= 6; ++k) {
    const long d = k * (k + 1) / 2 - 1;
    const long n0 = (k + 1) / 2;
    std::vector<BigCoeff> values;
    for (long n = n0; n <= n0 + d + 6; ++n) values.push_back(j_closed(n, k));
    for (long step = 0; step < d; ++step) {
      for (size_t i = 0; i + 1 < values.size(); ++i) {
        values[i] = values[i + 1] - values[i];
      }
      values.pop_back();
    }
    for (const BigCoeff& v : values) {
      if (v != 1) {
        c.require(false, "forward differences not constant 1 at k=" +
                             std::to_string(k));
        return;
      }
    }
  }
}

}  // namespace

int main() {
  Triangles shared;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"reference descent rows (n <= 6) reproduce bit-exactly",
       [&](Check& c) { criterion_1(shared, c); }},
      {"gamma-a table (n <= 16) identical via three independent routes",
       [&](Check& c) { criterion_2(shared, c); }},
      {"gamma-b table (n <= 24) identical via three independent routes",
       [&](Check& c) { criterion_3(shared, c); }},
      {"enumeration = recurrence = closed form (involutions to 12, "
       "fixed-point-free to 14)",
       [&](Check& c) { criterion_4(shared, c); }},
      {"row sums equal telephone numbers and double factorials to n = 200",
       [&](Check& c) { criterion_5(shared, c); }},
      {"symmetry, unimodality and exact divisibility of every row to n = 200",
       [&](Check& c) { criterion_6(c); }},
      {"conjecture scans complete and report (gamma-a 500, gamma-b 1000, "
       "log-concavity 500, boundaries 500)",
       [&](Check& c) { criterion_7(shared, c); }},
      {"auxiliary sum recurrence on the parameter grid and the degree-in-n "
       "property (k <= 6)",
       [&](Check& c) { criterion_8(c); }},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = Clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures << "\n       exception: " << e.what();
    }
    const std::string failures = check.failures.str();
    const std::string notes = check.notes.str();
    std::cout << (failures.empty() ? "[PASS] " : "[FAIL] ") << "criterion "
              << (i + 1) << ": " << criteria[i].first << " ["
              << fmt_ms(elapsed_ms(start)) << "]";
    if (!notes.empty()) std::cout << "\n       " << notes;
    std::cout << failures << "\n";
    if (!failures.empty()) ++failed;
  }
  std::cout << "summary: " << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
