// Command-line surface for the descent-distribution library: print triangle
// rows, run the verification suites, scan the open conjectures, reproduce the
// reference tables, and time the hot paths.
//
// Exit codes: 0 success / all checks hold, 1 verification failure,
// 2 usage error, 3 a scan found counterexamples.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "inveul/closed_forms.hpp"
#include "inveul/conjectures.hpp"
#include "inveul/errors.hpp"
#include "inveul/golden.hpp"
#include "inveul/oracle.hpp"
#include "inveul/records.hpp"
#include "inveul/recurrences.hpp"

namespace {

using namespace inveul;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

enum class TableFamily { I, J, GammaA, GammaB };

std::optional<TableFamily> parse_table_family(std::string name) {
  if (name.size() != 1) return std::nullopt;
  switch (std::tolower(static_cast<unsigned char>(name[0]))) {
    case 'i': return TableFamily::I;
    case 'j': return TableFamily::J;
    case 'a': return TableFamily::GammaA;
    case 'b': return TableFamily::GammaB;
    default: return std::nullopt;
  }
}

struct GlobalOptions {
  std::string format = "text";
  unsigned threads = 0;
  std::string cache_path;
};

struct CacheGuard {
  // Loads an existing cache up front and rewrites it with everything computed
  // by the time the command finishes.
  CacheGuard(Triangles& t, const GlobalOptions& g) : triangles(t), path(g.cache_path) {
    if (!path.empty()) {
      const size_t rows = load_row_cache(triangles, path);
      if (rows > 0) {
        std::cerr << "cache: verified " << rows << " rows from " << path << "\n";
      }
    }
  }
  void flush() {
    if (!path.empty()) save_row_cache(triangles, path);
  }
  Triangles& triangles;
  std::string path;
};

// --- table -------------------------------------------------------------------

std::vector<std::vector<OutputRecord>> collect_table_rows(Triangles& t,
                                                          TableFamily family,
                                                          int from, int to) {
  std::vector<std::vector<OutputRecord>> rows;
  for (int n = from; n <= to; ++n) {
    switch (family) {
      case TableFamily::I:
        rows.push_back(records_of(t.i_row(n)));
        break;
      case TableFamily::J:
        rows.push_back(records_of(n % 2 == 0 ? t.j_row(n)
                                             : zero_fixed_point_free_row(n)));
        break;
      case TableFamily::GammaA:
        rows.push_back(records_of(t.a_row(n)));
        break;
      case TableFamily::GammaB:
        if (n % 2 == 0) rows.push_back(records_of(t.b_row(n)));
        break;
    }
  }
  return rows;
}

void print_aligned(const std::vector<std::vector<OutputRecord>>& rows) {
  std::vector<size_t> widths;
  size_t label_width = 0;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    label_width = std::max(label_width, (row[0].family + "_" +
                                         std::to_string(row[0].n)).size());
    for (size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].value.size());
    }
  }
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::string label = row[0].family + "_" + std::to_string(row[0].n);
    std::cout << label << std::string(label_width - label.size(), ' ') << ":";
    for (size_t c = 0; c < row.size(); ++c) {
      std::cout << " " << std::string(widths[c] - row[c].value.size(), ' ')
                << row[c].value;
    }
    std::cout << "\n";
  }
}

int run_table(Triangles& t, TableFamily family, int from, int to,
              const std::string& format) {
  const auto rows = collect_table_rows(t, family, from, to);
  if (format == "csv") {
    std::cout << kCsvHeader << "\n";
    for (const auto& row : rows) {
      for (const OutputRecord& r : row) std::cout << to_csv_line(r) << "\n";
    }
  } else if (format == "json") {
    for (const auto& row : rows) {
      for (const OutputRecord& r : row) std::cout << to_json_line(r) << "\n";
    }
  } else {
    print_aligned(rows);
  }
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

VerificationReport check_row_sums(Triangles& t, int n_max) {
  VerificationReport r;
  r.methods = "row sums vs telephone numbers and double factorials";
  r.n_lo = 1;
  r.n_hi = n_max;
  for (int n = 1; n <= n_max; ++n) {
    if (coefficient_sum(t.i_row(n)) != telephone_number(n)) {
      r.ok = false;
      r.first_mismatch = "involution row sum differs at n=" + std::to_string(n);
      return r;
    }
  }
  for (int n = 2; n <= n_max; n += 2) {
    if (coefficient_sum(t.j_row(n)) != double_factorial(n - 1)) {
      r.ok = false;
      r.first_mismatch = "fixed-point-free row sum differs at n=" + std::to_string(n);
      return r;
    }
  }
  return r;
}

VerificationReport check_structure(Triangles& t, int n_max) {
  VerificationReport r;
  r.methods = "symmetry and unimodality of every row";
  r.n_lo = 1;
  r.n_hi = n_max;
  for (int n = 1; n <= n_max; ++n) {
    if (!is_symmetric(t.i_row(n)) || !is_unimodal(t.i_row(n))) {
      r.ok = false;
      r.first_mismatch = "involution row " + std::to_string(n) + " fails";
      return r;
    }
  }
  for (int n = 2; n <= n_max; n += 2) {
    if (!is_symmetric(t.j_row(n)) || !is_unimodal(t.j_row(n))) {
      r.ok = false;
      r.first_mismatch = "fixed-point-free row " + std::to_string(n) + " fails";
      return r;
    }
  }
  return r;
}

VerificationReport check_gamma_consistency(Triangles& t, int n_max) {
  VerificationReport r;
  r.methods = "gamma rows: recurrence vs peeling vs alternating sums";
  r.n_lo = 1;
  r.n_hi = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const GammaRow& rec = t.a_row(n);
    if (gamma_expand(t.i_row(n)).gammas != rec.gammas ||
        a_explicit_row(t.i_row(n)).gammas != rec.gammas) {
      r.ok = false;
      r.first_mismatch = "gamma-a disagreement at n=" + std::to_string(n);
      return r;
    }
  }
  for (int n = 2; n <= n_max; n += 2) {
    const GammaRow& rec = t.b_row(n);
    if (gamma_expand(t.j_row(n)).gammas != rec.gammas ||
        b_explicit_row(t.j_row(n)).gammas != rec.gammas) {
      r.ok = false;
      r.first_mismatch = "gamma-b disagreement at n=" + std::to_string(n);
      return r;
    }
  }
  return r;
}

VerificationReport check_boundary_identities(Triangles& t, int n_max) {
  VerificationReport r;
  r.methods = "center gamma coefficients vs signed evaluations at -1";
  r.n_lo = 1;
  r.n_hi = n_max;
  // boundary_check throws on an identity violation; witnesses (negative
  // centers) are conjecture material, not verification failures.
  boundary_check(t, GammaFamily::A, 1, n_max);
  return r;
}

VerificationReport check_s_recurrence_grid() {
  VerificationReport r;
  r.methods = "auxiliary sum recurrence on the parameter grid |x|,|y| <= 10";
  r.n_lo = 0;
  r.n_hi = 40;
  for (long x = -10; x <= 10; ++x) {
    for (long y = -10; y <= 10; ++y) {
      const VerificationReport one = verify_s_recurrence({x, y}, 40);
      if (!one.ok) {
        r.ok = false;
        r.first_mismatch = one.first_mismatch;
        return r;
      }
    }
  }
  return r;
}

int run_verify(Triangles& t, int rec_max, int oracle_max,
               const GlobalOptions& global) {
  CrossVerifyOptions opts;
  opts.oracle.threads = global.threads;
  opts.oracle.involution_limit = std::max(opts.oracle.involution_limit, oracle_max);
  opts.oracle.fixed_point_free_limit =
      std::max(opts.oracle.fixed_point_free_limit, oracle_max);

  std::vector<VerificationReport> checks;
  checks.push_back(cross_verify(t, rec_max, oracle_max, opts));
  checks.push_back(check_row_sums(t, rec_max));
  checks.push_back(check_structure(t, rec_max));
  checks.push_back(check_gamma_consistency(t, rec_max));
  checks.push_back(check_boundary_identities(t, rec_max));
  checks.push_back(check_s_recurrence_grid());

  bool all_ok = true;
  if (global.format == "json") {
    json out = json::array();
    for (const VerificationReport& c : checks) {
      all_ok = all_ok && c.ok;
      out.push_back({{"methods", c.methods},
                     {"n_lo", c.n_lo},
                     {"n_hi", c.n_hi},
                     {"ok", c.ok},
                     {"first_mismatch", c.first_mismatch}});
    }
    std::cout << json{{"ok", all_ok}, {"checks", out}}.dump(2) << "\n";
  } else {
    for (const VerificationReport& c : checks) {
      all_ok = all_ok && c.ok;
      std::cout << (c.ok ? "[ OK ] " : "[FAIL] ") << c.methods << " (n = "
                << c.n_lo << ".." << c.n_hi << ")";
      if (!c.ok) std::cout << "\n       " << c.first_mismatch;
      std::cout << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerificationFailure;
}

// --- scan --------------------------------------------------------------------

const char* witness_family(ScanProperty p) {
  switch (p) {
    case ScanProperty::UnimodalI:
    case ScanProperty::LogConcaveI: return "I";
    case ScanProperty::UnimodalJ: return "J";
    case ScanProperty::GammaNonnegA:
    case ScanProperty::BoundaryA: return "a";
    default: return "b";
  }
}

int run_scan(Triangles& t, const std::string& property_name, int from, int to,
             std::optional<int> threshold, const GlobalOptions& global) {
  const auto property = parse_scan_property(property_name);
  if (!property) {
    std::cerr << "error: unknown property '" << property_name << "'\n";
    return kExitUsage;
  }
  ScanOptions opts;
  opts.threshold = threshold;
  const ScanResult result = scan(t, *property, from, to, opts);

  if (global.format == "json") {
    json witnesses = json::array();
    for (const Witness& w : result.witnesses) {
      witnesses.push_back({{"n", w.n},
                           {"k", w.k},
                           {"value", to_decimal(w.value)},
                           {"expected_pre_threshold", w.expected_pre_threshold}});
    }
    std::cout << json{{"property", scan_property_name(*property)},
                      {"from", result.n_lo},
                      {"to", result.n_hi},
                      {"status", result.all_hold ? "all-hold" : "counterexamples"},
                      {"witnesses", witnesses}}
                     .dump(2)
              << "\n";
  } else if (global.format == "csv") {
    std::cout << kCsvHeader << "\n";
    for (const Witness& w : result.witnesses) {
      std::cout << to_csv_line({witness_family(*property), w.n, w.k,
                                to_decimal(w.value)})
                << "\n";
    }
  } else {
    std::cout << "property " << scan_property_name(*property) << " on ["
              << result.n_lo << ", " << result.n_hi << "]: "
              << (result.all_hold
                      ? "all hold"
                      : "counterexamples (" +
                            std::to_string(result.witnesses.size()) + ")")
              << "\n";
    for (const Witness& w : result.witnesses) {
      std::cout << "  " << witness_family(*property) << "(" << w.n << "," << w.k
                << ") = " << to_decimal(w.value)
                << (w.expected_pre_threshold ? "  (expected below the conjectured threshold)"
                                             : "")
                << "\n";
    }
  }
  return result.all_hold ? kExitOk : kExitCounterexample;
}

// --- reproduce ---------------------------------------------------------------

struct CellDiff {
  std::string table;
  std::string family;
  long n, k;
  std::string expected, computed;
};

template <class Row>
void diff_rows(const std::string& table, const Row& expected, const Row& computed,
               std::vector<CellDiff>& diffs) {
  const auto exp_records = records_of(expected);
  const auto got_records = records_of(computed);
  for (size_t i = 0; i < exp_records.size(); ++i) {
    if (exp_records[i].value != got_records[i].value) {
      diffs.push_back({table, exp_records[i].family, exp_records[i].n,
                       exp_records[i].k, exp_records[i].value,
                       got_records[i].value});
    }
  }
}

std::string polynomial_latex(const DescentRow& row) {
  std::string out;
  for (long k = 0; k < row.n; ++k) {
    const BigCoeff& c = row.at(k);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1 || k == 0) out += to_decimal(c);
    if (k == 1) out += "t";
    if (k >= 2) out += "t^{" + std::to_string(k) + "}";
  }
  return out.empty() ? "0" : out;
}

void emit_latex(Triangles& t) {
  std::cout << "\\begin{tabular}{|l|l|l|}\\hline\n";
  std::cout << "$n$ & descent polynomial (involutions) & descent polynomial "
               "(fixed-point-free)\\\\\\hline\n";
  for (int n = 1; n <= 6; ++n) {
    const DescentRow j = n % 2 == 0 ? t.j_row(n) : zero_fixed_point_free_row(n);
    std::cout << n << " & $" << polynomial_latex(t.i_row(n)) << "$ & $"
              << polynomial_latex(j) << "$\\\\\\hline\n";
  }
  std::cout << "\\end{tabular}\n\n";

  auto gamma_table = [&](GammaFamily fam, int to, int step) {
    const long k_lo = fam == GammaFamily::A ? 0 : 1;
    long k_hi = 0;
    std::vector<const GammaRow*> rows;
    for (int n = step == 1 ? 1 : 2; n <= to; n += step) {
      rows.push_back(fam == GammaFamily::A ? &t.a_row(n) : &t.b_row(n));
      k_hi = std::max(k_hi, rows.back()->k_max());
    }
    std::cout << "\\begin{tabular}{|l|";
    for (size_t c = 0; c < rows.size(); ++c) std::cout << "c|";
    std::cout << "}\\hline\n$k\\setminus n$";
    for (const GammaRow* row : rows) std::cout << " & " << row->n;
    std::cout << "\\\\\\hline\n";
    for (long k = k_lo; k <= k_hi; ++k) {
      std::cout << k;
      for (const GammaRow* row : rows) {
        std::cout << " & ";
        if (k >= row->k_min() && k <= row->k_max()) {
          std::cout << "$" << to_decimal(row->at(k)) << "$";
        }
      }
      std::cout << "\\\\\\hline\n";
    }
    std::cout << "\\end{tabular}\n\n";
  };
  gamma_table(GammaFamily::A, 16, 1);
  gamma_table(GammaFamily::B, 24, 2);
}

int run_reproduce(Triangles& t, const std::string& emit,
                  const GlobalOptions& global) {
  std::vector<CellDiff> diffs;
  for (const DescentRow& expected : golden::involution_rows()) {
    diff_rows("descent", expected, t.i_row(expected.n), diffs);
  }
  for (const DescentRow& expected : golden::fixed_point_free_rows()) {
    const DescentRow computed = expected.n % 2 == 0
                                    ? t.j_row(expected.n)
                                    : zero_fixed_point_free_row(expected.n);
    diff_rows("descent", expected, computed, diffs);
  }
  for (const GammaRow& expected : golden::gamma_a_rows()) {
    diff_rows("gamma-a", expected, t.a_row(expected.n), diffs);
  }
  for (const GammaRow& expected : golden::gamma_b_rows()) {
    diff_rows("gamma-b", expected, t.b_row(expected.n), diffs);
  }

  if (emit == "latex") {
    emit_latex(t);
  }

  if (global.format == "json") {
    json out = json::array();
    for (const CellDiff& d : diffs) {
      out.push_back({{"table", d.table},
                     {"family", d.family},
                     {"n", d.n},
                     {"k", d.k},
                     {"expected", d.expected},
                     {"computed", d.computed}});
    }
    std::cout << json{{"ok", diffs.empty()}, {"diffs", out}}.dump(2) << "\n";
  } else if (diffs.empty()) {
    std::cout << "all reference cells reproduced exactly\n";
  } else {
    for (const CellDiff& d : diffs) {
      std::cout << "MISMATCH " << d.table << " " << d.family << "(n=" << d.n
                << ", k=" << d.k << "): expected " << d.expected << ", computed "
                << d.computed << "\n";
    }
  }
  return diffs.empty() ? kExitOk : kExitVerificationFailure;
}

// --- bench -------------------------------------------------------------------

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

int run_bench(int rows_max, int oracle_max, const GlobalOptions& global) {
  {
    Triangles t;
    std::cout << "triangle I to n=" << rows_max << ": "
              << time_ms([&] { t.i_row(rows_max); }) << " ms\n";
    std::cout << "triangle J to n=" << rows_max << ": "
              << time_ms([&] { t.j_row(rows_max - rows_max % 2); }) << " ms\n";
    std::cout << "triangle a to n=" << rows_max << ": "
              << time_ms([&] { t.a_row(rows_max); }) << " ms\n";
    std::cout << "triangle b to n=" << rows_max << ": "
              << time_ms([&] { t.b_row(rows_max - rows_max % 2); }) << " ms\n";
    std::cout << "gamma_expand of the involution row n=" << rows_max << ": "
              << time_ms([&] { gamma_expand(t.i_row(rows_max)); }) << " ms\n";
  }
  OracleOptions opts;
  opts.threads = 1;
  opts.involution_limit = std::max(opts.involution_limit, oracle_max);
  opts.fixed_point_free_limit = std::max(opts.fixed_point_free_limit, oracle_max);
  std::cout << "oracle involutions n=" << oracle_max << " (1 thread): "
            << time_ms([&] { brute_force_row(oracle_max, Family::Involution, opts); })
            << " ms\n";
  opts.threads = global.threads;
  std::cout << "oracle involutions n=" << oracle_max << " ("
            << (global.threads ? std::to_string(global.threads)
                               : std::string("auto"))
            << " threads): "
            << time_ms([&] { brute_force_row(oracle_max, Family::Involution, opts); })
            << " ms\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact descent-number distributions on involutions and "
               "fixed-point-free involutions: recurrences, closed forms, "
               "brute-force cross-checks and conjecture scans"};
  app.require_subcommand(1);

  GlobalOptions global;
  if (const char* env = std::getenv("INVEUL_CACHE")) global.cache_path = env;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", global.threads,
                 "Worker threads for enumeration (0 = hardware)");
  app.add_option("--cache", global.cache_path,
                 "Row cache path (JSON-lines; overrides INVEUL_CACHE)");

  auto* table = app.add_subcommand("table", "Print coefficient rows");
  std::string family_name_arg;
  int table_n = 0, table_from = 0, table_to = 0;
  table->add_option("--family", family_name_arg, "I, J, a or b")->required();
  table->add_option("--n", table_n, "Single row index");
  table->add_option("--from", table_from, "First row index");
  table->add_option("--to", table_to, "Last row index");
  table->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  int rec_max = 50, oracle_max = 12;
  verify->add_option("--rec-max", rec_max, "Recurrence/closed-form bound")
      ->capture_default_str();
  verify->add_option("--oracle-max", oracle_max, "Brute-force bound")
      ->capture_default_str();
  verify->fallthrough();

  auto* scan_cmd = app.add_subcommand("scan", "Scan a property over a range");
  std::string property;
  int scan_from = 1, scan_to = 500;
  std::optional<int> scan_threshold;
  scan_cmd->add_option("--property", property,
                       "unimodal-i, unimodal-j, log-concave-i, gamma-a, "
                       "gamma-b, boundary-a, boundary-b")
      ->required();
  scan_cmd->add_option("--from", scan_from, "First index")->capture_default_str();
  scan_cmd->add_option("--to", scan_to, "Last index")->capture_default_str();
  scan_cmd->add_option("--threshold", scan_threshold,
                       "Conjectured threshold for classifying witnesses");
  scan_cmd->fallthrough();

  auto* reproduce = app.add_subcommand(
      "reproduce", "Recompute the reference tables and diff them");
  std::string emit;
  reproduce->add_option("--emit", emit, "Re-render the tables (latex)")
      ->check(CLI::IsMember({"latex"}));
  reproduce->fallthrough();

  auto* bench = app.add_subcommand("bench", "Time the hot paths");
  int bench_rows = 200, bench_oracle = 12;
  bench->add_option("--rows", bench_rows, "Triangle depth")->capture_default_str();
  bench->add_option("--oracle", bench_oracle, "Enumeration size")
      ->capture_default_str();
  bench->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) {
      const auto family = parse_table_family(family_name_arg);
      if (!family) {
        std::cerr << "error: --family must be one of I, J, a, b\n";
        return kExitUsage;
      }
      int from = table_from, to = table_to;
      if (table_n > 0) {
        from = to = table_n;
      } else {
        if (from <= 0) {
          from = (*family == TableFamily::J || *family == TableFamily::GammaB) ? 2 : 1;
        }
        if (to <= 0) {
          std::cerr << "error: table needs --n or --to\n";
          return kExitUsage;
        }
      }
      if (from > to) {
        std::cerr << "error: empty range\n";
        return kExitUsage;
      }
      if (*family == TableFamily::GammaB && from == to && from % 2 != 0) {
        std::cerr << "error: gamma-b rows exist at even indices only\n";
        return kExitUsage;
      }
      Triangles t;
      CacheGuard cache(t, global);
      const int code = run_table(t, *family, from, to, global.format);
      cache.flush();
      return code;
    }
    if (*verify) {
      if (rec_max < 1 || oracle_max < 1) {
        std::cerr << "error: bounds must be positive\n";
        return kExitUsage;
      }
      Triangles t;
      CacheGuard cache(t, global);
      const int code = run_verify(t, rec_max, oracle_max, global);
      cache.flush();
      return code;
    }
    if (*scan_cmd) {
      if (scan_from > scan_to) {
        std::cerr << "error: empty range\n";
        return kExitUsage;
      }
      Triangles t;
      CacheGuard cache(t, global);
      const int code = run_scan(t, property, scan_from, scan_to, scan_threshold, global);
      cache.flush();
      return code;
    }
    if (*reproduce) {
      Triangles t;
      return run_reproduce(t, emit, global);
    }
    if (*bench) {
      return run_bench(bench_rows, bench_oracle, global);
    }
  } catch (const CacheCorrupt& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
