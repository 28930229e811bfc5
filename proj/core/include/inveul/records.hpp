#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "inveul/polyseq.hpp"
#include "inveul/recurrences.hpp"

namespace inveul {

// One triangle cell in exchange form. `value` is an exact decimal string of
// arbitrary length; no scientific notation, ever.
struct OutputRecord {
  std::string family;  // "I", "J", "a" or "b"
  long n = 0;
  long k = 0;
  std::string value;

  bool operator==(const OutputRecord&) const = default;
};

inline constexpr const char* kCsvHeader = "family,n,k,value";

std::string to_csv_line(const OutputRecord& r);
std::string to_json_line(const OutputRecord& r);

OutputRecord parse_csv_line(const std::string& line);
OutputRecord parse_json_line(const std::string& line);

// Reads a whole stream: CSV (header required) or JSON-lines. Blank lines and
// '#' comment lines are skipped.
std::vector<OutputRecord> read_csv(std::istream& in);
std::vector<OutputRecord> read_json_lines(std::istream& in);

std::vector<OutputRecord> records_of(const DescentRow& row);
std::vector<OutputRecord> records_of(const GammaRow& row);

// On-disk row cache: JSON-lines of OutputRecord.
//
// Loading recomputes every cached row bottom-up through the recurrences —
// which re-runs all exact-divisibility checks — and compares cell by cell
// against the file; any disagreement, malformed line, unknown family, or
// duplicate/missing cell throws CacheCorrupt. Returns the number of verified
// rows. A missing file is not an error (returns 0).
size_t load_row_cache(Triangles& triangles, const std::string& path);

// Writes every row computed so far. Creates or overwrites `path`.
void save_row_cache(Triangles& triangles, const std::string& path);

}  // namespace inveul
