#include "inveul/records.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "inveul/errors.hpp"

namespace inveul {

std::string to_csv_line(const OutputRecord& r) {
  return r.family + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.value;
}

std::string to_json_line(const OutputRecord& r) {
  nlohmann::json j{{"family", r.family}, {"n", r.n}, {"k", r.k}, {"value", r.value}};
  return j.dump();
}

namespace {

long parse_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw Error("");
    return v;
  } catch (...) {
    throw Error(std::string("record: bad ") + what + " field: '" + s + "'");
  }
}

void check_record(const OutputRecord& r) {
  if (r.family != "I" && r.family != "J" && r.family != "a" && r.family != "b") {
    throw Error("record: unknown family '" + r.family + "'");
  }
  parse_decimal(r.value);  // throws on malformed values
}

}  // namespace

OutputRecord parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (fields.size() != 4) {
    throw Error("record: expected 4 CSV fields, got " + std::to_string(fields.size()));
  }
  OutputRecord r{fields[0], parse_long(fields[1], "n"), parse_long(fields[2], "k"), fields[3]};
  check_record(r);
  return r;
}

OutputRecord parse_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("record: bad JSON line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j.contains("n") ||
      !j.contains("k") || !j.contains("value")) {
    throw Error("record: JSON line missing a required field");
  }
  OutputRecord r{j["family"].get<std::string>(), j["n"].get<long>(),
                 j["k"].get<long>(), j["value"].get<std::string>()};
  check_record(r);
  return r;
}

namespace {

std::vector<OutputRecord> read_lines(std::istream& in, bool csv) {
  std::vector<OutputRecord> records;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (csv && !saw_header) {
      if (line != kCsvHeader) throw Error("record: missing CSV header");
      saw_header = true;
      continue;
    }
    records.push_back(csv ? parse_csv_line(line) : parse_json_line(line));
  }
  return records;
}

}  // namespace

std::vector<OutputRecord> read_csv(std::istream& in) { return read_lines(in, true); }

std::vector<OutputRecord> read_json_lines(std::istream& in) {
  return read_lines(in, false);
}

std::vector<OutputRecord> records_of(const DescentRow& row) {
  std::vector<OutputRecord> records;
  records.reserve(row.coeffs.size());
  for (long k = 0; k < row.n; ++k) {
    records.push_back({family_name(row.family), row.n, k, to_decimal(row.at(k))});
  }
  return records;
}

std::vector<OutputRecord> records_of(const GammaRow& row) {
  std::vector<OutputRecord> records;
  records.reserve(row.gammas.size());
  for (long k = row.k_min(); k <= row.k_max(); ++k) {
    records.push_back({gamma_family_name(row.family), row.n, k, to_decimal(row.at(k))});
  }
  return records;
}

namespace {

using CellMap = std::map<std::pair<long, long>, BigCoeff>;  // (n, k) -> value

// Verifies that the cached cells of one row agree with the freshly computed
// row: the same k-support, the same values.
template <class Row>
void check_cached_row(const std::string& family, long n, const CellMap& cells,
                      const Row& computed, long k_lo, long k_hi) {
  long count = 0;
  for (long k = k_lo; k <= k_hi; ++k) {
    auto it = cells.find({n, k});
    if (it == cells.end()) {
      throw CacheCorrupt("cache: family " + family + " row " + std::to_string(n) +
                         " is missing k=" + std::to_string(k));
    }
    if (it->second != computed.at(k)) {
      throw CacheCorrupt("cache: family " + family + " cell (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ") holds " +
                         to_decimal(it->second) + " but recomputation gives " +
                         to_decimal(computed.at(k)));
    }
    ++count;
  }
  long row_cells = 0;
  for (const auto& [key, value] : cells) {
    if (key.first == n) ++row_cells;
  }
  if (row_cells != count) {
    throw CacheCorrupt("cache: family " + family + " row " + std::to_string(n) +
                       " has cells outside its valid k range");
  }
}

}  // namespace

size_t load_row_cache(Triangles& triangles, const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::vector<OutputRecord> records = read_json_lines(in);

  std::map<std::string, CellMap> families;
  for (const OutputRecord& r : records) {
    auto [it, inserted] = families[r.family].emplace(
        std::make_pair(r.n, r.k), parse_decimal(r.value));
    if (!inserted) {
      throw CacheCorrupt("cache: duplicate cell " + r.family + "(n=" +
                         std::to_string(r.n) + ", k=" + std::to_string(r.k) + ")");
    }
  }

  size_t rows = 0;
  for (const auto& [family, cells] : families) {
    std::vector<long> ns;
    for (const auto& [key, value] : cells) {
      if (ns.empty() || ns.back() != key.first) ns.push_back(key.first);
    }
    for (long n : ns) {
      if (n < 1 || n > 100000) {
        throw CacheCorrupt("cache: unreasonable row index " + std::to_string(n));
      }
      const int ni = static_cast<int>(n);
      if (family == "I") {
        check_cached_row(family, n, cells, triangles.i_row(ni), 0, n - 1);
      } else if (family == "J") {
        if (n % 2 != 0) {
          check_cached_row(family, n, cells, zero_fixed_point_free_row(ni), 0, n - 1);
        } else {
          check_cached_row(family, n, cells, triangles.j_row(ni), 0, n - 1);
        }
      } else if (family == "a") {
        check_cached_row(family, n, cells, triangles.a_row(ni), 0, (n - 1) / 2);
      } else {  // "b"
        if (n % 2 != 0) {
          throw CacheCorrupt("cache: family b has no odd rows");
        }
        check_cached_row(family, n, cells, triangles.b_row(ni), 1, n / 2);
      }
      ++rows;
    }
  }
  return rows;
}

void save_row_cache(Triangles& triangles, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cache: cannot open '" + path + "' for writing");
  auto dump = [&out](const std::vector<OutputRecord>& records) {
    for (const OutputRecord& r : records) out << to_json_line(r) << "\n";
  };
  for (int n = 1; n <= triangles.max_i(); ++n) dump(records_of(triangles.i_row(n)));
  for (int n = 2; n <= triangles.max_j(); n += 2) dump(records_of(triangles.j_row(n)));
  for (int n = 1; n <= triangles.max_a(); ++n) dump(records_of(triangles.a_row(n)));
  for (int n = 2; n <= triangles.max_b(); n += 2) dump(records_of(triangles.b_row(n)));
  if (!out) throw Error("cache: write to '" + path + "' failed");
}

}  // namespace inveul
