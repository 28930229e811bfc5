#include "inveul/oracle.hpp"

#include <cstdint>
#include <thread>
#include <utility>

#include "inveul/errors.hpp"

namespace inveul {

bool InvolutionWord::is_involution() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int img = mapping[static_cast<size_t>(i) - 1];
    if (img < 1 || img > n) return false;
    if (mapping[static_cast<size_t>(img) - 1] != i) return false;
  }
  return true;
}

bool InvolutionWord::is_fixed_point_free() const {
  if (!is_involution()) return false;
  for (int i = 1; i <= size(); ++i) {
    if (mapping[static_cast<size_t>(i) - 1] == i) return false;
  }
  return true;
}

namespace {

int descents_of(const std::vector<int>& map) {
  int d = 0;
  for (size_t i = 0; i + 1 < map.size(); ++i) {
    if (map[i] > map[i + 1]) ++d;
  }
  return d;
}

// Walks the construction tree: the largest unplaced element is either kept
// fixed (involutions only) or paired with a smaller unplaced element. Each
// word is reached exactly once. `map` uses 0 for "unplaced".
template <class Leaf>
void enumerate_rec(std::vector<int>& map, int hi, bool allow_fixed, Leaf&& leaf) {
  while (hi >= 1 && map[static_cast<size_t>(hi) - 1] != 0) --hi;
  if (hi == 0) {
    leaf();
    return;
  }
  if (allow_fixed) {
    map[static_cast<size_t>(hi) - 1] = hi;
    enumerate_rec(map, hi - 1, allow_fixed, leaf);
    map[static_cast<size_t>(hi) - 1] = 0;
  }
  for (int j = hi - 1; j >= 1; --j) {
    if (map[static_cast<size_t>(j) - 1] != 0) continue;
    map[static_cast<size_t>(hi) - 1] = j;
    map[static_cast<size_t>(j) - 1] = hi;
    enumerate_rec(map, hi - 1, allow_fixed, leaf);
    map[static_cast<size_t>(hi) - 1] = 0;
    map[static_cast<size_t>(j) - 1] = 0;
  }
}

struct Task {
  std::vector<int> map;
};

// Expands one task by a single decision level; completed words are tallied
// directly into `hist`.
void expand_task(std::vector<int> map, int n, bool allow_fixed,
                 std::vector<Task>& out, std::vector<std::uint64_t>& hist) {
  int hi = n;
  while (hi >= 1 && map[static_cast<size_t>(hi) - 1] != 0) --hi;
  if (hi == 0) {
    ++hist[static_cast<size_t>(descents_of(map))];
    return;
  }
  if (allow_fixed) {
    map[static_cast<size_t>(hi) - 1] = hi;
    out.push_back(Task{map});
    map[static_cast<size_t>(hi) - 1] = 0;
  }
  for (int j = hi - 1; j >= 1; --j) {
    if (map[static_cast<size_t>(j) - 1] != 0) continue;
    map[static_cast<size_t>(hi) - 1] = j;
    map[static_cast<size_t>(j) - 1] = hi;
    out.push_back(Task{map});
    map[static_cast<size_t>(hi) - 1] = 0;
    map[static_cast<size_t>(j) - 1] = 0;
  }
}

}  // namespace

int descent_count(const InvolutionWord& w) { return descents_of(w.mapping); }

void enumerate(int n, Family family,
               const std::function<void(const InvolutionWord&)>& visit) {
  if (n < 0) throw IndexOutOfRange("enumerate: n must be >= 0");
  InvolutionWord scratch;
  if (n == 0) {
    visit(scratch);  // the empty word
    return;
  }
  const bool allow_fixed = family == Family::Involution;
  if (!allow_fixed && n % 2 != 0) return;
  std::vector<int> map(static_cast<size_t>(n), 0);
  enumerate_rec(map, n, allow_fixed, [&] {
    scratch.mapping = map;
    visit(scratch);
  });
}

DescentRow brute_force_row(int n, Family family, const OracleOptions& opts) {
  if (n < 1) throw IndexOutOfRange("brute_force_row: n must be >= 1");
  const bool fpf = family == Family::FixedPointFree;
  const int limit = fpf ? opts.fixed_point_free_limit : opts.involution_limit;
  if (n > limit) {
    throw FeasibilityExceeded(
        "brute_force_row: n=" + std::to_string(n) + " exceeds the ceiling " +
        std::to_string(limit) + " for family " + family_name(family));
  }

  std::vector<std::uint64_t> hist(static_cast<size_t>(n), 0);
  if (!(fpf && n % 2 != 0)) {
    const bool allow_fixed = !fpf;
    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;

    std::vector<Task> tasks;
    tasks.push_back(Task{std::vector<int>(static_cast<size_t>(n), 0)});
    const size_t want = threads == 1 ? 1 : static_cast<size_t>(threads) * 8;
    while (tasks.size() < want) {
      std::vector<Task> next;
      for (Task& t : tasks) {
        expand_task(std::move(t.map), n, allow_fixed, next, hist);
      }
      if (next.empty()) {
        tasks.clear();
        break;
      }
      tasks = std::move(next);
    }

    if (threads == 1 || tasks.size() <= 1) {
      for (Task& t : tasks) {
        std::vector<int> map = std::move(t.map);
        enumerate_rec(map, n, allow_fixed,
                      [&] { ++hist[static_cast<size_t>(descents_of(map))]; });
      }
    } else {
      std::vector<std::vector<std::uint64_t>> partial(
          threads, std::vector<std::uint64_t>(static_cast<size_t>(n), 0));
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          std::vector<std::uint64_t>& h = partial[w];
          for (size_t i = w; i < tasks.size(); i += threads) {
            std::vector<int> map = tasks[i].map;
            enumerate_rec(map, n, allow_fixed,
                          [&] { ++h[static_cast<size_t>(descents_of(map))]; });
          }
        });
      }
      for (std::thread& th : pool) th.join();
      // Index-wise sum: the merged histogram does not depend on scheduling.
      for (const auto& h : partial) {
        for (int k = 0; k < n; ++k) hist[static_cast<size_t>(k)] += h[static_cast<size_t>(k)];
      }
    }
  }

  std::vector<BigCoeff> coeffs;
  coeffs.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    coeffs.emplace_back(static_cast<unsigned long>(hist[static_cast<size_t>(k)]));
  }
  DescentRow row{family, n, std::move(coeffs)};
  validate(row);
  return row;
}

}  // namespace inveul
