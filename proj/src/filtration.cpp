#include "hooklab/filtration.hpp"

#include "hooklab/errors.hpp"
#include "parallel.hpp"
#include "staircase_detail.hpp"

#include <algorithm>

namespace hooklab {

namespace {

int half_size(const StaircaseArray& array) {
  if (array.k() != 2) throw DomainError("filtration is defined for binary arrays only (k = 2)");
  if (array.n() < 3 || array.n() % 2 == 0)
    throw DomainError("filtration needs an array with 2n+1 rows, n >= 1; got " + std::to_string(array.n()));
  return (array.n() - 1) / 2;
}

int level_from_table(const std::vector<VertexId>& slots, int half) {
  const auto size_count = slots.size() / 2;
  std::vector<int> size(size_count, 1);
  // Insertion order puts every child after its parent.
  for (std::size_t v = size_count; v-- > 0;)
    for (std::size_t r = 0; r < 2; ++r)
      if (slots[2 * v + r] != kNoVertex) size[v] += size[static_cast<std::size_t>(slots[2 * v + r])];

  int level = 0;
  for (std::size_t v = 0; v < size_count; ++v) {
    const VertexId left = slots[2 * v];
    const VertexId right = slots[2 * v + 1];
    if (left == kNoVertex && right == kNoVertex) continue;  // leaf
    const int left_size = left == kNoVertex ? 0 : size[static_cast<std::size_t>(left)];
    const int right_size = right == kNoVertex ? 0 : size[static_cast<std::size_t>(right)];
    if (left_size % 2 == 0 || right_size % 2 == 0) break;
    ++level;
  }
  if (level > half) throw InvariantViolation("more odd-odd internal vertices than a complete tree allows");
  return level;
}

struct LevelHistogram {
  std::vector<std::uint64_t> exact;  // arrays whose level is exactly j
  std::uint64_t complete = 0;
  std::uint64_t terminal_mismatches = 0;
  std::uint64_t parity_mismatches = 0;
  std::vector<VertexId> scratch;
};

}  // namespace

int membership_level(const StaircaseArray& array) {
  const int half = half_size(array);
  std::vector<VertexId> slots;
  detail::insertion_table(array, slots);
  return level_from_table(slots, half);
}

bool m1_parity_check(const StaircaseArray& array) {
  half_size(array);
  int ones = 0;
  for (int i = 1; i < array.n(); ++i) ones += array.component(i, 1) == 1;
  return ones % 2 == 1;
}

FiltrationReport compute_filtration(int n, const SweepOptions& options) {
  if (n < 1) throw DomainError("compute_filtration needs n >= 1");
  const int rows = 2 * n + 1;
  const std::uint64_t total =
      checked_staircase_count(rows, 2, options.guard_cap, "compute_filtration(n=" + std::to_string(n) + ")");

  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::max(1U, options.jobs) * 16ULL);
  const auto partials =
      detail::run_partitioned<LevelHistogram>(chunks, options.jobs, [&](std::size_t chunk, LevelHistogram& h) {
        if (h.exact.empty()) h.exact.assign(static_cast<std::size_t>(n) + 1, 0);
        const std::uint64_t begin = total * chunk / chunks;
        const std::uint64_t end = total * (chunk + 1) / chunks;
        for_each_staircase_array(rows, 2, begin, end, [&](const StaircaseArray& a) {
          detail::insertion_table(a, h.scratch);
          const int level = level_from_table(h.scratch, n);
          ++h.exact[static_cast<std::size_t>(level)];
          const bool complete = is_complete(phi(a).tree);
          h.complete += complete;
          h.terminal_mismatches += (level == n) != complete;
          h.parity_mismatches += m1_parity_check(a) != (level >= 1);
        });
      });

  FiltrationReport report;
  report.n = n;
  std::vector<std::uint64_t> exact(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t complete = 0, terminal_mismatches = 0, parity_mismatches = 0;
  for (const auto& h : partials) {
    for (std::size_t j = 0; j < h.exact.size(); ++j) exact[j] += h.exact[j];
    complete += h.complete;
    terminal_mismatches += h.terminal_mismatches;
    parity_mismatches += h.parity_mismatches;
  }
  // |M_j| counts arrays at level j or deeper.
  report.level_sizes.assign(exact.size(), BigInt(0));
  BigInt running = 0;
  for (std::size_t j = exact.size(); j-- > 0;) {
    running += exact[j];
    report.level_sizes[j] = running;
  }
  report.terminal_complete_count = complete;
  report.halving_ok = true;
  for (std::size_t j = 0; j + 1 < report.level_sizes.size(); ++j)
    report.halving_ok = report.halving_ok && report.level_sizes[j + 1] * 2 == report.level_sizes[j];
  report.terminal_matches_complete = report.level_sizes.back() == report.terminal_complete_count;
  report.terminal_exact = terminal_mismatches == 0;
  report.parity_agrees = parity_mismatches == 0;
  return report;
}

}  // namespace hooklab
