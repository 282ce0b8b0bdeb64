#include "doctest.h"

#include "hooklab/errors.hpp"
#include "hooklab/filtration.hpp"
#include "oracles.hpp"

using namespace hooklab;

namespace {

StaircaseArray binary(const std::vector<std::vector<int>>& rows) { return StaircaseArray::from_rows(2, rows); }

/// Level recomputed from the relabeled tree: internal vertices sorted by
/// label length, subtree sizes from the ancestry oracle.
int level_by_oracle(const StaircaseArray& a) {
  const auto labeled = phi(a);
  const auto hooks = oracle::hooks_by_ancestry(labeled.tree);
  std::vector<VertexId> by_length(labeled.labels.size());
  for (std::size_t v = 0; v < labeled.labels.size(); ++v) by_length[labeled.labels[v].size()] = static_cast<VertexId>(v);
  int level = 0;
  for (VertexId v : by_length) {
    if (labeled.tree.child_count(v) == 0) continue;
    const VertexId l = labeled.tree.child(v, 1), r = labeled.tree.child(v, 2);
    const int ls = l == kNoVertex ? 0 : hooks[static_cast<std::size_t>(l)];
    const int rs = r == kNoVertex ? 0 : hooks[static_cast<std::size_t>(r)];
    if (ls % 2 == 0 || rs % 2 == 0) break;
    ++level;
  }
  return level;
}

}  // namespace

TEST_CASE("membership_level") {
  CHECK(membership_level(binary({{}, {1}, {2, 1}})) == 1);
  CHECK(membership_level(binary({{}, {1}, {2, 2}})) == 1);
  CHECK(membership_level(binary({{}, {1}, {1, 1}})) == 0);
  CHECK(membership_level(binary({{}, {2}, {2, 2}})) == 0);

  CHECK_THROWS_AS(membership_level(StaircaseArray(3, 3)), DomainError);
  CHECK_THROWS_AS(membership_level(StaircaseArray(4, 2)), DomainError);
  CHECK_THROWS_AS(membership_level(StaircaseArray(1, 2)), DomainError);

  SUBCASE("matches the relabeled-tree oracle and completeness, n <= 2") {
    for (int n = 1; n <= 2; ++n) {
      StaircaseArray a(2 * n + 1, 2);
      do {
        const int level = membership_level(a);
        CHECK(level == level_by_oracle(a));
        CHECK((level == n) == is_complete(phi(a).tree));
      } while (a.advance());
    }
  }
}

TEST_CASE("m1_parity_check") {
  CHECK(m1_parity_check(binary({{}, {1}, {2, 1}})));
  CHECK_FALSE(m1_parity_check(binary({{}, {2}, {2, 2}})));
  CHECK_THROWS_AS(m1_parity_check(StaircaseArray(5, 3)), DomainError);

  StaircaseArray a(5, 2);
  std::uint64_t visited = 0;
  do {
    CHECK(m1_parity_check(a) == (membership_level(a) >= 1));
    ++visited;
  } while (a.advance());
  CHECK(visited == 1024);
}

TEST_CASE("compute_filtration") {
  const auto one = compute_filtration(1);
  CHECK(one.level_sizes == std::vector<BigInt>{8, 4});
  CHECK(one.terminal_complete_count == 4);
  CHECK(one.halving_ok);
  CHECK(one.terminal_matches_complete);
  CHECK(one.terminal_exact);
  CHECK(one.parity_agrees);

  const auto two = compute_filtration(2, SweepOptions{kDefaultGuardCap, 3});
  CHECK(two.level_sizes == std::vector<BigInt>{1024, 512, 256});
  CHECK(two.terminal_complete_count == 256);
  CHECK(two.halving_ok);
  CHECK(two.terminal_exact);

  // The two complete 5-vertex shapes account for the whole terminal level.
  BigInt complete_labelings = 0;
  for_each_tree(5, 2, [&](const KAryTree& t) {
    if (is_complete(t)) complete_labelings += count_labelings_for_shape(t);
  });
  CHECK(complete_labelings == 256);

  CHECK_THROWS_AS(compute_filtration(4), GuardExceeded);
  CHECK_THROWS_AS(compute_filtration(0), DomainError);
}
