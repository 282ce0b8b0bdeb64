#include "doctest.h"

#include "fixtures.hpp"
#include "hooklab/errors.hpp"
#include "hooklab/tree.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hooklab;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("vertex_count") {
  CHECK(vertex_count(KAryTree(2)) == 0);
  CHECK(vertex_count(KAryTree::leaf(2)) == 1);
  CHECK(vertex_count(decode(fixtures::kSixVertexCode, 2)) == 6);
}

TEST_CASE("hook_lengths") {
  CHECK(hook_lengths(KAryTree::leaf(2)).values() == std::vector<int>{1});
  CHECK(hook_lengths(decode(fixtures::kSixVertexCode, 2)).values() == std::vector<int>{1, 1, 1, 2, 3, 6});
  CHECK(hook_lengths(decode("(((--)-)-)", 2)).values() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(hook_lengths(KAryTree(3)), DomainError);
}

TEST_CASE("depths") {
  CHECK(depths(KAryTree::leaf(3)) == DepthMap{1});
  CHECK(sorted(depths(decode(fixtures::kSixVertexCode, 2))) == std::vector<int>{1, 2, 2, 3, 3, 3});
  CHECK(depths(decode("(-(-(-(--))))", 2)) == DepthMap{1, 2, 3, 4});
  CHECK_THROWS_AS(depths(KAryTree(2)), DomainError);
}

TEST_CASE("hooks and depths agree with the ancestry oracle on every small tree") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n)
      for (const auto& t : enumerate_trees(n, k)) {
        CHECK(subtree_sizes(t) == oracle::hooks_by_ancestry(t));
        CHECK(depths(t) == oracle::depths_by_ancestry(t));
        const auto hooks = hook_lengths(t);
        CHECK(hooks.size() == t.size());
        CHECK(std::count(hooks.values().begin(), hooks.values().end(), n) == 1);
        CHECK(hooks.values().back() == n);
        CHECK(hooks.sum() <= static_cast<long long>(n) * (n + 1) / 2);
      }
}

TEST_CASE("hook sum reaches n(n+1)/2 exactly on paths") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n, 2)) {
      bool path = true;
      for (VertexId v = 0; static_cast<std::size_t>(v) < t.size(); ++v) path = path && t.child_count(v) <= 1;
      CHECK((hook_lengths(t).sum() == n * (n + 1) / 2) == path);
    }
}

TEST_CASE("enumerate_trees") {
  CHECK(enumerate_trees(1, 4).size() == 1);
  CHECK(enumerate_trees(3, 2).size() == 5);
  CHECK(enumerate_trees(2, 3).size() == 3);
  CHECK(enumerate_trees(0, 2) == std::vector<KAryTree>{KAryTree(2)});

  SUBCASE("fixed order") {
    std::vector<std::string> codes;
    for (const auto& t : enumerate_trees(3, 2)) codes.push_back(encode(t));
    CHECK(codes == std::vector<std::string>{"(-(-(--)))", "(-((--)-))", "((--)(--))", "((-(--))-)", "(((--)-)-)"});
  }

  SUBCASE("each tree once, stream length matches count_trees and the closed form") {
    for (int k = 1; k <= 4; ++k)
      for (int n = 0; n <= 8; ++n) {
        std::set<std::string> seen;
        std::size_t length = 0;
        for_each_tree(n, k, [&](const KAryTree& t) {
          ++length;
          CHECK(t.size() == static_cast<std::size_t>(n));
          seen.insert(encode(t));
        });
        CHECK(seen.size() == length);
        CHECK(BigInt(length) == count_trees(n, k));
        CHECK(count_trees(n, k) == oracle::fuss_catalan(n, k));
      }
  }

  SUBCASE("root compositions partition the stream") {
    const TreeCatalog catalog(3, 4);
    std::vector<KAryTree> merged;
    for (const auto& comp : root_compositions(5, 3))
      for_each_tree_with_composition(catalog, comp, [&](const KAryTree& t) { merged.push_back(t); });
    CHECK(merged == enumerate_trees(5, 3));
  }

  SUBCASE("guard") {
    CHECK_THROWS_AS(enumerate_trees(50, 4), GuardExceeded);
    try {
      enumerate_trees(10, 2, SweepOptions{100, 1});
      FAIL("expected refusal");
    } catch (const GuardExceeded& e) {
      CHECK(e.estimate() == "16796");
      CHECK(e.cap() == 100);
    }
  }
}

TEST_CASE("count_trees") {
  CHECK(count_trees(0, 3) == 1);
  CHECK(count_trees(3, 2) == 5);
  CHECK(count_trees(4, 3) == 55);
  CHECK(count_trees(10, 2) == 16796);
  CHECK(count_trees(40, 4) == oracle::fuss_catalan(40, 4));
  CHECK_THROWS_AS(count_trees(-1, 2), DomainError);
  CHECK_THROWS_AS(count_trees(3, 0), DomainError);
}

TEST_CASE("is_complete") {
  CHECK(is_complete(KAryTree::leaf(2)));
  CHECK_FALSE(is_complete(decode("((--)-)", 2)));
  CHECK_FALSE(is_complete(decode(fixtures::kSixVertexCode, 2)));
  CHECK(is_complete(decode("((---)(---)(---))", 3)));
}

TEST_CASE("to_complete") {
  const auto single = to_complete(KAryTree::leaf(2));
  CHECK(single.size() == 3);
  CHECK(hook_lengths(single).values() == std::vector<int>{1, 1, 3});

  const auto six = to_complete(decode(fixtures::kSixVertexCode, 2));
  CHECK(six.size() == 13);
  CHECK(hook_lengths(six).values() == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 5, 7, 13});

  CHECK_THROWS_AS(to_complete(KAryTree::leaf(3)), DomainError);
  CHECK_THROWS_AS(to_complete(KAryTree(2)), DomainError);

  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n, 2)) {
      const auto c = to_complete(t);
      REQUIRE(is_complete(c));
      CHECK(c.size() == 2 * t.size() + 1);
      std::vector<int> expected(t.size() + 1, 1);
      const auto original = hook_lengths(t);
      for (int h : original.values()) expected.push_back(2 * h + 1);
      CHECK(hook_lengths(c) == HookMultiset(expected));
    }
}

TEST_CASE("TreeCode") {
  CHECK(encode(KAryTree::leaf(2)) == "(--)");
  CHECK(encode(KAryTree(2)) == "-");
  CHECK(encode(decode("(-(--))", 2)) == "(-(--))");
  CHECK(decode("(-(--))", 2).child(0, 1) == kNoVertex);
  CHECK(decode("(-(--))", 2).child(0, 2) == 1);
  CHECK(decode("-", 5).empty());

  SUBCASE("round trip and length over all small trees") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 0; n <= 6; ++n)
        for (const auto& t : enumerate_trees(n, k)) {
          const auto code = encode(t);
          CHECK(decode(code, k) == t);
          const std::size_t empty_slots = t.size() * static_cast<std::size_t>(k) - (t.empty() ? 0 : t.size() - 1) +
                                          (t.empty() ? 1 : 0);
          CHECK(code.size() == 2 * t.size() + empty_slots);
        }
  }

  SUBCASE("malformed codes report a position") {
    auto position_of = [](std::string_view code, int k) -> std::size_t {
      try {
        decode(code, k);
      } catch (const ParseError& e) {
        return e.position();
      }
      return std::string::npos;
    };
    CHECK(position_of("", 2) == 0);
    CHECK(position_of("(--", 2) == 3);
    CHECK(position_of("(---)", 2) == 3);
    CHECK(position_of("(-x)", 2) == 2);
    CHECK(position_of("(--)-", 2) == 4);
    CHECK(position_of("(--)", 3) == 3);
  }
}

TEST_CASE("node and subtree") {
  const auto six = decode(fixtures::kSixVertexCode, 2);
  CHECK(encode(six.subtree(1)) == "((--)-)");
  CHECK(encode(six.subtree(3)) == "((--)(--))");
  const std::vector<KAryTree> kids{six.subtree(1), six.subtree(3)};
  CHECK(KAryTree::node(kids) == six);
  const std::vector<KAryTree> mixed{KAryTree::leaf(2), KAryTree::leaf(3)};
  CHECK_THROWS_AS(KAryTree::node(mixed), DomainError);
  CHECK_THROWS_AS(six.child(0, 3), DomainError);
}

TEST_CASE("random trees from insertion tables survive encode/decode") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    // Random recursive tree: attach vertex m below a random earlier vertex's free slot.
    std::vector<VertexId> table(static_cast<std::size_t>(n * k), kNoVertex);
    for (int m = 1; m < n; ++m) {
      while (true) {
        const int at = std::uniform_int_distribution<int>(0, n * k - 1)(rng);
        if (at / k < m && table[static_cast<std::size_t>(at)] == kNoVertex) {
          table[static_cast<std::size_t>(at)] = m;
          break;
        }
      }
    }
    const auto t = KAryTree::from_child_table(k, table, 0);
    REQUIRE(t.size() == static_cast<std::size_t>(n));
    CHECK(decode(encode(t), k) == t);
    CHECK(subtree_sizes(t) == oracle::hooks_by_ancestry(t));
    long long hook_sum = 0, depth_sum = 0;
    for (int h : subtree_sizes(t)) hook_sum += h;
    for (int f : depths(t)) depth_sum += f;
    CHECK(hook_sum == depth_sum);
  }
}
