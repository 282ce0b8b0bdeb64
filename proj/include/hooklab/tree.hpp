#pragma once

// Unlabeled k-ary trees: the value type, hook/depth statistics, exhaustive
// enumeration and the canonical text code.
//
// A tree is stored as a flat child table in preorder. Vertex ids are preorder
// indices 0..n-1 (visit a vertex, then its child slots in order 1..k); the root
// is 0. Child slots are numbered 1..k at every public entry point.

#include "hooklab/bigint.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hooklab {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

inline constexpr std::uint64_t kDefaultGuardCap = 10'000'000;

/// Limits shared by every exhaustive sweep.
struct SweepOptions {
  std::uint64_t guard_cap = kDefaultGuardCap;
  unsigned jobs = 1;
};

/// Throws GuardExceeded when `estimate` > `cap`.
void check_guard(const BigInt& estimate, std::uint64_t cap, std::string_view what);

class KAryTree {
 public:
  /// The empty tree of the given arity (k >= 1).
  explicit KAryTree(int arity);

  static KAryTree leaf(int arity);
  /// A root whose k child slots hold `children` in order (empty trees allowed).
  static KAryTree node(std::span<const KAryTree> children);
  /// Builds a tree from an arbitrary child table (`table[v*k + r-1]` is the
  /// r-th child of v, or kNoVertex). Vertices unreachable from `root` are
  /// dropped. When `preorder_of` is given it receives, for each table index,
  /// the vertex's preorder id (kNoVertex if unreachable).
  static KAryTree from_child_table(int arity, std::span<const VertexId> table, VertexId root,
                                   std::vector<VertexId>* preorder_of = nullptr);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return slots_.size() / static_cast<std::size_t>(arity_); }
  bool empty() const noexcept { return slots_.empty(); }
  VertexId root() const noexcept { return empty() ? kNoVertex : 0; }

  /// The child in slot r (1-based), or kNoVertex.
  VertexId child(VertexId v, int slot) const;
  /// All k slots of v; slot r is element r-1.
  std::span<const VertexId> slots(VertexId v) const;
  std::size_t child_count(VertexId v) const;

  KAryTree subtree(VertexId v) const;

  friend bool operator==(const KAryTree&, const KAryTree&) = default;
  friend std::strong_ordering operator<=>(const KAryTree&, const KAryTree&) = default;

 private:
  KAryTree(int arity, std::vector<VertexId> slots) : arity_(arity), slots_(std::move(slots)) {}

  int arity_;
  std::vector<VertexId> slots_;
};

/// Sorted multiset of hook lengths (subtree sizes).
class HookMultiset {
 public:
  HookMultiset() = default;
  explicit HookMultiset(std::vector<int> values);

  const std::vector<int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  long long sum() const;
  BigInt product() const;

  friend bool operator==(const HookMultiset&, const HookMultiset&) = default;

 private:
  std::vector<int> values_;
};

/// f_u for every vertex, indexed by preorder id. The root has depth 1.
using DepthMap = std::vector<int>;

std::size_t vertex_count(const KAryTree& tree);
/// h_u for every vertex, indexed by preorder id.
std::vector<int> subtree_sizes(const KAryTree& tree);
HookMultiset hook_lengths(const KAryTree& tree);
DepthMap depths(const KAryTree& tree);

/// Number of k-ary trees with n vertices (convolution recurrence).
BigInt count_trees(int n, int k);

/// Compositions of n-1 into k ordered nonnegative parts, lexicographic order.
/// These are the root-level partitions of the tree stream.
std::vector<std::vector<int>> root_compositions(int n, int k);

/// Every k-ary tree of each size 0..max_size, each list in enumeration order.
class TreeCatalog {
 public:
  TreeCatalog(int arity, int max_size);

  int arity() const noexcept { return arity_; }
  int max_size() const noexcept { return static_cast<int>(by_size_.size()) - 1; }
  const std::vector<KAryTree>& of_size(int size) const;

 private:
  int arity_;
  std::vector<std::vector<KAryTree>> by_size_;
};

using TreeVisitor = std::function<void(const KAryTree&)>;

/// Visits the trees whose root's subtree sizes are `composition`; the
/// catalog must cover every part.
void for_each_tree_with_composition(const TreeCatalog& catalog, std::span<const int> composition,
                                    const TreeVisitor& visit);

/// Visits every k-ary tree with n vertices exactly once in the fixed order:
/// root compositions lexicographically, children recursively in the same order.
void for_each_tree(int n, int k, const TreeVisitor& visit, const SweepOptions& options = {});
std::vector<KAryTree> enumerate_trees(int n, int k, const SweepOptions& options = {});

/// True iff every vertex has 0 or k nonempty children.
bool is_complete(const KAryTree& tree);
/// Fills every empty slot of a binary tree with a leaf.
KAryTree to_complete(const KAryTree& tree);

std::string encode(const KAryTree& tree);
KAryTree decode(std::string_view code, int arity);

}  // namespace hooklab
