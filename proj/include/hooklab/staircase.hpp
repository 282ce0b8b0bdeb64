#pragma once

// Staircase arrays S(n,k), staircase-labeled k-ary trees I(n,k), and the
// insertion bijection between them.

#include "hooklab/tree.hpp"

#include <compare>
#include <functional>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hooklab {

/// (C_0, ..., C_{n-1}) with C_i a length-i vector over {1..k}.
///
/// Rows are stored back to back; row i starts at offset i(i-1)/2. The
/// lexicographic order on the flattened components is the sweep order, and
/// the rank of an array is its position in that order.
class StaircaseArray {
 public:
  /// The lexicographically first array: every component is 1.
  StaircaseArray(int n, int k);

  /// Validates row lengths and component range; throws DomainError.
  static StaircaseArray from_rows(int k, const std::vector<std::vector<int>>& rows);
  static StaircaseArray from_rank(int n, int k, std::uint64_t rank);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  /// C_i.
  std::span<const int> row(int i) const;
  /// Entry `position` (1-based) of C_i.
  int component(int i, int position) const;
  std::vector<std::vector<int>> rows() const;
  std::span<const int> flat() const noexcept { return entries_; }

  /// Steps to the lexicographic successor. Returns false (and wraps to the
  /// first array) after the last one.
  bool advance();

  friend bool operator==(const StaircaseArray&, const StaircaseArray&) = default;
  friend std::strong_ordering operator<=>(const StaircaseArray&, const StaircaseArray&) = default;

 private:
  int n_;
  int k_;
  std::vector<int> entries_;
};

/// |S(n,k)| = k^(n(n-1)/2).
BigInt staircase_count(int n, int k);

/// Visits the arrays with ranks in [begin, end) in sweep order. Disjoint rank
/// ranges can be swept by different workers.
void for_each_staircase_array(int n, int k, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const StaircaseArray&)>& visit);

/// |S(n,k)| as a machine word; throws GuardExceeded when it exceeds the cap.
std::uint64_t checked_staircase_count(int n, int k, std::uint64_t guard_cap, std::string_view what);

/// A k-ary tree whose vertices carry the labels C_0..C_{n-1}.
/// `labels[v]` is the label of the vertex with preorder id v.
struct StaircaseLabeledTree {
  KAryTree tree;
  std::vector<std::vector<int>> labels;

  friend bool operator==(const StaircaseLabeledTree&, const StaircaseLabeledTree&) = default;
};

/// Shape with integer labels; `labels[v]` belongs to preorder id v.
struct IncreasingTree {
  KAryTree tree;
  std::vector<int> labels;

  friend bool operator==(const IncreasingTree&, const IncreasingTree&) = default;
};

enum class LabelingViolation {
  kLengthSet,            // lengths are not exactly {0, ..., n-1}
  kComponentRange,       // some entry outside {1..k}
  kPathLength,           // a child's label is not longer than its parent's
  kAncestorConsistency,  // an entry fixed by an ancestor's child slot differs
};

std::string_view to_string(LabelingViolation violation);

struct LabelingDiagnostic {
  LabelingViolation kind;
  VertexId vertex;
  std::string message;
};

/// First broken rule, or nullopt for a valid staircase labeling. Throws
/// DomainError when the label count differs from the vertex count.
std::optional<LabelingDiagnostic> find_labeling_violation(const StaircaseLabeledTree& labeled);
bool is_valid_labeling(const StaircaseLabeledTree& labeled);

/// Inserts v_1..v_{n-1} one at a time: from the root, at a vertex whose label
/// has length i read entry i+1 of C_m; take that child slot if empty,
/// otherwise descend into it.
StaircaseLabeledTree phi(const StaircaseArray& array);
/// Reads the labels back in order of length. Throws DomainError naming the
/// violated rule if the labeling is invalid.
StaircaseArray varphi(const StaircaseLabeledTree& labeled);

IncreasingTree underlying_increasing_tree(const StaircaseLabeledTree& labeled);
/// Root labeled 0, every child labeled above its parent, labels a permutation of 0..n-1.
bool is_increasing(const IncreasingTree& tree);

/// Number of staircase labelings of shape T:
/// (n! / prod h) * k^((1+...+n) - sum f).
BigInt count_labelings_for_shape(const KAryTree& tree);

}  // namespace hooklab
