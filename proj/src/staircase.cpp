#include "hooklab/staircase.hpp"

#include "hooklab/errors.hpp"
#include "staircase_detail.hpp"

#include <algorithm>

namespace hooklab {

namespace {

std::size_t row_offset(int i) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2; }

void require_shape(int n, int k) {
  if (n < 1) throw DomainError("staircase array needs n >= 1");
  if (k < 1) throw DomainError("staircase array needs k >= 1");
}

std::string describe(const std::vector<int>& label) {
  std::string s = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(label[i]);
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// StaircaseArray

StaircaseArray::StaircaseArray(int n, int k) : n_(n), k_(k) {
  require_shape(n, k);
  entries_.assign(row_offset(n), 1);
}

StaircaseArray StaircaseArray::from_rows(int k, const std::vector<std::vector<int>>& rows) {
  StaircaseArray out(static_cast<int>(rows.size()), k);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i)
      throw DomainError("C_" + std::to_string(i) + " must have length " + std::to_string(i) + ", got " +
                        std::to_string(rows[i].size()));
    for (int c : rows[i])
      if (c < 1 || c > k)
        throw DomainError("C_" + std::to_string(i) + " has component " + std::to_string(c) + " outside 1.." +
                          std::to_string(k));
    std::copy(rows[i].begin(), rows[i].end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(row_offset(static_cast<int>(i))));
  }
  return out;
}

StaircaseArray StaircaseArray::from_rank(int n, int k, std::uint64_t rank) {
  StaircaseArray out(n, k);
  for (std::size_t p = out.entries_.size(); p-- > 0;) {
    out.entries_[p] = static_cast<int>(rank % static_cast<std::uint64_t>(k)) + 1;
    rank /= static_cast<std::uint64_t>(k);
  }
  if (rank != 0) throw DomainError("rank exceeds |S(n,k)|");
  return out;
}

std::span<const int> StaircaseArray::row(int i) const {
  if (i < 0 || i >= n_) throw DomainError("row index outside 0..n-1");
  return std::span<const int>(entries_).subspan(row_offset(i), static_cast<std::size_t>(i));
}

int StaircaseArray::component(int i, int position) const {
  if (position < 1 || position > i) throw DomainError("component position must be in 1..i");
  return row(i)[static_cast<std::size_t>(position - 1)];
}

std::vector<std::vector<int>> StaircaseArray::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool StaircaseArray::advance() {
  for (std::size_t p = entries_.size(); p-- > 0;) {
    if (entries_[p] < k_) {
      ++entries_[p];
      return true;
    }
    entries_[p] = 1;
  }
  return false;
}

BigInt staircase_count(int n, int k) {
  require_shape(n, k);
  return boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(row_offset(n)));
}

// ---------------------------------------------------------------------------
// Labelings

std::string_view to_string(LabelingViolation violation) {
  switch (violation) {
    case LabelingViolation::kLengthSet:
      return "length-set violation";
    case LabelingViolation::kComponentRange:
      return "component-range violation";
    case LabelingViolation::kPathLength:
      return "path-length violation";
    case LabelingViolation::kAncestorConsistency:
      return "ancestor-consistency violation";
  }
  return "unknown violation";
}

std::optional<LabelingDiagnostic> find_labeling_violation(const StaircaseLabeledTree& labeled) {
  const auto& tree = labeled.tree;
  const auto& labels = labeled.labels;
  const std::size_t n = tree.size();
  if (n == 0) throw DomainError("labeled tree is empty");
  if (labels.size() != n)
    throw DomainError("tree has " + std::to_string(n) + " vertices but " + std::to_string(labels.size()) + " labels");

  auto fail = [](LabelingViolation kind, VertexId v, std::string detail) {
    return LabelingDiagnostic{kind, v, std::string(to_string(kind)) + " at vertex " + std::to_string(v) + ": " + detail};
  };

  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const auto len = labels[v].size();
    if (len >= n || seen[len])
      return fail(LabelingViolation::kLengthSet, static_cast<VertexId>(v),
                  "label length " + std::to_string(len) + " is out of range or repeated");
    seen[len] = true;
  }
  const int k = tree.arity();
  for (std::size_t v = 0; v < n; ++v)
    for (int c : labels[v])
      if (c < 1 || c > k)
        return fail(LabelingViolation::kComponentRange, static_cast<VertexId>(v),
                    "label " + describe(labels[v]) + " has an entry outside 1.." + std::to_string(k));

  for (VertexId v = 0; static_cast<std::size_t>(v) < n; ++v)
    for (VertexId c : tree.slots(v))
      if (c != kNoVertex && labels[c].size() <= labels[v].size())
        return fail(LabelingViolation::kPathLength, c,
                    "label " + describe(labels[c]) + " is not longer than its parent's " + describe(labels[v]));

  // Subtree of c occupies preorder ids c .. c + size[c] - 1.
  const auto size = subtree_sizes(tree);
  for (VertexId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    const auto i = labels[u].size();
    const auto row = tree.slots(u);
    for (std::size_t r = 0; r < row.size(); ++r) {
      const VertexId c = row[r];
      if (c == kNoVertex) continue;
      for (VertexId w = c; w < c + size[c]; ++w)
        if (labels[w][i] != static_cast<int>(r + 1))
          return fail(LabelingViolation::kAncestorConsistency, w,
                      "entry " + std::to_string(i + 1) + " of " + describe(labels[w]) + " must be " +
                          std::to_string(r + 1) + " (child slot under vertex " + std::to_string(u) + ")");
    }
  }
  return std::nullopt;
}

bool is_valid_labeling(const StaircaseLabeledTree& labeled) { return !find_labeling_violation(labeled).has_value(); }

// ---------------------------------------------------------------------------
// The bijection

void detail::insertion_table(const StaircaseArray& array, std::vector<VertexId>& slots) {
  const int n = array.n();
  const auto k = static_cast<std::size_t>(array.k());
  slots.assign(static_cast<std::size_t>(n) * k, kNoVertex);
  const auto flat = array.flat();
  for (VertexId m = 1; m < n; ++m) {
    const int* label = flat.data() + row_offset(m);
    VertexId current = 0;  // v_current has label length `current`
    while (true) {
      if (current >= m) throw InvariantViolation("insertion walk did not terminate");
      const auto slot = static_cast<std::size_t>(current) * k + static_cast<std::size_t>(label[current] - 1);
      if (slots[slot] == kNoVertex) {
        slots[slot] = m;
        break;
      }
      current = slots[slot];
    }
  }
}

StaircaseLabeledTree phi(const StaircaseArray& array) {
  std::vector<VertexId> slots;
  detail::insertion_table(array, slots);
  std::vector<VertexId> preorder_of;
  StaircaseLabeledTree out{KAryTree::from_child_table(array.k(), slots, 0, &preorder_of), {}};
  out.labels.resize(static_cast<std::size_t>(array.n()));
  for (int i = 0; i < array.n(); ++i) {
    const auto r = array.row(i);
    out.labels[static_cast<std::size_t>(preorder_of[i])].assign(r.begin(), r.end());
  }
  return out;
}

StaircaseArray varphi(const StaircaseLabeledTree& labeled) {
  if (auto violation = find_labeling_violation(labeled)) throw DomainError(violation->message);
  std::vector<std::vector<int>> rows(labeled.labels.size());
  for (const auto& label : labeled.labels) rows[label.size()] = label;
  return StaircaseArray::from_rows(labeled.tree.arity(), rows);
}

IncreasingTree underlying_increasing_tree(const StaircaseLabeledTree& labeled) {
  if (auto violation = find_labeling_violation(labeled)) throw DomainError(violation->message);
  IncreasingTree out{labeled.tree, {}};
  out.labels.reserve(labeled.labels.size());
  for (const auto& label : labeled.labels) out.labels.push_back(static_cast<int>(label.size()));
  return out;
}

bool is_increasing(const IncreasingTree& increasing) {
  const auto& tree = increasing.tree;
  const auto& labels = increasing.labels;
  const std::size_t n = tree.size();
  if (n == 0 || labels.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int label : labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= n || seen[label]) return false;
    seen[label] = true;
  }
  if (labels[0] != 0) return false;
  for (VertexId v = 0; static_cast<std::size_t>(v) < n; ++v)
    for (VertexId c : tree.slots(v))
      if (c != kNoVertex && labels[c] <= labels[v]) return false;
  return true;
}

BigInt count_labelings_for_shape(const KAryTree& tree) {
  const auto hooks = hook_lengths(tree);
  const auto depth = depths(tree);
  const auto n = static_cast<long long>(tree.size());
  long long depth_sum = 0;
  for (int f : depth) depth_sum += f;
  const long long exponent = n * (n + 1) / 2 - depth_sum;
  if (exponent < 0) throw InvariantViolation("negative free-entry exponent");

  BigInt increasing = factorial(static_cast<unsigned>(n));
  const BigInt hook_product = hooks.product();
  if (increasing % hook_product != 0) throw InvariantViolation("n! not divisible by the hook product");
  increasing /= hook_product;
  return increasing * boost::multiprecision::pow(BigInt(tree.arity()), static_cast<unsigned>(exponent));
}

}  // namespace hooklab

namespace hooklab {

void for_each_staircase_array(int n, int k, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const StaircaseArray&)>& visit) {
  if (begin >= end) return;
  auto array = StaircaseArray::from_rank(n, k, begin);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    visit(array);
    array.advance();
  }
}

std::uint64_t checked_staircase_count(int n, int k, std::uint64_t guard_cap, std::string_view what) {
  const BigInt total = staircase_count(n, k);
  check_guard(total, guard_cap, what);
  return static_cast<std::uint64_t>(total);
}

}  // namespace hooklab
