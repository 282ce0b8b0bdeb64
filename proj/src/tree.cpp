#include "hooklab/tree.hpp"

#include "hooklab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hooklab {

namespace {

void require_arity(int arity) {
  if (arity < 1) throw DomainError("arity must be >= 1, got " + std::to_string(arity));
}

void require_nonempty(const KAryTree& tree, std::string_view op) {
  if (tree.empty()) throw DomainError(std::string(op) + ": empty tree");
}

}  // namespace

void check_guard(const BigInt& estimate, std::uint64_t cap, std::string_view what) {
  if (estimate > cap) throw GuardExceeded(std::string(what), estimate.str(), cap);
}

// ---------------------------------------------------------------------------
// KAryTree

KAryTree::KAryTree(int arity) : arity_(arity) { require_arity(arity); }

KAryTree KAryTree::leaf(int arity) {
  require_arity(arity);
  return KAryTree(arity, std::vector<VertexId>(static_cast<std::size_t>(arity), kNoVertex));
}

KAryTree KAryTree::node(std::span<const KAryTree> children) {
  const int arity = static_cast<int>(children.size());
  require_arity(arity);
  std::size_t total = 1;
  for (const auto& c : children) {
    if (c.arity() != arity) throw DomainError("child arity does not match slot count");
    total += c.size();
  }
  std::vector<VertexId> slots;
  slots.reserve(total * static_cast<std::size_t>(arity));
  VertexId offset = 1;
  for (const auto& c : children) {
    slots.push_back(c.empty() ? kNoVertex : offset);
    offset += static_cast<VertexId>(c.size());
  }
  offset = 1;
  for (const auto& c : children) {
    for (VertexId s : c.slots_) slots.push_back(s == kNoVertex ? kNoVertex : s + offset);
    offset += static_cast<VertexId>(c.size());
  }
  return KAryTree(arity, std::move(slots));
}

KAryTree KAryTree::from_child_table(int arity, std::span<const VertexId> table, VertexId root,
                                    std::vector<VertexId>* preorder_of) {
  require_arity(arity);
  const auto k = static_cast<std::size_t>(arity);
  if (table.size() % k != 0) throw DomainError("child table size is not a multiple of the arity");
  const auto n = static_cast<VertexId>(table.size() / k);
  std::vector<VertexId> order(static_cast<std::size_t>(n), kNoVertex);
  if (root == kNoVertex) {
    if (preorder_of) *preorder_of = std::move(order);
    return KAryTree(arity);
  }
  if (root < 0 || root >= n) throw DomainError("root outside child table");

  std::vector<VertexId> visit;  // preorder list of table indices
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (order[v] != kNoVertex) throw DomainError("child table is not a tree");
    order[v] = static_cast<VertexId>(visit.size());
    visit.push_back(v);
    for (std::size_t r = k; r-- > 0;) {
      const VertexId c = table[static_cast<std::size_t>(v) * k + r];
      if (c == kNoVertex) continue;
      if (c < 0 || c >= n) throw DomainError("child index outside child table");
      stack.push_back(c);
    }
  }

  std::vector<VertexId> slots;
  slots.reserve(visit.size() * k);
  for (VertexId v : visit)
    for (std::size_t r = 0; r < k; ++r) {
      const VertexId c = table[static_cast<std::size_t>(v) * k + r];
      slots.push_back(c == kNoVertex ? kNoVertex : order[c]);
    }
  if (preorder_of) *preorder_of = std::move(order);
  return KAryTree(arity, std::move(slots));
}

VertexId KAryTree::child(VertexId v, int slot) const {
  if (slot < 1 || slot > arity_) throw DomainError("child slot must be in 1..k");
  return slots(v)[static_cast<std::size_t>(slot - 1)];
}

std::span<const VertexId> KAryTree::slots(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= size()) throw DomainError("vertex id out of range");
  return std::span<const VertexId>(slots_).subspan(static_cast<std::size_t>(v) * arity_, arity_);
}

std::size_t KAryTree::child_count(VertexId v) const {
  const auto row = slots(v);
  return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](VertexId c) { return c != kNoVertex; }));
}

KAryTree KAryTree::subtree(VertexId v) const {
  // Preorder ids of a subtree are contiguous: v .. v + h_v - 1.
  return from_child_table(arity_, slots_, v);
}

// ---------------------------------------------------------------------------
// Statistics

HookMultiset::HookMultiset(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

long long HookMultiset::sum() const { return std::accumulate(values_.begin(), values_.end(), 0LL); }

BigInt HookMultiset::product() const {
  BigInt p = 1;
  for (int h : values_) p *= h;
  return p;
}

std::size_t vertex_count(const KAryTree& tree) { return tree.size(); }

std::vector<int> subtree_sizes(const KAryTree& tree) {
  require_nonempty(tree, "hook_lengths");
  const auto n = static_cast<VertexId>(tree.size());
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  // Children have larger preorder ids than their parent.
  for (VertexId v = n - 1; v >= 0; --v)
    for (VertexId c : tree.slots(v))
      if (c != kNoVertex) size[v] += size[c];
  return size;
}

HookMultiset hook_lengths(const KAryTree& tree) { return HookMultiset(subtree_sizes(tree)); }

DepthMap depths(const KAryTree& tree) {
  require_nonempty(tree, "depths");
  DepthMap depth(tree.size(), 0);
  depth[0] = 1;
  for (VertexId v = 0; static_cast<std::size_t>(v) < tree.size(); ++v)
    for (VertexId c : tree.slots(v))
      if (c != kNoVertex) depth[c] = depth[v] + 1;
  return depth;
}

// ---------------------------------------------------------------------------
// Enumeration

BigInt count_trees(int n, int k) {
  require_arity(k);
  if (n < 0) throw DomainError("tree size must be >= 0");
  std::vector<BigInt> count{BigInt(1)};
  for (int m = 1; m <= n; ++m) {
    // [x^(m-1)] C(x)^k using the counts of sizes 0..m-1.
    std::vector<BigInt> power(static_cast<std::size_t>(m), BigInt(0));
    power[0] = 1;
    for (int f = 0; f < k; ++f) {
      std::vector<BigInt> next(static_cast<std::size_t>(m), BigInt(0));
      for (int i = 0; i < m; ++i) {
        if (power[i] == 0) continue;
        for (int j = 0; i + j < m; ++j) next[i + j] += power[i] * count[j];
      }
      power = std::move(next);
    }
    count.push_back(power[static_cast<std::size_t>(m - 1)]);
  }
  return count[static_cast<std::size_t>(n)];
}

std::vector<std::vector<int>> root_compositions(int n, int k) {
  require_arity(k);
  if (n < 1) throw DomainError("root compositions need n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  auto fill = [&](auto&& self, int index, int remaining) -> void {
    if (index == k - 1) {
      parts[index] = remaining;
      out.push_back(parts);
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      parts[index] = p;
      self(self, index + 1, remaining - p);
    }
  };
  fill(fill, 0, n - 1);
  return out;
}

TreeCatalog::TreeCatalog(int arity, int max_size) : arity_(arity) {
  require_arity(arity);
  if (max_size < 0) throw DomainError("catalog size must be >= 0");
  by_size_.push_back({KAryTree(arity)});
  for (int m = 1; m <= max_size; ++m) {
    std::vector<KAryTree> trees;
    for (const auto& comp : root_compositions(m, arity))
      for_each_tree_with_composition(*this, comp, [&](const KAryTree& t) { trees.push_back(t); });
    by_size_.push_back(std::move(trees));
  }
}

const std::vector<KAryTree>& TreeCatalog::of_size(int size) const {
  if (size < 0 || size > max_size()) throw DomainError("tree catalog does not cover size " + std::to_string(size));
  return by_size_[static_cast<std::size_t>(size)];
}

void for_each_tree_with_composition(const TreeCatalog& catalog, std::span<const int> composition,
                                    const TreeVisitor& visit) {
  const auto k = composition.size();
  if (static_cast<int>(k) != catalog.arity()) throw DomainError("composition length must equal the arity");
  std::vector<const std::vector<KAryTree>*> lists;
  for (int part : composition) lists.push_back(&catalog.of_size(part));

  std::vector<std::size_t> index(k, 0);
  std::vector<KAryTree> children;
  children.reserve(k);
  while (true) {
    children.clear();
    for (std::size_t s = 0; s < k; ++s) children.push_back((*lists[s])[index[s]]);
    visit(KAryTree::node(children));
    // Last slot varies fastest.
    std::size_t s = k;
    while (s > 0) {
      --s;
      if (++index[s] < lists[s]->size()) break;
      index[s] = 0;
      if (s == 0) return;
    }
  }
}

void for_each_tree(int n, int k, const TreeVisitor& visit, const SweepOptions& options) {
  require_arity(k);
  if (n < 0) throw DomainError("tree size must be >= 0");
  check_guard(count_trees(n, k), options.guard_cap, "enumerate_trees(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  if (n == 0) {
    visit(KAryTree(k));
    return;
  }
  const TreeCatalog catalog(k, n - 1);
  for (const auto& comp : root_compositions(n, k)) for_each_tree_with_composition(catalog, comp, visit);
}

std::vector<KAryTree> enumerate_trees(int n, int k, const SweepOptions& options) {
  std::vector<KAryTree> out;
  for_each_tree(n, k, [&](const KAryTree& t) { out.push_back(t); }, options);
  return out;
}

// ---------------------------------------------------------------------------
// Complete trees

bool is_complete(const KAryTree& tree) {
  require_nonempty(tree, "is_complete");
  for (VertexId v = 0; static_cast<std::size_t>(v) < tree.size(); ++v) {
    const auto c = tree.child_count(v);
    if (c != 0 && c != static_cast<std::size_t>(tree.arity())) return false;
  }
  return true;
}

KAryTree to_complete(const KAryTree& tree) {
  if (tree.arity() != 2) throw DomainError("to_complete requires a binary tree");
  require_nonempty(tree, "to_complete");
  std::vector<VertexId> slots;
  slots.reserve((2 * tree.size() + 1) * 2);
  auto emit = [&](auto&& self, VertexId v) -> VertexId {
    const auto id = static_cast<VertexId>(slots.size() / 2);
    slots.push_back(kNoVertex);
    slots.push_back(kNoVertex);
    if (v == kNoVertex) return id;  // new leaf
    for (std::size_t r = 0; r < 2; ++r) {
      const VertexId c = self(self, tree.slots(v)[r]);
      slots[static_cast<std::size_t>(id) * 2 + r] = c;
    }
    return id;
  };
  emit(emit, 0);
  return KAryTree::from_child_table(2, slots, 0);
}

// ---------------------------------------------------------------------------
// TreeCode

std::string encode(const KAryTree& tree) {
  std::string out;
  out.reserve(2 * tree.size() + tree.size() * static_cast<std::size_t>(tree.arity()));
  auto emit = [&](auto&& self, VertexId v) -> void {
    if (v == kNoVertex) {
      out.push_back('-');
      return;
    }
    out.push_back('(');
    for (VertexId c : tree.slots(v)) self(self, c);
    out.push_back(')');
  };
  emit(emit, tree.root());
  return out;
}

KAryTree decode(std::string_view code, int arity) {
  require_arity(arity);
  const auto k = static_cast<std::size_t>(arity);
  std::vector<VertexId> slots;
  std::size_t pos = 0;

  auto parse = [&](auto&& self) -> VertexId {
    if (pos >= code.size()) throw ParseError("unexpected end of tree code", pos);
    if (code[pos] == '-') {
      ++pos;
      return kNoVertex;
    }
    if (code[pos] != '(') throw ParseError(std::string("unexpected character '") + code[pos] + "'", pos);
    ++pos;
    const auto id = static_cast<VertexId>(slots.size() / k);
    slots.resize(slots.size() + k, kNoVertex);
    for (std::size_t r = 0; r < k; ++r) {
      const VertexId c = self(self);
      slots[static_cast<std::size_t>(id) * k + r] = c;
    }
    if (pos >= code.size()) throw ParseError("unexpected end of tree code, expected ')'", pos);
    if (code[pos] != ')')
      throw ParseError(std::string("expected ')' after ") + std::to_string(k) + " child slots, found '" + code[pos] + "'", pos);
    ++pos;
    return id;
  };

  const VertexId root = parse(parse);
  if (pos != code.size()) throw ParseError("trailing characters after tree code", pos);
  if (root == kNoVertex) return KAryTree(arity);
  return KAryTree::from_child_table(arity, slots, root);
}

}  // namespace hooklab
