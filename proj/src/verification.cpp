#include "hooklab/verification.hpp"

#include "hooklab/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace hooklab {

namespace {

void require_positive(int n, std::string_view what) {
  if (n < 1) throw DomainError(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

std::string call_name(std::string_view op, int n, int k) {
  return std::string(op) + "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

long long triangular(long long m) { return m * (m + 1) / 2; }

struct RationalPartial {
  Rational sum;
  std::uint64_t terms = 0;
  std::optional<PowerCache> powers;
};

struct IntegerPartial {
  BigInt sum;
  std::uint64_t terms = 0;
  std::optional<PowerCache> powers;
};

/// Folds every tree with n vertices into per-worker partials, one root
/// composition per work item.
template <class Partial, class Fold>
std::vector<Partial> sweep_trees(int n, int k, const SweepOptions& options, const std::string& what, Fold fold) {
  check_guard(count_trees(n, k), options.guard_cap, what);
  const TreeCatalog catalog(k, n - 1);
  const auto compositions = root_compositions(n, k);
  return detail::run_partitioned<Partial>(compositions.size(), options.jobs, [&](std::size_t part, Partial& partial) {
    for_each_tree_with_composition(catalog, compositions[part], [&](const KAryTree& t) { fold(t, partial); });
  });
}

VerificationReport finish(Formula formula, int n, int k, const std::vector<RationalPartial>& partials,
                          Rational expected) {
  VerificationReport report{std::string(formula_id(formula)), n, k, Rational(0), std::move(expected), BigInt(0), false};
  for (const auto& p : partials) {
    report.computed += p.sum;
    report.terms += p.terms;
  }
  report.verdict = report.computed == report.expected;
  return report;
}

VerificationReport finish(Formula formula, int n, int k, const std::vector<IntegerPartial>& partials,
                          const BigInt& expected) {
  VerificationReport report{std::string(formula_id(formula)), n, k, Rational(0), Rational(expected), BigInt(0), false};
  BigInt total = 0;
  for (const auto& p : partials) {
    total += p.sum;
    report.terms += p.terms;
  }
  report.computed = Rational(total);
  report.verdict = report.computed == report.expected;
  return report;
}

/// prod_{h} 1/(h k^(h-1)) over the given hooks.
Rational yang_term(const HookMultiset& hooks, PowerCache& powers) {
  const auto exponent = hooks.sum() - static_cast<long long>(hooks.size());
  return Rational(BigInt(1), hooks.product() * powers(static_cast<std::size_t>(exponent)));
}

/// (N!/prod h) * base^((1+..+N) - sum h); must be a nonnegative integer.
BigInt integer_term(const HookMultiset& hooks, const BigInt& size_factorial, PowerCache& powers) {
  const auto n = static_cast<long long>(hooks.size());
  const long long exponent = triangular(n) - hooks.sum();
  if (exponent < 0) throw InvariantViolation("hook sum exceeds 1+...+n");
  const BigInt product = hooks.product();
  if (size_factorial % product != 0) throw InvariantViolation("n! is not divisible by the hook product");
  return size_factorial / product * powers(static_cast<std::size_t>(exponent));
}

VerificationReport sum_yang(Formula formula, int n, int k, const SweepOptions& options) {
  require_positive(n, formula_id(formula));
  const auto partials = sweep_trees<RationalPartial>(
      n, k, options, call_name(formula_id(formula), n, k), [k](const KAryTree& t, RationalPartial& p) {
        if (!p.powers) p.powers.emplace(static_cast<unsigned>(k));
        p.sum += yang_term(hook_lengths(t), *p.powers);
        ++p.terms;
      });
  return finish(formula, n, k, partials, Rational(BigInt(1), factorial(static_cast<unsigned>(n))));
}

}  // namespace

std::string_view formula_id(Formula formula) {
  switch (formula) {
    case Formula::kYang:
      return "yang";
    case Formula::kYangInteger:
      return "yang-int";
    case Formula::kHan1:
      return "han1";
    case Formula::kHan2:
      return "han2";
    case Formula::kComplete:
      return "complete";
    case Formula::kCompleteInteger:
      return "complete-int";
  }
  return "unknown";
}

VerificationReport verify_yang(int n, int k, const SweepOptions& options) {
  return sum_yang(Formula::kYang, n, k, options);
}

VerificationReport verify_han1(int n, const SweepOptions& options) { return sum_yang(Formula::kHan1, n, 2, options); }

VerificationReport verify_yang_integer_form(int n, int k, const SweepOptions& options) {
  require_positive(n, "yang-int");
  const BigInt n_factorial = factorial(static_cast<unsigned>(n));
  const auto partials = sweep_trees<IntegerPartial>(
      n, k, options, call_name("yang-int", n, k), [&](const KAryTree& t, IntegerPartial& p) {
        if (!p.powers) p.powers.emplace(static_cast<unsigned>(k));
        p.sum += integer_term(hook_lengths(t), n_factorial, *p.powers);
        ++p.terms;
      });
  return finish(Formula::kYangInteger, n, k, partials, staircase_count(n, k));
}

VerificationReport verify_han2(int n, const SweepOptions& options) {
  require_positive(n, "han2");
  const auto partials = sweep_trees<RationalPartial>(
      n, 2, options, call_name("han2", n, 2), [](const KAryTree& t, RationalPartial& p) {
        if (!p.powers) p.powers.emplace(2U);
        const auto hooks = hook_lengths(t);
        BigInt odd_product = 1;
        for (int h : hooks.values()) odd_product *= 2 * h + 1;
        const auto exponent = 2 * hooks.sum() - static_cast<long long>(hooks.size());
        p.sum += Rational(BigInt(1), odd_product * (*p.powers)(static_cast<std::size_t>(exponent)));
        ++p.terms;
      });
  return finish(Formula::kHan2, n, 2, partials, Rational(BigInt(1), factorial(static_cast<unsigned>(2 * n + 1))));
}

VerificationReport verify_complete_form(int n, const SweepOptions& options) {
  require_positive(n, "complete");
  const auto partials = sweep_trees<RationalPartial>(
      n, 2, options, call_name("complete", n, 2), [](const KAryTree& t, RationalPartial& p) {
        if (!p.powers) p.powers.emplace(2U);
        p.sum += yang_term(hook_lengths(to_complete(t)), *p.powers);
        ++p.terms;
      });
  const BigInt denominator = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)) *
                             factorial(static_cast<unsigned>(2 * n + 1));
  return finish(Formula::kComplete, n, 2, partials, Rational(BigInt(1), denominator));
}

VerificationReport verify_complete_integer_form(int n, const SweepOptions& options) {
  require_positive(n, "complete-int");
  const BigInt size_factorial = factorial(static_cast<unsigned>(2 * n + 1));
  const auto partials = sweep_trees<IntegerPartial>(
      n, 2, options, call_name("complete-int", n, 2), [&](const KAryTree& t, IntegerPartial& p) {
        if (!p.powers) p.powers.emplace(2U);
        p.sum += integer_term(hook_lengths(to_complete(t)), size_factorial, *p.powers);
        ++p.terms;
      });
  // 2^(1+..+2n) / 2^n
  const BigInt expected = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(triangular(2 * n) - n));
  return finish(Formula::kCompleteInteger, n, 2, partials, expected);
}

VerificationReport verify(Formula formula, int n, int k, const SweepOptions& options) {
  switch (formula) {
    case Formula::kYang:
      return verify_yang(n, k, options);
    case Formula::kYangInteger:
      return verify_yang_integer_form(n, k, options);
    case Formula::kHan1:
      return verify_han1(n, options);
    case Formula::kHan2:
      return verify_han2(n, options);
    case Formula::kComplete:
      return verify_complete_form(n, options);
    case Formula::kCompleteInteger:
      return verify_complete_integer_form(n, options);
  }
  throw DomainError("unknown formula");
}

bool verify_hook_depth_identity(const KAryTree& tree) {
  const auto hooks = subtree_sizes(tree);
  const auto depth = depths(tree);
  return std::accumulate(hooks.begin(), hooks.end(), 0LL) == std::accumulate(depth.begin(), depth.end(), 0LL);
}

BigInt brute_force_increasing_count(const KAryTree& tree, std::uint64_t permutation_cap) {
  if (tree.empty()) throw DomainError("brute_force_increasing_count: empty tree");
  const auto n = tree.size();
  check_guard(factorial(static_cast<unsigned>(n)), permutation_cap, "brute_force_increasing_count");

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; static_cast<std::size_t>(v) < n; ++v)
    for (VertexId c : tree.slots(v))
      if (c != kNoVertex) edges.emplace_back(v, c);

  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::uint64_t count = 0;
  do {
    if (label[0] != 0) continue;
    if (std::all_of(edges.begin(), edges.end(), [&](auto e) { return label[e.first] < label[e.second]; })) ++count;
  } while (std::next_permutation(label.begin(), label.end()));
  return count;
}

ShapeCensus census_I(int n, int k, const SweepOptions& options) {
  const std::uint64_t total = checked_staircase_count(n, k, options.guard_cap, call_name("census", n, k));

  using Counts = std::map<std::string, std::uint64_t>;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::max(1U, options.jobs) * 16ULL);
  const auto partials = detail::run_partitioned<Counts>(chunks, options.jobs, [&](std::size_t chunk, Counts& counts) {
    const std::uint64_t begin = total * chunk / chunks;
    const std::uint64_t end = total * (chunk + 1) / chunks;
    for_each_staircase_array(n, k, begin, end, [&](const StaircaseArray& a) { ++counts[encode(phi(a).tree)]; });
  });

  ShapeCensus census;
  census.n = n;
  census.k = k;
  for (const auto& counts : partials)
    for (const auto& [code, count] : counts) {
      census.observed[code] += count;
      census.total += count;
    }
  for_each_tree(n, k, [&](const KAryTree& t) { census.predicted[encode(t)] = count_labelings_for_shape(t); },
                options);
  return census;
}

}  // namespace hooklab
