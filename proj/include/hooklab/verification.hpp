#pragma once

// Exact checkers for the hook length identities over k-ary and binary trees.
// Every comparison is between normalized rationals or big integers.

#include "hooklab/staircase.hpp"
#include "hooklab/tree.hpp"

#include <map>
#include <string>
#include <string_view>

namespace hooklab {

enum class Formula {
  kYang,             // sum_T prod 1/(h k^(h-1)) = 1/n!
  kYangInteger,      // sum_T (n!/prod h) k^((1+..+n) - sum h) = k^(1+..+(n-1))
  kHan1,             // binary case of kYang
  kHan2,             // sum_{B_n} prod 1/((2h+1) 2^(2h-1)) = 1/(2n+1)!
  kComplete,         // over complete binary trees: sum prod 1/(h 2^(h-1)) = 1/(2^n (2n+1)!)
  kCompleteInteger,  // integer form of kComplete
};

std::string_view formula_id(Formula formula);

struct VerificationReport {
  std::string formula;
  int n = 0;
  int k = 0;
  Rational computed;
  Rational expected;
  BigInt terms;
  bool verdict = false;
};

VerificationReport verify_yang(int n, int k, const SweepOptions& options = {});
VerificationReport verify_han1(int n, const SweepOptions& options = {});
/// Throws InvariantViolation if any summand fails to be a nonnegative integer.
VerificationReport verify_yang_integer_form(int n, int k, const SweepOptions& options = {});
VerificationReport verify_han2(int n, const SweepOptions& options = {});
/// Sums over the complete binary trees with 2n+1 vertices, reached as
/// to_complete images of the binary trees with n vertices.
VerificationReport verify_complete_form(int n, const SweepOptions& options = {});
VerificationReport verify_complete_integer_form(int n, const SweepOptions& options = {});

VerificationReport verify(Formula formula, int n, int k, const SweepOptions& options = {});

/// sum h_u == sum f_u.
bool verify_hook_depth_identity(const KAryTree& tree);

inline constexpr std::uint64_t kDefaultPermutationCap = 3'628'800;  // 10!

/// Tries all n! assignments of 0..n-1 to the vertices and counts those with
/// the root at 0 and every child above its parent.
BigInt brute_force_increasing_count(const KAryTree& tree, std::uint64_t permutation_cap = kDefaultPermutationCap);

/// phi applied to all of S(n,k), grouped by shape, next to the per-shape
/// labeling counts predicted by count_labelings_for_shape.
struct ShapeCensus {
  int n = 0;
  int k = 0;
  std::map<std::string, BigInt> observed;   // keyed by TreeCode
  std::map<std::string, BigInt> predicted;  // every shape with n vertices
  BigInt total;                             // sum of observed

  bool shapes_match() const { return observed == predicted; }
  bool total_matches() const { return total == staircase_count(n, k); }
};

ShapeCensus census_I(int n, int k, const SweepOptions& options = {});

}  // namespace hooklab
