#pragma once

// The halving chain S(2n+1,2) = M_0 > M_1 > ... > M_n over binary staircase
// arrays, whose last level is the set of arrays mapped onto complete binary
// trees.

#include "hooklab/staircase.hpp"

#include <vector>

namespace hooklab {

/// Largest L such that, for every j < L, the j-th internal vertex of phi(A)
/// (internal vertices ordered by label length) has two subtrees of odd size.
/// A is in M_j iff membership_level(A) >= j. Requires k = 2 and 2n+1 rows.
int membership_level(const StaircaseArray& array);

/// Odd number of 1's among the first entries of C_1..C_{2n}.
bool m1_parity_check(const StaircaseArray& array);

struct FiltrationReport {
  int n = 0;
  std::vector<BigInt> level_sizes;  // |M_0|, ..., |M_n|
  BigInt terminal_complete_count;   // arrays whose phi-image is complete
  bool halving_ok = false;          // 2 |M_{j+1}| = |M_j| for every j
  bool terminal_matches_complete = false;  // |M_n| == terminal_complete_count
  bool terminal_exact = false;      // per array: level n <=> complete image
  bool parity_agrees = false;       // per array: m1_parity_check <=> level >= 1
};

/// Sweeps all of S(2n+1, 2); refuses when 2^(n(2n+1)) exceeds the guard.
FiltrationReport compute_filtration(int n, const SweepOptions& options = {});

}  // namespace hooklab
