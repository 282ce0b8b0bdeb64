#pragma once

#include "hooklab/staircase.hpp"

#include <vector>

namespace hooklab::detail {

/// Runs the insertion walk without relabeling. On return `slots[i*k + r-1]` is
/// the index of the r-th child of v_i (the vertex labeled C_i) or kNoVertex.
/// Every child index exceeds its parent's.
void insertion_table(const StaircaseArray& array, std::vector<VertexId>& slots);

}  // namespace hooklab::detail
