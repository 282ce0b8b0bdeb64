#pragma once

// Golden fixtures shared by the suites.

#include "hooklab/staircase.hpp"

namespace fixtures {

/// Root with a left child that has a left child, and a right child with two
/// children. Hooks {1,1,1,2,3,6}.
inline constexpr const char* kSixVertexCode = "(((--)-)((--)(--)))";

/// Ternary staircase labeling, labels listed in preorder.
inline hooklab::StaircaseLabeledTree ternary_labeling() {
  return {hooklab::decode("(((---)(---)-)(-(---)-)(--(---)))", 3),
          {{},
           {1},
           {1, 1},
           {1, 2, 1, 2, 2, 1, 3},
           {2, 1, 2},
           {2, 1, 1, 2, 2},
           {3, 1, 2, 1},
           {3, 2, 1, 2, 3, 2}}};
}

/// phi maps this array onto insertion_tree(), whose shape is kSixVertexCode.
inline hooklab::StaircaseArray insertion_array() {
  return hooklab::StaircaseArray::from_rows(2, {{}, {2}, {2, 1}, {1, 2, 2}, {1, 2, 2, 1}, {2, 2, 1, 1, 2}});
}

inline hooklab::StaircaseLabeledTree insertion_tree() {
  return {hooklab::decode(kSixVertexCode, 2), {{}, {1, 2, 2}, {1, 2, 2, 1}, {2}, {2, 1}, {2, 2, 1, 1, 2}}};
}

}  // namespace fixtures
