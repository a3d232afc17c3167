#pragma once

#include <array>
#include <vector>

// Independently tabulated I-sets over the full K_4^3 for the two hand-built
// codes the q=4 constructions start from: the fifteen-word identifying code
// (construct_c1) and the twelve-word diagonal-avoiding code (construct_cl).
// Every one of the 64 vertices appears exactly once per table.

namespace golden {

struct ISetRow {
  std::array<int, 3> v;
  std::vector<std::array<int, 3>> covers;
};

inline const std::vector<ISetRow>& c1_isets() {
  static const std::vector<ISetRow> rows = {
      {{1, 1, 1}, {{3, 1, 1}, {1, 3, 1}}},
      {{2, 1, 1}, {{3, 1, 1}, {2, 1, 3}, {2, 1, 4}}},
      {{3, 1, 1}, {{3, 1, 1}}},
      {{4, 1, 1}, {{3, 1, 1}, {4, 4, 1}, {4, 1, 2}}},
      {{1, 2, 1}, {{1, 3, 1}, {1, 2, 2}, {1, 2, 4}}},
      {{2, 2, 1}, {{2, 2, 4}}},
      {{3, 2, 1}, {{3, 1, 1}, {3, 2, 2}}},
      {{4, 2, 1}, {{4, 4, 1}}},
      {{1, 3, 1}, {{1, 3, 1}}},
      {{2, 3, 1}, {{1, 3, 1}, {2, 3, 2}}},
      {{3, 3, 1}, {{1, 3, 1}, {3, 3, 3}, {3, 1, 1}}},
      {{4, 3, 1}, {{1, 3, 1}, {4, 3, 3}, {4, 4, 1}}},
      {{1, 4, 1}, {{1, 3, 1}, {4, 4, 1}}},
      {{2, 4, 1}, {{2, 4, 4}, {4, 4, 1}}},
      {{3, 4, 1}, {{3, 1, 1}, {4, 4, 1}}},
      {{4, 4, 1}, {{4, 4, 1}, {4, 4, 3}}},
      {{1, 1, 2}, {{1, 2, 2}, {4, 1, 2}}},
      {{2, 1, 2}, {{2, 1, 3}, {2, 1, 4}, {2, 3, 2}, {4, 1, 2}}},
      {{3, 1, 2}, {{3, 1, 1}, {3, 2, 2}, {4, 1, 2}}},
      {{4, 1, 2}, {{4, 1, 2}}},
      {{1, 2, 2}, {{1, 2, 2}, {1, 2, 4}, {3, 2, 2}}},
      {{2, 2, 2}, {{1, 2, 2}, {2, 2, 4}, {2, 3, 2}, {3, 2, 2}}},
      {{3, 2, 2}, {{1, 2, 2}, {3, 2, 2}}},
      {{4, 2, 2}, {{1, 2, 2}, {3, 2, 2}, {4, 1, 2}}},
      {{1, 3, 2}, {{1, 2, 2}, {1, 3, 1}, {2, 3, 2}}},
      {{2, 3, 2}, {{2, 3, 2}}},
      {{3, 3, 2}, {{2, 3, 2}, {3, 2, 2}, {3, 3, 3}}},
      {{4, 3, 2}, {{2, 3, 2}, {4, 1, 2}, {4, 3, 3}}},
      {{1, 4, 2}, {{1, 2, 2}}},
      {{2, 4, 2}, {{2, 3, 2}, {2, 4, 4}}},
      {{3, 4, 2}, {{3, 2, 2}}},
      {{4, 4, 2}, {{4, 1, 2}, {4, 4, 1}, {4, 4, 3}}},
      {{1, 1, 3}, {{2, 1, 3}}},
      {{2, 1, 3}, {{2, 1, 3}, {2, 1, 4}}},
      {{3, 1, 3}, {{2, 1, 3}, {3, 1, 1}, {3, 3, 3}}},
      {{4, 1, 3}, {{2, 1, 3}, {4, 1, 2}, {4, 3, 3}, {4, 4, 3}}},
      {{1, 2, 3}, {{1, 2, 2}, {1, 2, 4}}},
      {{2, 2, 3}, {{2, 1, 3}, {2, 2, 4}}},
      {{3, 2, 3}, {{3, 2, 2}, {3, 3, 3}}},
      {{4, 2, 3}, {{4, 3, 3}, {4, 4, 3}}},
      {{1, 3, 3}, {{1, 3, 1}, {3, 3, 3}, {4, 3, 3}}},
      {{2, 3, 3}, {{2, 1, 3}, {2, 3, 2}, {3, 3, 3}, {4, 3, 3}}},
      {{3, 3, 3}, {{3, 3, 3}, {4, 3, 3}}},
      {{4, 3, 3}, {{3, 3, 3}, {4, 3, 3}, {4, 4, 3}}},
      {{1, 4, 3}, {{4, 4, 3}}},
      {{2, 4, 3}, {{2, 1, 3}, {2, 4, 4}, {4, 4, 3}}},
      {{3, 4, 3}, {{3, 3, 3}, {4, 4, 3}}},
      {{4, 4, 3}, {{4, 3, 3}, {4, 4, 1}, {4, 4, 3}}},
      {{1, 1, 4}, {{1, 2, 4}, {2, 1, 4}}},
      {{2, 1, 4}, {{2, 1, 3}, {2, 1, 4}, {2, 2, 4}, {2, 4, 4}}},
      {{3, 1, 4}, {{2, 1, 4}, {3, 1, 1}}},
      {{4, 1, 4}, {{2, 1, 4}, {4, 1, 2}}},
      {{1, 2, 4}, {{1, 2, 2}, {1, 2, 4}, {2, 2, 4}}},
      {{2, 2, 4}, {{1, 2, 4}, {2, 1, 4}, {2, 2, 4}, {2, 4, 4}}},
      {{3, 2, 4}, {{1, 2, 4}, {2, 2, 4}, {3, 2, 2}}},
      {{4, 2, 4}, {{1, 2, 4}, {2, 2, 4}}},
      {{1, 3, 4}, {{1, 2, 4}, {1, 3, 1}}},
      {{2, 3, 4}, {{2, 1, 4}, {2, 2, 4}, {2, 3, 2}, {2, 4, 4}}},
      {{3, 3, 4}, {{3, 3, 3}}},
      {{4, 3, 4}, {{4, 3, 3}}},
      {{1, 4, 4}, {{1, 2, 4}, {2, 4, 4}}},
      {{2, 4, 4}, {{2, 1, 4}, {2, 2, 4}, {2, 4, 4}}},
      {{3, 4, 4}, {{2, 4, 4}}},
      {{4, 4, 4}, {{2, 4, 4}, {4, 4, 1}, {4, 4, 3}}},
  };
  return rows;
}

inline const std::vector<ISetRow>& cl_isets() {
  static const std::vector<ISetRow> rows = {
      {{1, 1, 1}, {}},
      {{2, 1, 1}, {{2, 1, 3}, {2, 4, 1}}},
      {{3, 1, 1}, {{3, 1, 4}, {3, 2, 1}}},
      {{4, 1, 1}, {{4, 1, 2}, {4, 3, 1}}},
      {{1, 2, 1}, {{1, 2, 4}, {3, 2, 1}}},
      {{2, 2, 1}, {{2, 4, 1}, {3, 2, 1}}},
      {{3, 2, 1}, {{3, 2, 1}}},
      {{4, 2, 1}, {{3, 2, 1}, {4, 2, 3}, {4, 3, 1}}},
      {{1, 3, 1}, {{1, 3, 2}, {4, 3, 1}}},
      {{2, 3, 1}, {{2, 3, 4}, {2, 4, 1}, {4, 3, 1}}},
      {{3, 3, 1}, {{3, 2, 1}, {4, 3, 1}}},
      {{4, 3, 1}, {{4, 3, 1}}},
      {{1, 4, 1}, {{1, 4, 3}, {2, 4, 1}}},
      {{2, 4, 1}, {{2, 4, 1}}},
      {{3, 4, 1}, {{2, 4, 1}, {3, 2, 1}, {3, 4, 2}}},
      {{4, 4, 1}, {{2, 4, 1}, {4, 3, 1}}},
      {{1, 1, 2}, {{1, 3, 2}, {4, 1, 2}}},
      {{2, 1, 2}, {{2, 1, 3}, {4, 1, 2}}},
      {{3, 1, 2}, {{3, 1, 4}, {3, 4, 2}, {4, 1, 2}}},
      {{4, 1, 2}, {{4, 1, 2}}},
      {{1, 2, 2}, {{1, 2, 4}, {1, 3, 2}}},
      {{2, 2, 2}, {}},
      {{3, 2, 2}, {{3, 2, 1}, {3, 4, 2}}},
      {{4, 2, 2}, {{4, 1, 2}, {4, 2, 3}}},
      {{1, 3, 2}, {{1, 3, 2}}},
      {{2, 3, 2}, {{1, 3, 2}, {2, 3, 4}}},
      {{3, 3, 2}, {{1, 3, 2}, {3, 4, 2}}},
      {{4, 3, 2}, {{1, 3, 2}, {4, 1, 2}, {4, 3, 1}}},
      {{1, 4, 2}, {{1, 3, 2}, {1, 4, 3}, {3, 4, 2}}},
      {{2, 4, 2}, {{2, 4, 1}, {3, 4, 2}}},
      {{3, 4, 2}, {{3, 4, 2}}},
      {{4, 4, 2}, {{3, 4, 2}, {4, 1, 2}}},
      {{1, 1, 3}, {{1, 4, 3}, {2, 1, 3}}},
      {{2, 1, 3}, {{2, 1, 3}}},
      {{3, 1, 3}, {{2, 1, 3}, {3, 1, 4}}},
      {{4, 1, 3}, {{2, 1, 3}, {4, 1, 2}, {4, 2, 3}}},
      {{1, 2, 3}, {{1, 2, 4}, {1, 4, 3}, {4, 2, 3}}},
      {{2, 2, 3}, {{2, 1, 3}, {4, 2, 3}}},
      {{3, 2, 3}, {{3, 2, 1}, {4, 2, 3}}},
      {{4, 2, 3}, {{4, 2, 3}}},
      {{1, 3, 3}, {{1, 3, 2}, {1, 4, 3}}},
      {{2, 3, 3}, {{2, 1, 3}, {2, 3, 4}}},
      {{3, 3, 3}, {}},
      {{4, 3, 3}, {{4, 2, 3}, {4, 3, 1}}},
      {{1, 4, 3}, {{1, 4, 3}}},
      {{2, 4, 3}, {{1, 4, 3}, {2, 1, 3}, {2, 4, 1}}},
      {{3, 4, 3}, {{1, 4, 3}, {3, 4, 2}}},
      {{4, 4, 3}, {{1, 4, 3}, {4, 2, 3}}},
      {{1, 1, 4}, {{1, 2, 4}, {3, 1, 4}}},
      {{2, 1, 4}, {{2, 1, 3}, {2, 3, 4}, {3, 1, 4}}},
      {{3, 1, 4}, {{3, 1, 4}}},
      {{4, 1, 4}, {{3, 1, 4}, {4, 1, 2}}},
      {{1, 2, 4}, {{1, 2, 4}}},
      {{2, 2, 4}, {{1, 2, 4}, {2, 3, 4}}},
      {{3, 2, 4}, {{1, 2, 4}, {3, 1, 4}, {3, 2, 1}}},
      {{4, 2, 4}, {{1, 2, 4}, {4, 2, 3}}},
      {{1, 3, 4}, {{1, 2, 4}, {1, 3, 2}, {2, 3, 4}}},
      {{2, 3, 4}, {{2, 3, 4}}},
      {{3, 3, 4}, {{2, 3, 4}, {3, 1, 4}}},
      {{4, 3, 4}, {{2, 3, 4}, {4, 3, 1}}},
      {{1, 4, 4}, {{1, 2, 4}, {1, 4, 3}}},
      {{2, 4, 4}, {{2, 3, 4}, {2, 4, 1}}},
      {{3, 4, 4}, {{3, 1, 4}, {3, 4, 2}}},
      {{4, 4, 4}, {}},
  };
  return rows;
}

}  // namespace golden
