#pragma once

#include <utility>
#include <vector>

#include "mwrp/bitset.hpp"
#include "mwrp/grid.hpp"

namespace mwrp {

// Result of the independent solution check: full coverage of the free cells,
// four-way step validity, and start correctness.
struct CoverageReport {
  bool valid = false;
  std::vector<Cell> uncovered;
  // (agent, step index): path[index] -> path[index + 1] is not a legal move.
  std::vector<std::pair<int, int>> path_violations;
  std::vector<int> start_mismatches;
};

// LOS recomputed from scratch by the verifier's own rasterizer. This module
// deliberately shares no line-walk or adjacency code with the solver, so its
// agreement with solver output is meaningful evidence.
bool verify_los(const GridMap& map, Cell from, Cell to);

// All free cells visible from `from`, as bits over free-cell ids.
Bitset observed_from(const GridMap& map, Cell from);

CoverageReport verify_solution(const GridMap& map,
                               const std::vector<Cell>& starts,
                               const std::vector<std::vector<Cell>>& paths);

}  // namespace mwrp
