#pragma once

#include <utility>
#include <vector>

#include "mwrp/grid.hpp"
#include "mwrp/visibility.hpp"

namespace mwrp {

struct ReductionStats {
  int initial_size = 0;
  int after_cd = 0;
  int after_pd = 0;
  double cd_ms = 0.0;
  double pd_ms = 0.0;
};

// Cell dominance: scan s_i over the live set in row-major order and drop
// every other live s_j with watchers(s_i) ⊆ watchers(s_j); removals take
// effect immediately. Survivor identity depends on this scan order, makespan
// optimality does not.
Bitset cell_dominance(const Bitset& unseen, const VisibilityIndex& index);

// Path dominance: for each s_j in a row-major snapshot of the input, drop it
// when some other live s_i has no watcher reachable from the starts without
// entering watchers(s_j).
Bitset path_dominance(const Bitset& unseen, const std::vector<Cell>& starts,
                      const GridMap& map, const VisibilityIndex& index);

// CD followed by PD (either pass can be disabled), with sizes and timings.
std::pair<Bitset, ReductionStats> cpd(const Bitset& unseen,
                                      const std::vector<Cell>& starts,
                                      const GridMap& map,
                                      const VisibilityIndex& index,
                                      bool enable_cd = true,
                                      bool enable_pd = true);

}  // namespace mwrp
