#pragma once

// Test-only oracles, implemented independently of the solver code paths they
// check. The makespan oracle runs a joint-space uniform-cost search over
// single-step moves (no watcher jumps, no dominance, no heuristics) with LOS
// recomputed by the verifier's rasterizer.

#include <optional>
#include <string>
#include <vector>

#include "mwrp/grid.hpp"
#include "mwrp/heuristics.hpp"

namespace mwrp::testing {

// Exact optimal makespan by breadth-first layers over joint states
// (move-or-park per agent each tick). Returns nullopt if the state budget is
// exhausted. Requires <= 64 free cells.
std::optional<int> oracle_makespan(const GridMap& map,
                                   const std::vector<Cell>& starts,
                                   size_t max_states = 4'000'000);

// Exhaustive minimax mTSP: every pivot-to-agent assignment, every visit
// order.
int64_t brute_mtsp(const GdlsGraph& g, Weight w = {});

GridMap map_from_ascii(const std::vector<std::string>& rows);

struct OracleInstance {
  GridMap map;
  std::vector<Cell> starts;
  int optimal = 0;
};

// Deterministic mix of small random/maze maps (<= 30 free cells) with border
// starts and oracle-computed optima; used by several acceptance criteria.
std::vector<OracleInstance> build_oracle_suite(int count, uint64_t seed0 = 1);

}  // namespace mwrp::testing
