#pragma once

#include "mwrp/search.hpp"

namespace mwrp {

// Minimum responsibility of `agent`: the unseen-set cells that no cell on any
// other agent's path has LOS to. Computed against the problem's original
// unseen set.
Bitset extract_responsibility(const Solution& solution, int agent,
                              const ProblemInstance& problem,
                              const VisibilityIndex& index);

// Iteratively re-solves the max-cost agent's single-agent subproblem (unseen
// set = its minimum responsibility) with the optimal solver and swaps in the
// new path when its cost does not exceed the old one. An agent is marked
// optimized after its re-solve; the loop stops once the current max-cost
// agent is already marked. Output makespan never exceeds the input makespan.
// A subproblem timeout returns the best solution so far.
Solution improve(const Solution& solution, const ProblemInstance& problem,
                 const VisibilityIndex& index, const SolverConfig& config);

}  // namespace mwrp
