#include "mwrp/postprocess.hpp"

#include <algorithm>
#include <cassert>

namespace mwrp {

Bitset extract_responsibility(const Solution& solution, int agent,
                              const ProblemInstance& problem,
                              const VisibilityIndex& index) {
  const GridMap& map = *problem.map;
  Bitset r = problem.unseen ? *problem.unseen : map.full_cellset();
  Bitset seen(map.num_free());
  for (int k = 0; k < static_cast<int>(solution.paths.size()); ++k) {
    if (k == agent) continue;
    for (Cell s : solution.paths[k]) seen |= index.los[map.id_of(s)];
  }
  r.and_not(seen);
  return r;
}

Solution improve(const Solution& solution, const ProblemInstance& problem,
                 const VisibilityIndex& index, const SolverConfig& config) {
  const int num_agents = problem.num_agents();
  Solution cur = solution;
  std::vector<bool> optimized(num_agents, false);

  SolverConfig sub = SolverConfig::defaults_for(Algorithm::Cp3);
  sub.batch_size = config.batch_size;
  sub.pivot_cap = config.pivot_cap;
  sub.time_limit_s = config.time_limit_s;
  sub.parallel = config.parallel;

  while (true) {
    int a_max = 0;
    for (int k = 1; k < num_agents; ++k)
      if (cur.path_costs[k] > cur.path_costs[a_max]) a_max = k;
    if (optimized[a_max]) break;

    ProblemInstance subproblem;
    subproblem.map = problem.map;
    subproblem.starts = {problem.starts[a_max]};
    subproblem.unseen = extract_responsibility(cur, a_max, problem, index);

    Solution subsol = solve(subproblem, index, sub);
    if (!subsol.found) break;  // subproblem timeout: keep the best so far
    assert(subsol.makespan <= cur.path_costs[a_max]);
    if (subsol.makespan <= cur.path_costs[a_max]) {
      cur.paths[a_max] = subsol.paths[0];
      cur.path_costs[a_max] = subsol.makespan;
    }
    optimized[a_max] = true;
    cur.makespan =
        *std::max_element(cur.path_costs.begin(), cur.path_costs.end());
  }
  return cur;
}

}  // namespace mwrp
