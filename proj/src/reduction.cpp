#include "mwrp/reduction.hpp"

#include <algorithm>
#include <chrono>

namespace mwrp {

Bitset cell_dominance(const Bitset& unseen, const VisibilityIndex& index) {
  Bitset live = unseen;
  std::vector<int> members = unseen.to_indices();
  for (int si : members) {
    if (!live.test(si)) continue;
    const Bitset& wi = index.watchers[si];
    for (int sj : members) {
      if (sj == si || !live.test(sj)) continue;
      if (wi.is_subset_of(index.watchers[sj])) live.reset(sj);
    }
  }
  return live;
}

Bitset path_dominance(const Bitset& unseen, const std::vector<Cell>& starts,
                      const GridMap& map, const VisibilityIndex& index) {
  Bitset live = unseen;
  const Bitset all = map.full_cellset();
  // The snapshot is scanned in descending row-major order. Cells with equal
  // watcher sets prune each other in both passes, and the scan direction
  // picks the survivor: descending keeps the lowest cell of each group, the
  // same one cell dominance keeps, so the set pruned here always contains
  // the set pruned by cell dominance.
  std::vector<int> snapshot = unseen.to_indices();
  std::reverse(snapshot.begin(), snapshot.end());
  for (int sj : snapshot) {
    Bitset allowed = all;
    allowed.and_not(index.watchers[sj]);
    Bitset reached = subgraph_bfs(map, starts, allowed);
    bool dominated = false;
    live.for_each([&](int si) {
      if (dominated || si == sj) return;
      if (!index.watchers[si].intersects(reached)) dominated = true;
    });
    if (dominated) live.reset(sj);
  }
  return live;
}

std::pair<Bitset, ReductionStats> cpd(const Bitset& unseen,
                                      const std::vector<Cell>& starts,
                                      const GridMap& map,
                                      const VisibilityIndex& index,
                                      bool enable_cd, bool enable_pd) {
  using clock = std::chrono::steady_clock;
  ReductionStats stats;
  stats.initial_size = unseen.count();

  Bitset cur = unseen;
  if (enable_cd) {
    auto t0 = clock::now();
    cur = cell_dominance(cur, index);
    stats.cd_ms = std::chrono::duration<double, std::milli>(clock::now() - t0)
                      .count();
  }
  stats.after_cd = cur.count();

  if (enable_pd) {
    auto t0 = clock::now();
    cur = path_dominance(cur, starts, map, index);
    stats.pd_ms = std::chrono::duration<double, std::milli>(clock::now() - t0)
                      .count();
  }
  stats.after_pd = cur.count();
  return {std::move(cur), stats};
}

}  // namespace mwrp
