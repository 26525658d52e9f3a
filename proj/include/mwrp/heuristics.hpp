#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mwrp/bitset.hpp"
#include "mwrp/grid.hpp"
#include "mwrp/visibility.hpp"

namespace mwrp {

// Suboptimality weight w = num/den >= 1, kept exact so weighted priorities
// never suffer floating-point ties. All weighted f-values are integers scaled
// by den.
struct Weight {
  int64_t num = 1;
  int64_t den = 1;

  bool is_one() const { return num == den; }
  // Accepts "2", "3/2", and decimals like "1.5" (converted exactly).
  static Weight parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

// f_MxW = max_k (g_k + w*h_k), returned scaled by w.den.
inline int64_t mxw_f_scaled(std::span<const int32_t> g,
                            std::span<const int32_t> h, Weight w) {
  int64_t best = 0;
  for (size_t k = 0; k < g.size(); ++k) {
    int64_t v = w.den * int64_t{g[k]} + w.num * int64_t{h[k]};
    if (v > best) best = v;
  }
  return best;
}

inline int64_t pathmax(int64_t child_f, int64_t parent_f) {
  return child_f > parent_f ? child_f : parent_f;
}

// A live agent as the heuristics see it: current location and accumulated
// move count.
struct AgentView {
  CellId loc;
  int32_t cost;
};

// Everything the per-node heuristic evaluation needs, built once per solve
// after reduction. Immutable afterwards and shared read-only across the
// batch-evaluation workers.
struct HeurContext {
  const GridMap* map = nullptr;
  const VisibilityIndex* index = nullptr;

  std::vector<CellId> u_cells;  // surviving unseen cells, ascending ids
  // dist_to_watchers[u * |C| + c]: BFS distance from watchers(u_cells[u]) to
  // free cell c, i.e. the cheapest cost for an agent at c to see u_cells[u].
  std::vector<int32_t> fields;
  // Per free cell: which surviving unseen cells it has LOS to (bits in
  // u-index space). Drives residual-set updates and successor filtering.
  std::vector<Bitset> sees_u;
  std::vector<int> watcher_count;  // |watchers(u_cells[u])|

  int num_u() const { return static_cast<int>(u_cells.size()); }
  int32_t field(int u, CellId c) const {
    return fields[static_cast<size_t>(u) * map->num_free() + c];
  }

  static HeurContext build(const GridMap& map, const VisibilityIndex& index,
                           const Bitset& reduced_unseen, bool parallel = true);
};

// Scaled Singleton value: max over residual cells u of
// min over live agents of (den*cost + num*dist-to-a-watcher-of-u).
// Empty residual yields den * max cost. No live agents with a non-empty
// residual is a dead node (returns a huge sentinel).
int64_t singleton_value(const Bitset& residual,
                        std::span<const AgentView> live_agents,
                        const HeurContext& ctx, Weight w);

// Greedy pivot selection: candidates in ascending |watchers| order (ties by
// cell id), accepted iff watcher-disjoint from everything accepted so far,
// truncated to pivot_cap. Returns u-indices in acceptance order.
std::vector<int> select_pivots(const Bitset& residual, const HeurContext& ctx,
                               int pivot_cap);

// Abstract lower-bound graph over live agents and pivots. Edge costs are
// min distances between the corresponding watcher regions.
struct GdlsGraph {
  std::vector<int32_t> agent_g;      // cost-so-far per live agent
  std::vector<CellId> pivot_cells;   // may be empty labels in synthetic tests
  std::vector<int32_t> agent_pivot;  // [a * P + p]
  std::vector<int32_t> pivot_pivot;  // [i * P + j], symmetric, 0 diagonal

  int num_agents() const { return static_cast<int>(agent_g.size()); }
  int num_pivots() const { return static_cast<int>(pivot_cells.size()); }
  int32_t e_ap(int a, int p) const {
    return agent_pivot[static_cast<size_t>(a) * num_pivots() + p];
  }
  int32_t e_pp(int i, int j) const {
    return pivot_pivot[static_cast<size_t>(i) * num_pivots() + j];
  }

  static GdlsGraph make(std::vector<int32_t> agent_g,
                        std::vector<int32_t> agent_pivot,
                        std::vector<int32_t> pivot_pivot);
};

GdlsGraph build_gdls(std::span<const AgentView> live_agents,
                     const std::vector<int>& pivots, const HeurContext& ctx);

// Repeatedly removes the pivot providing the largest positive shortcut
// s(p_i, p_j, a_k) = e(a_k, p_j) - (e(a_k, p_i) + e(p_i, p_j)); ties go to
// the lowest pivot index. At least one pivot survives.
GdlsGraph pivot_prune(GdlsGraph g);

inline constexpr int kMaxMtspPivots = 20;

struct MtspResult {
  int64_t f_scaled = 0;             // max_k (den*g_k + num*h_k), optimal
  std::vector<int32_t> per_agent_h; // unweighted G_DLS path length per agent
  std::vector<std::vector<int>> assignment;  // pivot indices in visit order
};

// Exact minimax mTSP on G_DLS: minimizes max_k (g_k + w*h_k) over all
// pivot partitions and visit orders. Held-Karp open-path DP per agent plus a
// subset-split partition DP. Ties resolved toward lexicographically smallest
// per-agent pivot sets.
MtspResult mtsp_solve(const GdlsGraph& g, Weight w = {});

}  // namespace mwrp
