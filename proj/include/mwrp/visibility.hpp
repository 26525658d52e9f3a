#pragma once

#include <limits>
#include <vector>

#include "mwrp/bitset.hpp"
#include "mwrp/grid.hpp"

namespace mwrp {

// Distance value for cells a BFS never reached. Kept well below INT32_MAX so
// sums with costs cannot overflow.
inline constexpr int32_t kUnreachable = std::numeric_limits<int32_t>::max() / 4;

// Free four-way neighbors of s, in N,S,W,E order.
std::vector<Cell> neighbors(const GridMap& map, Cell s);

// Integer Bresenham rasterization of the segment a->b:
//   dx = |dcol|, dy = -|drow|, err = dx + dy;
//   each step: on 2*err >= dy advance col, on 2*err <= dx advance row
// (both may fire, producing a diagonal step). Returns true iff every
// rasterized cell, endpoints included, is free. Not symmetric in general.
bool bresenham_visible(const GridMap& map, Cell a, Cell b);

// Cells covered by the rasterization, in traversal order (exposed for tests).
std::vector<Cell> bresenham_cells(Cell a, Cell b);

// Precomputed L (los) and W (watchers) per free cell, as bitsets over the
// map's dense free-cell ids.
//   t in los[s]      <=>  s sees t
//   s in watchers[t] <=>  s sees t
struct VisibilityIndex {
  std::vector<Bitset> los;
  std::vector<Bitset> watchers;
};

struct VisibilityOptions {
  bool parallel = true;
  // Optional LOS radius (Euclidean); <= 0 means unlimited. Off by default.
  double max_range = 0.0;
};

// O(|C|^2) pair scan; parallelized over source cells when requested, with a
// result identical to the serial pass.
VisibilityIndex build_visibility_index(const GridMap& map,
                                       const VisibilityOptions& opts = {});

// Multi-source four-way shortest distances. dist is indexed by free-cell id;
// unreached cells (impossible on a connected map when sources are non-empty)
// hold kUnreachable.
struct DistField {
  std::vector<int32_t> dist;
  int32_t operator[](CellId id) const { return dist[id]; }
};

DistField bfs_dist_field(const GridMap& map, const std::vector<Cell>& sources);
DistField bfs_dist_field(const GridMap& map, const Bitset& sources);

// Same BFS, additionally recording the first-discoverer parent of every
// reached cell (kNoCell for sources). Used to stitch concrete paths.
DistField bfs_dist_field_with_parents(const GridMap& map,
                                      const std::vector<Cell>& sources,
                                      std::vector<CellId>& parents);

// Flood fill restricted to `allowed`: exactly the cells of `allowed`
// reachable from `starts` through `allowed` cells only. Starts outside
// `allowed` contribute nothing.
Bitset subgraph_bfs(const GridMap& map, const std::vector<Cell>& starts,
                    const Bitset& allowed);

}  // namespace mwrp
