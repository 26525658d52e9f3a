#include "mwrp/visibility.hpp"

#include <cstdlib>
#include <deque>

namespace mwrp {

std::vector<Cell> neighbors(const GridMap& map, Cell s) {
  std::vector<Cell> out;
  out.reserve(4);
  const Cell cand[4] = {{s.row - 1, s.col},
                        {s.row + 1, s.col},
                        {s.row, s.col - 1},
                        {s.row, s.col + 1}};
  for (Cell c : cand)
    if (map.is_free(c)) out.push_back(c);
  return out;
}

std::vector<Cell> bresenham_cells(Cell a, Cell b) {
  std::vector<Cell> out;
  int r = a.row, c = a.col;
  const int dx = std::abs(b.col - a.col);
  const int dy = -std::abs(b.row - a.row);
  const int sc = a.col < b.col ? 1 : -1;
  const int sr = a.row < b.row ? 1 : -1;
  int err = dx + dy;
  while (true) {
    out.push_back({r, c});
    if (r == b.row && c == b.col) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      c += sc;
    }
    if (e2 <= dx) {
      err += dx;
      r += sr;
    }
  }
  return out;
}

bool bresenham_visible(const GridMap& map, Cell a, Cell b) {
  int r = a.row, c = a.col;
  const int dx = std::abs(b.col - a.col);
  const int dy = -std::abs(b.row - a.row);
  const int sc = a.col < b.col ? 1 : -1;
  const int sr = a.row < b.row ? 1 : -1;
  int err = dx + dy;
  while (true) {
    if (!map.is_free(r, c)) return false;
    if (r == b.row && c == b.col) return true;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      c += sc;
    }
    if (e2 <= dx) {
      err += dx;
      r += sr;
    }
  }
}

VisibilityIndex build_visibility_index(const GridMap& map,
                                       const VisibilityOptions& opts) {
  const int n = map.num_free();
  VisibilityIndex index;
  index.los.assign(n, Bitset(n));
  index.watchers.assign(n, Bitset(n));

  const bool ranged = opts.max_range > 0.0;
  const double range2 = opts.max_range * opts.max_range;

#pragma omp parallel for schedule(dynamic, 16) if (opts.parallel)
  for (CellId s = 0; s < n; ++s) {
    Cell from = map.cell_of(s);
    Bitset& row = index.los[s];
    for (CellId t = 0; t < n; ++t) {
      Cell to = map.cell_of(t);
      if (ranged) {
        double dr = to.row - from.row, dc = to.col - from.col;
        if (dr * dr + dc * dc > range2) continue;
      }
      if (bresenham_visible(map, from, to)) row.set(t);
    }
  }

  // Watchers are the inverse relation: t in los[s] <=> s in watchers[t].
#pragma omp parallel for schedule(dynamic, 16) if (opts.parallel)
  for (CellId t = 0; t < n; ++t) {
    Bitset& row = index.watchers[t];
    for (CellId s = 0; s < n; ++s)
      if (index.los[s].test(t)) row.set(s);
  }
  return index;
}

namespace {

DistField bfs_ids(const GridMap& map, const std::vector<CellId>& sources,
                  std::vector<CellId>* parents) {
  DistField field;
  field.dist.assign(map.num_free(), kUnreachable);
  if (parents) parents->assign(map.num_free(), kNoCell);
  std::deque<CellId> queue;
  for (CellId s : sources) {
    if (field.dist[s] != 0) {
      field.dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    CellId cur = queue.front();
    queue.pop_front();
    for (CellId nb : map.adj(cur)) {
      if (nb == kNoCell || field.dist[nb] != kUnreachable) continue;
      field.dist[nb] = field.dist[cur] + 1;
      if (parents) (*parents)[nb] = cur;
      queue.push_back(nb);
    }
  }
  return field;
}

}  // namespace

DistField bfs_dist_field(const GridMap& map, const std::vector<Cell>& sources) {
  std::vector<CellId> ids;
  ids.reserve(sources.size());
  for (Cell s : sources) ids.push_back(map.id_of(s));
  return bfs_ids(map, ids, nullptr);
}

DistField bfs_dist_field(const GridMap& map, const Bitset& sources) {
  std::vector<CellId> ids = {};
  sources.for_each([&](int i) { ids.push_back(i); });
  return bfs_ids(map, ids, nullptr);
}

DistField bfs_dist_field_with_parents(const GridMap& map,
                                      const std::vector<Cell>& sources,
                                      std::vector<CellId>& parents) {
  std::vector<CellId> ids;
  ids.reserve(sources.size());
  for (Cell s : sources) ids.push_back(map.id_of(s));
  return bfs_ids(map, ids, &parents);
}

Bitset subgraph_bfs(const GridMap& map, const std::vector<Cell>& starts,
                    const Bitset& allowed) {
  Bitset reached(map.num_free());
  std::deque<CellId> queue;
  for (Cell s : starts) {
    CellId id = map.id_of(s);
    if (id != kNoCell) queue.push_back(id);
  }
  while (!queue.empty()) {
    CellId cur = queue.front();
    queue.pop_front();
    if (reached.test(cur) || !allowed.test(cur)) continue;
    reached.set(cur);
    for (CellId nb : map.adj(cur))
      if (nb != kNoCell && !reached.test(nb)) queue.push_back(nb);
  }
  return reached;
}

}  // namespace mwrp
