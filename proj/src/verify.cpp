#include "mwrp/verify.hpp"

#include <cstdlib>

namespace mwrp {

bool verify_los(const GridMap& map, Cell from, Cell to) {
  const int rowspan = std::abs(to.row - from.row);
  const int colspan = std::abs(to.col - from.col);
  const int rstep = to.row > from.row ? 1 : -1;
  const int cstep = to.col > from.col ? 1 : -1;
  int r = from.row, c = from.col;
  int acc = colspan - rowspan;
  while (map.is_free(r, c)) {
    if (r == to.row && c == to.col) return true;
    const int twice = 2 * acc;
    if (twice >= -rowspan) {
      acc -= rowspan;
      c += cstep;
    }
    if (twice <= colspan) {
      acc += colspan;
      r += rstep;
    }
  }
  return false;
}

Bitset observed_from(const GridMap& map, Cell from) {
  Bitset out(map.num_free());
  for (CellId t = 0; t < map.num_free(); ++t)
    if (verify_los(map, from, map.cell_of(t))) out.set(t);
  return out;
}

CoverageReport verify_solution(const GridMap& map,
                               const std::vector<Cell>& starts,
                               const std::vector<std::vector<Cell>>& paths) {
  CoverageReport report;
  Bitset covered(map.num_free());

  for (int k = 0; k < static_cast<int>(paths.size()); ++k) {
    const auto& path = paths[k];
    if (path.empty() ||
        (k < static_cast<int>(starts.size()) && path[0] != starts[k])) {
      report.start_mismatches.push_back(k);
    }
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      if (!map.is_free(path[i])) {
        report.path_violations.push_back({k, i});
        continue;
      }
      covered |= observed_from(map, path[i]);
      if (i + 1 < static_cast<int>(path.size())) {
        int dr = std::abs(path[i + 1].row - path[i].row);
        int dc = std::abs(path[i + 1].col - path[i].col);
        bool adjacent = dr + dc == 1 && map.is_free(path[i + 1]);
        if (!adjacent) report.path_violations.push_back({k, i});
      }
    }
  }

  for (CellId t = 0; t < map.num_free(); ++t)
    if (!covered.test(t)) report.uncovered.push_back(map.cell_of(t));

  report.valid = report.uncovered.empty() && report.path_violations.empty() &&
                 report.start_mismatches.empty();
  return report;
}

}  // namespace mwrp
