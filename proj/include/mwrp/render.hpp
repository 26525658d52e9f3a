#pragma once

#include <string>
#include <vector>

#include "mwrp/grid.hpp"

namespace mwrp {

// Static SVG 1.1 figure: grid with obstacles, start markers, and one colored
// polyline per agent path (one vertex per path cell).
std::string render_svg(const GridMap& map, const std::vector<Cell>& starts,
                       const std::vector<std::vector<Cell>>& paths);

}  // namespace mwrp
