#include "mwrp/grid.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mwrp/rng.hpp"

namespace mwrp {

namespace {

// Largest four-connected free component; ties go to the component containing
// the lexicographically smallest free cell (scan order guarantees that is the
// first component found).
std::vector<uint8_t> keep_largest_component(int width, int height,
                                            const std::vector<uint8_t>& free,
                                            int* demoted) {
  const size_t n = free.size();
  std::vector<int> comp(n, -1);
  std::vector<size_t> stack;
  int best_comp = -1, best_size = 0, next = 0;
  for (size_t start = 0; start < n; ++start) {
    if (!free[start] || comp[start] >= 0) continue;
    int this_comp = next++;
    int size = 0;
    stack.assign(1, start);
    comp[start] = this_comp;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      ++size;
      int r = static_cast<int>(cur) / width, c = static_cast<int>(cur) % width;
      const int dr[4] = {-1, 1, 0, 0}, dc[4] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        int nr = r + dr[k], nc = c + dc[k];
        if (nr < 0 || nr >= height || nc < 0 || nc >= width) continue;
        size_t ni = static_cast<size_t>(nr) * width + nc;
        if (free[ni] && comp[ni] < 0) {
          comp[ni] = this_comp;
          stack.push_back(ni);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_comp = this_comp;
    }
  }
  std::vector<uint8_t> out(n, 0);
  int dropped = 0;
  for (size_t i = 0; i < n; ++i) {
    if (free[i]) {
      if (comp[i] == best_comp)
        out[i] = 1;
      else
        ++dropped;
    }
  }
  if (demoted) *demoted = dropped;
  return out;
}

}  // namespace

GridMap GridMap::from_occupancy(int width, int height, std::vector<uint8_t> free,
                                int* demoted) {
  if (width <= 0 || height <= 0)
    throw std::runtime_error("map dimensions must be positive");
  if (free.size() != static_cast<size_t>(width) * height)
    throw std::runtime_error("occupancy size does not match dimensions");
  bool has_free = std::find(free.begin(), free.end(), uint8_t{1}) != free.end();
  if (!has_free) throw std::runtime_error("map has no free cells");

  GridMap m;
  m.width_ = width;
  m.height_ = height;
  m.occ_ = keep_largest_component(width, height, free, demoted);
  m.id_.assign(m.occ_.size(), kNoCell);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (m.occ_[static_cast<size_t>(r) * width + c]) {
        m.id_[static_cast<size_t>(r) * width + c] =
            static_cast<CellId>(m.free_cells_.size());
        m.free_cells_.push_back({r, c});
      }
  m.adj_.resize(m.free_cells_.size());
  for (CellId i = 0; i < static_cast<CellId>(m.free_cells_.size()); ++i) {
    Cell s = m.free_cells_[i];
    m.adj_[i] = {m.id_of({s.row - 1, s.col}), m.id_of({s.row + 1, s.col}),
                 m.id_of({s.row, s.col - 1}), m.id_of({s.row, s.col + 1})};
  }
  return m;
}

ParsedMap parse_map(std::istream& in) {
  auto header_line = [&](const std::string& key) {
    std::string line;
    if (!std::getline(in, line))
      throw std::runtime_error("map header: missing '" + key + "' line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string k;
    ls >> k;
    if (k != key)
      throw std::runtime_error("map header: expected '" + key + "', got '" +
                               line + "'");
    return ls;
  };

  header_line("type");
  int height = 0, width = 0;
  if (!(header_line("height") >> height) || height <= 0)
    throw std::runtime_error("map header: bad height");
  if (!(header_line("width") >> width) || width <= 0)
    throw std::runtime_error("map header: bad width");
  header_line("map");

  std::vector<uint8_t> free(static_cast<size_t>(width) * height, 0);
  for (int r = 0; r < height; ++r) {
    std::string line;
    if (!std::getline(in, line))
      throw std::runtime_error("map body: truncated at row " +
                               std::to_string(r));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != width)
      throw std::runtime_error("map body: row " + std::to_string(r) + " has " +
                               std::to_string(line.size()) + " cells, want " +
                               std::to_string(width));
    for (int c = 0; c < width; ++c) {
      char ch = line[c];
      if (ch == '.' || ch == 'G')
        free[static_cast<size_t>(r) * width + c] = 1;
      else if (ch == '@' || ch == 'T' || ch == 'O')
        free[static_cast<size_t>(r) * width + c] = 0;
      else
        throw std::runtime_error(std::string("map body: unknown character '") +
                                 ch + "'");
    }
  }

  ParsedMap out;
  out.map = GridMap::from_occupancy(width, height, std::move(free), &out.demoted);
  return out;
}

ParsedMap parse_map_text(const std::string& text) {
  std::istringstream in(text);
  return parse_map(in);
}

ParsedMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map file: " + path);
  return parse_map(in);
}

std::string serialize_map(const GridMap& map) {
  std::ostringstream out;
  out << "type octile\nheight " << map.height() << "\nwidth " << map.width()
      << "\nmap\n";
  for (int r = 0; r < map.height(); ++r) {
    for (int c = 0; c < map.width(); ++c) out << (map.is_free(r, c) ? '.' : '@');
    out << '\n';
  }
  return out.str();
}

void save_map_file(const GridMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write map file: " + path);
  out << serialize_map(map);
}

MapStyle parse_map_style(const std::string& name) {
  if (name == "random") return MapStyle::Random;
  if (name == "room") return MapStyle::Room;
  if (name == "maze") return MapStyle::Maze;
  throw std::runtime_error("unknown map style: " + name);
}

namespace {

GridMap generate_random(int width, int height, double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = width * height;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng);
  int obstacles = static_cast<int>(density * n);
  std::vector<uint8_t> free(n, 1);
  for (int i = 0; i < obstacles; ++i) free[order[i]] = 0;
  return GridMap::from_occupancy(width, height, std::move(free));
}

// 3x3 open rooms on a stride-4 lattice, single-cell walls, one random door
// per shared wall segment.
GridMap generate_room(int width, int height, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> free(static_cast<size_t>(width) * height, 0);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (r % 4 != 3 && c % 4 != 3)
        free[static_cast<size_t>(r) * width + c] = 1;

  // Doors in vertical walls (between horizontally adjacent rooms).
  for (int c = 3; c < width - 1; c += 4) {
    for (int r0 = 0; r0 < height; r0 += 4) {
      int hi = std::min(r0 + 2, height - 1);
      if (hi < r0) continue;
      int r = r0 + static_cast<int>(uniform_below(rng, hi - r0 + 1));
      free[static_cast<size_t>(r) * width + c] = 1;
    }
  }
  // Doors in horizontal walls.
  for (int r = 3; r < height - 1; r += 4) {
    for (int c0 = 0; c0 < width; c0 += 4) {
      int hi = std::min(c0 + 2, width - 1);
      if (hi < c0) continue;
      int c = c0 + static_cast<int>(uniform_below(rng, hi - c0 + 1));
      free[static_cast<size_t>(r) * width + c] = 1;
    }
  }
  return GridMap::from_occupancy(width, height, std::move(free));
}

// Recursive-backtracker carving on the odd-coordinate lattice.
GridMap generate_maze(int width, int height, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> free(static_cast<size_t>(width) * height, 0);
  auto idx = [&](int r, int c) { return static_cast<size_t>(r) * width + c; };
  auto node_ok = [&](int r, int c) {
    return r >= 1 && r < height && c >= 1 && c < width && r % 2 == 1 &&
           c % 2 == 1;
  };

  std::vector<uint8_t> visited(static_cast<size_t>(width) * height, 0);
  std::vector<Cell> stack{{1, 1}};
  visited[idx(1, 1)] = 1;
  free[idx(1, 1)] = 1;
  while (!stack.empty()) {
    Cell cur = stack.back();
    std::array<int, 4> dirs{0, 1, 2, 3};
    // In-place Fisher-Yates over the four directions.
    for (int i = 3; i > 0; --i)
      std::swap(dirs[i], dirs[uniform_below(rng, i + 1)]);
    const int dr[4] = {-2, 2, 0, 0}, dc[4] = {0, 0, -2, 2};
    bool advanced = false;
    for (int d : dirs) {
      int nr = cur.row + dr[d], nc = cur.col + dc[d];
      if (!node_ok(nr, nc) || visited[idx(nr, nc)]) continue;
      free[idx((cur.row + nr) / 2, (cur.col + nc) / 2)] = 1;
      free[idx(nr, nc)] = 1;
      visited[idx(nr, nc)] = 1;
      stack.push_back({nr, nc});
      advanced = true;
      break;
    }
    if (!advanced) stack.pop_back();
  }
  return GridMap::from_occupancy(width, height, std::move(free));
}

}  // namespace

GridMap generate_map(MapStyle style, int width, int height, double density,
                     uint64_t seed) {
  if (width < 3 || height < 3)
    throw std::runtime_error("generated maps must be at least 3x3");
  if (density < 0.0 || density >= 1.0)
    throw std::runtime_error("density must be in [0, 1)");
  switch (style) {
    case MapStyle::Random:
      return generate_random(width, height, density, seed);
    case MapStyle::Room:
      return generate_room(width, height, seed);
    case MapStyle::Maze:
      return generate_maze(width, height, seed);
  }
  throw std::runtime_error("unreachable map style");
}

std::vector<Cell> sample_border_starts(const GridMap& map, int num_agents,
                                       uint64_t seed) {
  std::vector<Cell> border;
  for (Cell s : map.free_cells())
    if (s.row == 0 || s.row == map.height() - 1 || s.col == 0 ||
        s.col == map.width() - 1)
      border.push_back(s);
  if (border.empty()) throw std::runtime_error("map has no free border cell");
  std::mt19937_64 rng(seed);
  std::vector<Cell> starts;
  starts.reserve(num_agents);
  for (int i = 0; i < num_agents; ++i)
    starts.push_back(border[uniform_below(rng, border.size())]);
  return starts;
}

}  // namespace mwrp
