#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mwrp/bitset.hpp"

namespace mwrp {

// (row, col), row 0 at the top. This orientation is also the render
// orientation.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using CellId = int32_t;
inline constexpr CellId kNoCell = -1;

// Occupancy grid. Free cells are guaranteed to form a single four-connected
// component: construction demotes everything outside the largest component
// (ties broken toward the component holding the smallest (row, col) cell).
// Free cells get dense ids in row-major order; those ids key every bitset in
// the solver.
class GridMap {
 public:
  static GridMap from_occupancy(int width, int height,
                                std::vector<uint8_t> free, int* demoted = nullptr);

  int width() const { return width_; }
  int height() const { return height_; }
  int num_free() const { return static_cast<int>(free_cells_.size()); }

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < height_ && c >= 0 && c < width_;
  }
  bool is_free(int r, int c) const {
    return in_bounds(r, c) && occ_[static_cast<size_t>(r) * width_ + c];
  }
  bool is_free(Cell s) const { return is_free(s.row, s.col); }

  CellId id_of(Cell s) const {
    return in_bounds(s.row, s.col)
               ? id_[static_cast<size_t>(s.row) * width_ + s.col]
               : kNoCell;
  }
  Cell cell_of(CellId id) const { return free_cells_[id]; }
  const std::vector<Cell>& free_cells() const { return free_cells_; }

  // Four-way adjacency over free-cell ids, fixed N,S,W,E order (kNoCell where
  // blocked). The fixed order pins BFS tie-breaking, which keeps path
  // reconstruction deterministic.
  const std::array<CellId, 4>& adj(CellId id) const { return adj_[id]; }

  Bitset empty_cellset() const { return Bitset(num_free()); }
  Bitset full_cellset() const {
    Bitset b(num_free());
    b.set_all();
    return b;
  }

 private:
  int width_ = 0, height_ = 0;
  std::vector<uint8_t> occ_;
  std::vector<CellId> id_;
  std::vector<Cell> free_cells_;
  std::vector<std::array<CellId, 4>> adj_;
};

struct ParsedMap {
  GridMap map;
  int demoted = 0;  // free cells dropped by the connectivity repair
};

// MovingAI .map format: four header lines (`type <t>`, `height <H>`,
// `width <W>`, `map`) then H rows of W characters. '.' and 'G' are free;
// '@', 'T', 'O' are obstacles. Throws std::runtime_error on malformed input.
ParsedMap parse_map(std::istream& in);
ParsedMap parse_map_text(const std::string& text);
ParsedMap load_map_file(const std::string& path);

// Emits '.' / '@' only, with the standard four-line header.
std::string serialize_map(const GridMap& map);
void save_map_file(const GridMap& map, const std::string& path);

enum class MapStyle { Random, Room, Maze };
MapStyle parse_map_style(const std::string& name);

// Deterministic for fixed (style, dims, density, seed). `density` is only
// used by Random. All styles produce a single connected free component.
GridMap generate_map(MapStyle style, int width, int height, double density,
                     uint64_t seed);

// M draws, uniform with replacement, from the free cells on the map border.
std::vector<Cell> sample_border_starts(const GridMap& map, int num_agents,
                                       uint64_t seed);

}  // namespace mwrp
