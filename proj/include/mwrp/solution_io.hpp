#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mwrp/search.hpp"

namespace mwrp {

// Stable content hash used to tie a solution file to its map file.
uint64_t fnv1a64(const std::string& text);
std::string hash_hex(uint64_t h);

// Solution JSON layout:
// { map: {path, hash}, agents, starts, algorithm, w, makespan,
//   paths: [[{r,c},...],...],
//   stats: {expansions, generated, mtsp_calls, dominance_prunes,
//           reduction: {initial, after_cd, after_pd}, runtime_ms},
//   anytime_trace: [{t_ms, cost},...] }
// Everything except the timing fields is deterministic under a fixed seed.
nlohmann::ordered_json solution_to_json(const Solution& solution,
                                        const std::string& map_path,
                                        const std::string& map_hash,
                                        const std::vector<Cell>& starts);

struct SolutionDoc {
  std::string map_path;
  std::string map_hash;
  int agents = 0;
  std::vector<Cell> starts;
  std::string algorithm;
  Weight w;
  int makespan = 0;
  std::vector<std::vector<Cell>> paths;
};

SolutionDoc solution_from_json(const nlohmann::json& j);
SolutionDoc load_solution_file(const std::string& path);
void save_json_file(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace mwrp
