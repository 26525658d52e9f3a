#include "mwrp/solution_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mwrp {

uint64_t fnv1a64(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

nlohmann::ordered_json solution_to_json(const Solution& solution,
                                        const std::string& map_path,
                                        const std::string& map_hash,
                                        const std::vector<Cell>& starts) {
  nlohmann::ordered_json j;
  j["map"] = {{"path", map_path}, {"hash", map_hash}};
  j["agents"] = starts.size();
  auto jstarts = nlohmann::ordered_json::array();
  for (Cell s : starts) jstarts.push_back({{"r", s.row}, {"c", s.col}});
  j["starts"] = jstarts;
  j["algorithm"] = solution.algorithm;
  j["w"] = solution.w.str();
  j["makespan"] = solution.makespan;
  auto jpaths = nlohmann::ordered_json::array();
  for (const auto& path : solution.paths) {
    auto jp = nlohmann::ordered_json::array();
    for (Cell s : path) jp.push_back({{"r", s.row}, {"c", s.col}});
    jpaths.push_back(jp);
  }
  j["paths"] = jpaths;
  const SearchStats& st = solution.stats;
  j["stats"] = {{"expansions", st.expansions},
                {"generated", st.generated},
                {"mtsp_calls", st.mtsp_calls},
                {"dominance_prunes", st.dominance_prunes},
                {"reduction",
                 {{"initial", st.reduction.initial_size},
                  {"after_cd", st.reduction.after_cd},
                  {"after_pd", st.reduction.after_pd}}},
                {"runtime_ms", st.runtime_ms}};
  auto jtrace = nlohmann::ordered_json::array();
  for (const AnytimePoint& p : solution.anytime_trace)
    jtrace.push_back({{"t_ms", p.t_ms}, {"cost", p.cost}});
  j["anytime_trace"] = jtrace;
  return j;
}

namespace {
Cell cell_from_json(const nlohmann::json& j) {
  return {j.at("r").get<int>(), j.at("c").get<int>()};
}
}  // namespace

SolutionDoc solution_from_json(const nlohmann::json& j) {
  SolutionDoc doc;
  doc.map_path = j.at("map").at("path").get<std::string>();
  doc.map_hash = j.at("map").at("hash").get<std::string>();
  doc.agents = j.at("agents").get<int>();
  for (const auto& s : j.at("starts")) doc.starts.push_back(cell_from_json(s));
  doc.algorithm = j.at("algorithm").get<std::string>();
  doc.w = Weight::parse(j.at("w").get<std::string>());
  doc.makespan = j.at("makespan").get<int>();
  for (const auto& jp : j.at("paths")) {
    std::vector<Cell> path;
    for (const auto& s : jp) path.push_back(cell_from_json(s));
    doc.paths.push_back(std::move(path));
  }
  return doc;
}

SolutionDoc load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open solution file: " + path);
  nlohmann::json j;
  in >> j;
  return solution_from_json(j);
}

void save_json_file(const nlohmann::ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mwrp
