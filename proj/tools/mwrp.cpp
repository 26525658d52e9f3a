#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwrp/grid.hpp"
#include "mwrp/postprocess.hpp"
#include "mwrp/render.hpp"
#include "mwrp/search.hpp"
#include "mwrp/solution_io.hpp"
#include "mwrp/verify.hpp"
#include "mwrp/visibility.hpp"

namespace fs = std::filesystem;
using namespace mwrp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTimeoutIncumbent = 2;
constexpr int kExitTimeoutNoSolution = 3;
constexpr int kExitInvalidInput = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Cell> parse_starts(const std::string& text) {
  std::vector<Cell> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    size_t comma = item.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("bad --starts entry: " + item);
    out.push_back(
        {std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
  }
  if (out.empty()) throw std::runtime_error("--starts is empty");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SolveFlags {
  std::string map_path;
  std::string algo = "cp3";
  std::string w = "1";
  int agents = 1;
  uint64_t seed = 0;
  std::string starts;
  bool anytime = false;
  int batch = -1;
  int pivot_cap = -1;
  bool no_cd = false, no_pd = false, no_pivot_prune = false;
  bool postprocess = false;
  double time_limit = 0.0;
  std::string out;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--algo", f.algo,
                  "baseline|cp3|mxw|focal-sorc|focal-morc")
      ->default_val(f.algo);
  cmd->add_option("--w", f.w, "suboptimality weight, a ratio like 2 or 3/2");
  cmd->add_flag("--anytime", f.anytime, "keep improving until optimal");
  cmd->add_option("--batch", f.batch, "batch size N for parallel heuristics");
  cmd->add_option("--pivot-cap", f.pivot_cap, "max pivots per mTSP call");
  cmd->add_flag("--no-cd", f.no_cd, "disable cell dominance");
  cmd->add_flag("--no-pd", f.no_pd, "disable path dominance");
  cmd->add_flag("--no-pivot-prune", f.no_pivot_prune, "disable pivot pruning");
  cmd->add_flag("--postprocess", f.postprocess,
                "re-solve per-agent subproblems after the search");
  cmd->add_option("--time-limit", f.time_limit, "seconds (0 = unlimited)");
}

SolverConfig config_from_flags(const SolveFlags& f) {
  SolverConfig cfg = SolverConfig::defaults_for(parse_algorithm(f.algo));
  cfg.w = Weight::parse(f.w);
  cfg.anytime = f.anytime;
  if (f.batch > 0) cfg.batch_size = f.batch;
  if (f.pivot_cap > 0) cfg.pivot_cap = f.pivot_cap;
  if (f.no_cd) cfg.enable_cd = false;
  if (f.no_pd) cfg.enable_pd = false;
  if (f.no_pivot_prune) cfg.enable_pivot_prune = false;
  cfg.time_limit_s = f.time_limit;
  cfg.seed = f.seed;
  return cfg;
}

int cmd_gen(const std::string& style, int width, int height, double density,
            uint64_t seed, const std::string& out) {
  GridMap map = generate_map(parse_map_style(style), width, height, density, seed);
  save_map_file(map, out);
  std::cout << "wrote " << out << " (" << map.num_free() << " free cells)\n";
  return kExitOk;
}

int cmd_solve(const SolveFlags& f) {
  ParsedMap parsed = load_map_file(f.map_path);
  if (parsed.demoted > 0)
    std::cerr << "note: demoted " << parsed.demoted
              << " unreachable free cells to obstacles\n";

  std::vector<Cell> starts;
  if (!f.starts.empty()) {
    starts = parse_starts(f.starts);
    for (Cell s : starts)
      if (!parsed.map.is_free(s))
        throw std::runtime_error("start is not a free cell");
  } else {
    starts = sample_border_starts(parsed.map, f.agents, f.seed);
  }

  SolverConfig cfg = config_from_flags(f);
  ProblemInstance problem{&parsed.map, starts, std::nullopt};
  VisibilityIndex index = build_visibility_index(parsed.map);
  Solution sol = solve(problem, index, cfg);

  if (!sol.found) {
    std::cerr << (sol.timed_out ? "timeout without a solution\n"
                                : "no solution\n");
    return kExitTimeoutNoSolution;
  }
  if (f.postprocess) {
    Solution improved = improve(sol, problem, index, cfg);
    improved.algorithm = sol.algorithm + "+post";
    improved.stats.runtime_ms = sol.stats.runtime_ms;
    sol = improved;
  }

  std::string hash = hash_hex(fnv1a64(read_file(f.map_path)));
  auto j = solution_to_json(sol, f.map_path, hash, starts);
  if (f.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json_file(j, f.out);
    std::cout << "makespan " << sol.makespan << ", wrote " << f.out << "\n";
  }
  return sol.timed_out ? kExitTimeoutIncumbent : kExitOk;
}

int cmd_verify(const std::string& map_path, const std::string& sol_path) {
  ParsedMap parsed = load_map_file(map_path);
  SolutionDoc doc = load_solution_file(sol_path);
  CoverageReport report =
      verify_solution(parsed.map, doc.starts, doc.paths);
  if (report.valid) {
    std::cout << "valid: full coverage, " << doc.paths.size() << " paths\n";
    return kExitOk;
  }
  std::cout << "INVALID:";
  if (!report.uncovered.empty())
    std::cout << " uncovered=" << report.uncovered.size();
  if (!report.path_violations.empty())
    std::cout << " path_violations=" << report.path_violations.size();
  if (!report.start_mismatches.empty())
    std::cout << " start_mismatches=" << report.start_mismatches.size();
  std::cout << "\n";
  for (Cell s : report.uncovered)
    std::cout << "  uncovered (" << s.row << "," << s.col << ")\n";
  for (auto [agent, idx] : report.path_violations)
    std::cout << "  bad step: agent " << agent << " index " << idx << "\n";
  return 1;
}

int cmd_render(const std::string& map_path, const std::string& sol_path,
               const std::string& out) {
  ParsedMap parsed = load_map_file(map_path);
  SolutionDoc doc = load_solution_file(sol_path);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write: " + out);
  os << render_svg(parsed.map, doc.starts, doc.paths);
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& suite, const std::string& algos,
              const std::string& weights, const std::string& agents,
              int num_seeds, double time_limit, const std::string& out) {
  std::vector<fs::path> maps;
  for (const auto& entry : fs::directory_iterator(suite))
    if (entry.path().extension() == ".map") maps.push_back(entry.path());
  std::sort(maps.begin(), maps.end());
  if (maps.empty()) throw std::runtime_error("no .map files in " + suite);

  std::ofstream csv(out);
  if (!csv) throw std::runtime_error("cannot write: " + out);
  csv << "map,M,algo,w,makespan,runtime_ms,expansions,reduction_pct\n";

  for (const auto& map_path : maps) {
    ParsedMap parsed = load_map_file(map_path.string());
    VisibilityIndex index = build_visibility_index(parsed.map);

    // A sibling <name>.instance.json pins starts (and oracle data); otherwise
    // starts are sampled from the border per seed.
    struct Run {
      std::vector<Cell> starts;
      uint64_t seed;
    };
    std::vector<std::pair<int, std::vector<Run>>> by_agents;
    fs::path inst_path = map_path;
    inst_path.replace_extension(".instance.json");
    if (fs::exists(inst_path)) {
      nlohmann::json inst;
      std::ifstream in(inst_path);
      in >> inst;
      std::vector<Cell> starts;
      for (const auto& s : inst.at("starts"))
        starts.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
      by_agents.push_back(
          {static_cast<int>(starts.size()), {{starts, 0}}});
    } else {
      for (const std::string& ms : split_list(agents)) {
        int m = std::stoi(ms);
        std::vector<Run> runs;
        for (int seed = 0; seed < num_seeds; ++seed)
          runs.push_back(
              {sample_border_starts(parsed.map, m, seed), (uint64_t)seed});
        by_agents.push_back({m, std::move(runs)});
      }
    }

    for (const auto& [m, runs] : by_agents) {
      for (const Run& run : runs) {
        for (const std::string& algo_name : split_list(algos)) {
          Algorithm algo = parse_algorithm(algo_name);
          bool uses_w =
              algo == Algorithm::Mxw || algo == Algorithm::FocalSorc ||
              algo == Algorithm::FocalMorc;
          std::vector<std::string> ws =
              uses_w ? split_list(weights) : std::vector<std::string>{"1"};
          for (const std::string& wtext : ws) {
            SolverConfig cfg = SolverConfig::defaults_for(algo);
            cfg.w = Weight::parse(wtext);
            cfg.time_limit_s = time_limit;
            cfg.seed = run.seed;
            ProblemInstance problem{&parsed.map, run.starts, std::nullopt};
            Solution sol = solve(problem, index, cfg);
            const auto& red = sol.stats.reduction;
            double red_pct =
                red.initial_size > 0
                    ? 100.0 * (red.initial_size - red.after_pd) /
                          red.initial_size
                    : 0.0;
            csv << map_path.filename().string() << ',' << m << ','
                << algo_name << ',' << wtext << ','
                << (sol.found ? sol.makespan : -1) << ','
                << sol.stats.runtime_ms << ',' << sol.stats.expansions << ','
                << red_pct << "\n";
          }
        }
      }
    }
  }
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent watchman route solver"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a map file");
  std::string gen_style = "maze", gen_out = "map.map";
  int gen_w = 32, gen_h = 32;
  double gen_density = 0.2;
  uint64_t gen_seed = 1;
  gen->add_option("--style", gen_style, "random|room|maze")->required();
  gen->add_option("--width", gen_w)->required();
  gen->add_option("--height", gen_h)->required();
  gen->add_option("--density", gen_density, "obstacle fraction (random only)");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out)->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  SolveFlags sf;
  solve_cmd->add_option("--map", sf.map_path)->required();
  solve_cmd->add_option("--agents", sf.agents, "number of agents");
  solve_cmd->add_option("--seed", sf.seed, "seed for border start sampling");
  solve_cmd->add_option("--starts", sf.starts, "explicit starts: \"r,c;r,c\"");
  solve_cmd->add_option("--out", sf.out, "solution JSON path (default stdout)");
  add_solver_flags(solve_cmd, sf);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "independently check a solution");
  std::string v_map, v_sol;
  verify_cmd->add_option("--map", v_map)->required();
  verify_cmd->add_option("--solution", v_sol)->required();

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a solution as SVG");
  std::string r_map, r_sol, r_out = "solution.svg";
  render_cmd->add_option("--map", r_map)->required();
  render_cmd->add_option("--solution", r_sol)->required();
  render_cmd->add_option("--out", r_out);

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "run a suite directory, write CSV");
  std::string b_suite, b_algos = "cp3", b_weights = "2", b_agents = "1",
              b_out = "bench.csv";
  int b_seeds = 1;
  double b_time_limit = 0.0;
  bench_cmd->add_option("--suite", b_suite, "directory of .map files")
      ->required();
  bench_cmd->add_option("--algos", b_algos, "comma-separated algorithms");
  bench_cmd->add_option("--weights", b_weights, "comma-separated weights");
  bench_cmd->add_option("--agents", b_agents, "comma-separated agent counts");
  bench_cmd->add_option("--seeds", b_seeds, "start-sampling seeds per count");
  bench_cmd->add_option("--time-limit", b_time_limit, "seconds per run");
  bench_cmd->add_option("--out", b_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen)
      return cmd_gen(gen_style, gen_w, gen_h, gen_density, gen_seed, gen_out);
    if (*solve_cmd) return cmd_solve(sf);
    if (*verify_cmd) return cmd_verify(v_map, v_sol);
    if (*render_cmd) return cmd_render(r_map, r_sol, r_out);
    if (*bench_cmd)
      return cmd_bench(b_suite, b_algos, b_weights, b_agents, b_seeds,
                       b_time_limit, b_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
