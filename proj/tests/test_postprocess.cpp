#include <doctest.h>

#include "mwrp/postprocess.hpp"
#include "mwrp/verify.hpp"
#include "oracle.hpp"

using namespace mwrp;
using mwrp::testing::map_from_ascii;

TEST_CASE("extract_responsibility: other agents covering everything leaves none") {
  GridMap map = map_from_ascii({"....."});
  VisibilityIndex index = build_visibility_index(map);
  ProblemInstance problem{&map, {Cell{0, 0}, Cell{0, 4}}, std::nullopt};
  Solution sol;
  sol.paths = {{{0, 0}}, {{0, 4}}};
  sol.path_costs = {0, 0};
  sol.makespan = 0;
  CHECK(extract_responsibility(sol, 0, problem, index).none());
}

TEST_CASE("extract_responsibility: single agent owns the whole unseen set") {
  GridMap map = generate_map(MapStyle::Maze, 9, 9, 0.0, 7);
  VisibilityIndex index = build_visibility_index(map);
  ProblemInstance problem{&map, {map.free_cells()[0]}, std::nullopt};
  Solution sol;
  sol.paths = {{map.free_cells()[0]}};
  sol.path_costs = {0};
  CHECK(extract_responsibility(sol, 0, problem, index) == map.full_cellset());
}

TEST_CASE("extract_responsibility matches an independent coverage pass") {
  GridMap map = generate_map(MapStyle::Maze, 11, 11, 0.0, 19);
  VisibilityIndex index = build_visibility_index(map);
  std::vector<Cell> starts = sample_border_starts(map, 3, 5);
  ProblemInstance problem{&map, starts, std::nullopt};
  SolverConfig cfg = SolverConfig::defaults_for(Algorithm::Mxw);
  cfg.w = {2, 1};
  Solution sol = solve(problem, index, cfg);
  REQUIRE(sol.found);

  for (int agent = 0; agent < 3; ++agent) {
    Bitset r = extract_responsibility(sol, agent, problem, index);
    // Second implementation: verifier LOS unioned over other agents' paths.
    Bitset seen(map.num_free());
    for (int k = 0; k < 3; ++k) {
      if (k == agent) continue;
      for (Cell s : sol.paths[k]) seen |= observed_from(map, s);
    }
    for (CellId c = 0; c < map.num_free(); ++c)
      CHECK(r.test(c) == !seen.test(c));
  }
}

TEST_CASE("improve: empty responsibility collapses a path to its start") {
  GridMap map = map_from_ascii({"....."});
  VisibilityIndex index = build_visibility_index(map);
  ProblemInstance problem{&map, {Cell{0, 0}, Cell{0, 4}}, std::nullopt};
  Solution sol;
  sol.paths = {{{0, 0}, {0, 1}, {0, 2}}, {{0, 4}}};
  sol.path_costs = {2, 0};
  sol.makespan = 2;
  Solution improved = improve(sol, problem, index,
                              SolverConfig::defaults_for(Algorithm::Cp3));
  CHECK(improved.makespan == 0);
  CHECK(improved.paths[0] == std::vector<Cell>{{0, 0}});
}

TEST_CASE("improve: already-optimal solutions stay unchanged in cost") {
  auto suite = mwrp::testing::build_oracle_suite(6, 6400);
  for (const auto& inst : suite) {
    VisibilityIndex index = build_visibility_index(inst.map);
    ProblemInstance problem{&inst.map, inst.starts, std::nullopt};
    Solution opt =
        solve(problem, index, SolverConfig::defaults_for(Algorithm::Cp3));
    REQUIRE(opt.found);
    Solution post = improve(opt, problem, index,
                            SolverConfig::defaults_for(Algorithm::Cp3));
    CHECK(post.makespan == opt.makespan);
    CHECK(verify_solution(inst.map, inst.starts, post.paths).valid);
  }
}

TEST_CASE("improve: single-agent improve recovers the optimum") {
  auto suite = mwrp::testing::build_oracle_suite(10, 7200);
  for (const auto& inst : suite) {
    if (inst.starts.size() != 1) continue;
    VisibilityIndex index = build_visibility_index(inst.map);
    ProblemInstance problem{&inst.map, inst.starts, std::nullopt};
    SolverConfig loose = SolverConfig::defaults_for(Algorithm::Mxw);
    loose.w = {5, 1};
    Solution rough = solve(problem, index, loose);
    REQUIRE(rough.found);
    Solution post = improve(rough, problem, index, loose);
    CHECK(post.makespan == inst.optimal);
    CHECK(verify_solution(inst.map, inst.starts, post.paths).valid);
  }
}

TEST_CASE("improve: never raises the makespan and always verifies") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    GridMap map = generate_map(MapStyle::Maze, 13, 13, 0.0, 100 + seed);
    VisibilityIndex index = build_visibility_index(map);
    std::vector<Cell> starts = sample_border_starts(map, 3, seed);
    ProblemInstance problem{&map, starts, std::nullopt};
    SolverConfig cfg = SolverConfig::defaults_for(Algorithm::Mxw);
    cfg.w = {2, 1};
    Solution before = solve(problem, index, cfg);
    REQUIRE(before.found);
    Solution after = improve(before, problem, index, cfg);
    CHECK(after.makespan <= before.makespan);
    CHECK(verify_solution(map, starts, after.paths).valid);
  }
}
