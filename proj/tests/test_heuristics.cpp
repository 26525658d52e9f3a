#include <doctest.h>

#include <random>
#include <set>

#include "mwrp/heuristics.hpp"
#include "mwrp/rng.hpp"
#include "mwrp/visibility.hpp"
#include "oracle.hpp"

using namespace mwrp;
using mwrp::testing::brute_mtsp;
using mwrp::testing::map_from_ascii;

namespace {

GdlsGraph random_graph(std::mt19937_64& rng, int num_agents, int num_pivots) {
  std::vector<int32_t> g(num_agents), ap(num_agents * num_pivots),
      pp(num_pivots * num_pivots, 0);
  for (auto& v : g) v = static_cast<int32_t>(uniform_below(rng, 12));
  for (auto& v : ap) v = static_cast<int32_t>(uniform_below(rng, 25));
  for (int i = 0; i < num_pivots; ++i)
    for (int j = i + 1; j < num_pivots; ++j)
      pp[i * num_pivots + j] = pp[j * num_pivots + i] =
          static_cast<int32_t>(uniform_below(rng, 25));
  return GdlsGraph::make(std::move(g), std::move(ap), std::move(pp));
}

}  // namespace

TEST_CASE("Weight::parse accepts integers, ratios, and decimals") {
  CHECK(Weight::parse("2") == Weight{2, 1});
  CHECK(Weight::parse("3/2") == Weight{3, 2});
  CHECK(Weight::parse("1.5") == Weight{3, 2});
  CHECK(Weight::parse("1") == Weight{1, 1});
  CHECK(Weight::parse("10/4") == Weight{5, 2});
  CHECK_THROWS(Weight::parse("0.5"));  // below 1
  CHECK_THROWS(Weight::parse("2/0"));
  CHECK_THROWS(Weight::parse("abc"));
  CHECK(Weight::parse("3/2").str() == "3/2");
  CHECK(Weight::parse("2").str() == "2");
}

TEST_CASE("pathmax keeps f non-decreasing") {
  CHECK(pathmax(5, 7) == 7);
  CHECK(pathmax(7, 5) == 7);
}

TEST_CASE("mxw_f_scaled reproduces the two-node ordering example") {
  // Node a: per-agent (g, h) = (50, 0), (10, 40); node b: (35, 5), (45, 10).
  std::vector<int32_t> ga{50, 10}, ha{0, 40}, gb{35, 45}, hb{5, 10};
  Weight w12{6, 5};  // 1.2
  int64_t fa = mxw_f_scaled(ga, ha, w12);
  int64_t fb = mxw_f_scaled(gb, hb, w12);
  CHECK(fa == 5 * 50 + 40);  // max(250, 50 + 240) = 290
  CHECK(fb == 285);
  CHECK(fb < fa);  // b expands first at w = 1.2

  Weight w1{1, 1};
  CHECK(mxw_f_scaled(ga, ha, w1) == 50);
  CHECK(mxw_f_scaled(gb, hb, w1) == 55);
  CHECK(mxw_f_scaled(ga, ha, w1) < mxw_f_scaled(gb, hb, w1));  // a first
}

TEST_CASE("singleton_value: max over residual of min over agents") {
  GridMap map = map_from_ascii({".........."});
  HeurContext ctx;
  ctx.map = &map;
  ctx.u_cells = {0, 1};
  ctx.fields.assign(2 * map.num_free(), 0);
  ctx.fields[0] = 5;                  // dist from watchers of u0 to cell 0
  ctx.fields[map.num_free()] = 7;     // dist from watchers of u1 to cell 0
  Bitset residual(2);
  residual.set(0);
  residual.set(1);

  std::vector<AgentView> one{{0, 0}};
  CHECK(singleton_value(residual, one, ctx, {1, 1}) == 7);
  CHECK(singleton_value(residual, one, ctx, {2, 1}) == 14);

  // Agent standing on a watcher: zero remaining distance for that cell.
  Bitset only0(2);
  only0.set(0);
  ctx.fields[0] = 0;
  std::vector<AgentView> costly{{0, 9}};
  CHECK(singleton_value(only0, costly, ctx, {1, 1}) == 9);

  // Two agents: the cheaper one is taken per cell.
  ctx.fields[0] = 5;
  ctx.fields[1] = 1;                  // agent at cell 1 is closer to u0
  ctx.fields[map.num_free() + 1] = 9;
  std::vector<AgentView> two{{0, 0}, {1, 0}};
  CHECK(singleton_value(residual, two, ctx, {1, 1}) == 7);  // max(1, 7)
}

TEST_CASE("select_pivots: singleton residual and shared-watcher residual") {
  GridMap open = generate_map(MapStyle::Random, 4, 4, 0.0, 1);
  VisibilityIndex index = build_visibility_index(open);
  Bitset all = open.full_cellset();
  HeurContext ctx = HeurContext::build(open, index, all);

  Bitset one(ctx.num_u());
  one.set(5);
  CHECK(select_pivots(one, ctx, 12) == std::vector<int>{5});

  Bitset full(ctx.num_u());
  for (int u = 0; u < ctx.num_u(); ++u) full.set(u);
  // Fully open map: every watcher set intersects every other.
  CHECK(select_pivots(full, ctx, 12).size() == 1);
}

TEST_CASE("select_pivots: two stubs give two watcher-disjoint pivots") {
  GridMap map = map_from_ascii({".@@@", "...@", ".@@@", ".@@@", ".@@@",
                                "...@", ".@@@"});
  VisibilityIndex index = build_visibility_index(map);
  Bitset unseen(map.num_free());
  unseen.set(map.id_of({1, 2}));
  unseen.set(map.id_of({5, 2}));
  HeurContext ctx = HeurContext::build(map, index, unseen);

  Bitset residual(2);
  residual.set(0);
  residual.set(1);
  std::vector<int> pivots = select_pivots(residual, ctx, 12);
  REQUIRE(pivots.size() == 2);
  const Bitset& w0 = index.watchers[ctx.u_cells[pivots[0]]];
  const Bitset& w1 = index.watchers[ctx.u_cells[pivots[1]]];
  CHECK_FALSE(w0.intersects(w1));

  CHECK(select_pivots(residual, ctx, 1).size() == 1);  // cap truncates
}

TEST_CASE("build_gdls: zero edge on a watcher, symmetric pivot edges") {
  GridMap map = map_from_ascii({".@@@", "...@", ".@@@", ".@@@", ".@@@",
                                "...@", ".@@@"});
  VisibilityIndex index = build_visibility_index(map);
  Bitset unseen(map.num_free());
  unseen.set(map.id_of({1, 2}));
  unseen.set(map.id_of({5, 2}));
  HeurContext ctx = HeurContext::build(map, index, unseen);

  // Agent standing on (1,1), a watcher of the top stub tip (1,2).
  std::vector<AgentView> agents{{map.id_of({1, 1}), 3}};
  std::vector<int> pivots{0, 1};
  GdlsGraph g = build_gdls(agents, pivots, ctx);
  CHECK(g.e_ap(0, 0) == 0);
  CHECK(g.e_pp(0, 1) == g.e_pp(1, 0));
  CHECK(g.e_pp(0, 0) == 0);

  // Reversing the pivot order must give the same symmetric edge.
  std::vector<int> reversed{1, 0};
  GdlsGraph h = build_gdls(agents, reversed, ctx);
  CHECK(h.e_pp(0, 1) == g.e_pp(0, 1));
}

TEST_CASE("build_gdls edges match a brute-force min-over-watchers scan") {
  GridMap map = generate_map(MapStyle::Maze, 9, 9, 0.0, 17);
  VisibilityIndex index = build_visibility_index(map);
  Bitset unseen = map.full_cellset();
  unseen.and_not(index.los[0]);
  HeurContext ctx = HeurContext::build(map, index, unseen);
  Bitset residual(ctx.num_u());
  for (int u = 0; u < ctx.num_u(); ++u) residual.set(u);
  std::vector<int> pivots = select_pivots(residual, ctx, 6);
  REQUIRE(pivots.size() >= 2);
  std::vector<AgentView> agents{{0, 0}, {map.num_free() - 1, 2}};
  GdlsGraph g = build_gdls(agents, pivots, ctx);

  for (size_t p = 0; p < pivots.size(); ++p) {
    DistField from_w =
        bfs_dist_field(map, index.watchers[ctx.u_cells[pivots[p]]]);
    for (size_t a = 0; a < agents.size(); ++a)
      CHECK(g.e_ap(a, p) == from_w[agents[a].loc]);
    for (size_t q = 0; q < pivots.size(); ++q) {
      if (p == q) continue;
      int best = kUnreachable;
      index.watchers[ctx.u_cells[pivots[q]]].for_each(
          [&](int wc) { best = std::min(best, from_w[wc]); });
      CHECK(g.e_pp(p, q) == best);
    }
  }
}

TEST_CASE("pivot_prune: shortcut removal raises the heuristic from 7 to 15") {
  GdlsGraph g = GdlsGraph::make({0}, {15, 5}, {0, 2, 2, 0});
  CHECK(mtsp_solve(g).f_scaled == 7);  // a -> p2 -> p1 = 5 + 2
  GdlsGraph pruned = pivot_prune(g);
  REQUIRE(pruned.num_pivots() == 1);
  CHECK(pruned.e_ap(0, 0) == 15);  // p2 removed, p1 kept
  CHECK(mtsp_solve(pruned).f_scaled == 15);
}

TEST_CASE("pivot_prune: a single pivot is left untouched") {
  GdlsGraph g = GdlsGraph::make({3}, {9}, {0});
  GdlsGraph pruned = pivot_prune(g);
  CHECK(pruned.num_pivots() == 1);
  CHECK(mtsp_solve(pruned).f_scaled == 12);
}

TEST_CASE("pivot_prune can also lower the heuristic (11 to 9)") {
  // One agent, three pivots; p3 shortcuts a -> p2, removing it drops the
  // optimum from 11 to 9.
  GdlsGraph g = GdlsGraph::make({0}, {5, 8, 2},
                                {0, 4, 5,
                                 4, 0, 5,
                                 5, 5, 0});
  CHECK(mtsp_solve(g).f_scaled == 11);
  CHECK(brute_mtsp(g) == 11);
  GdlsGraph pruned = pivot_prune(g);
  REQUIRE(pruned.num_pivots() == 2);
  CHECK(mtsp_solve(pruned).f_scaled == 9);
}

TEST_CASE("pivot_prune: terminates with at least one pivot, removals bounded") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int num_p = 2 + static_cast<int>(uniform_below(rng, 5));
    GdlsGraph g = random_graph(rng, 1 + trial % 3, num_p);
    GdlsGraph pruned = pivot_prune(g);
    CHECK(pruned.num_pivots() >= 1);
    CHECK(pruned.num_pivots() <= num_p);
  }
}

TEST_CASE("mtsp_solve: no pivots reduces to the current makespan") {
  GdlsGraph g = GdlsGraph::make({4, 7, 2}, {}, {});
  MtspResult res = mtsp_solve(g);
  CHECK(res.f_scaled == 7);
  CHECK(res.per_agent_h == std::vector<int32_t>{0, 0, 0});
}

TEST_CASE("mtsp_solve: two distant pivots split across two agents") {
  // Pivot 0 next to agent 0, pivot 1 next to agent 1, crossing is expensive.
  GdlsGraph g = GdlsGraph::make({0, 0},
                                {1, 50,
                                 50, 2},
                                {0, 100, 100, 0});
  MtspResult res = mtsp_solve(g);
  CHECK(res.f_scaled == 2);
  CHECK(res.per_agent_h == std::vector<int32_t>{1, 2});
  CHECK(res.assignment[0] == std::vector<int>{0});
  CHECK(res.assignment[1] == std::vector<int>{1});
  CHECK(brute_mtsp(g) == 2);
}

TEST_CASE("mtsp_solve: Figure-style two-pivot chain costs 7") {
  GdlsGraph g = GdlsGraph::make({0}, {5, 7}, {0, 2, 2, 0});
  MtspResult res = mtsp_solve(g);
  CHECK(res.f_scaled == 7);  // a -> p1 -> p2
  CHECK(res.assignment[0] == std::vector<int>{0, 1});
  CHECK(brute_mtsp(g) == 7);
}

TEST_CASE("mtsp_solve equals brute force on 200 random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int num_a = 1 + static_cast<int>(uniform_below(rng, 3));
    int num_p = static_cast<int>(uniform_below(rng, 7));
    GdlsGraph g = random_graph(rng, num_a, num_p);

    MtspResult plain = mtsp_solve(g);
    CHECK(plain.f_scaled == brute_mtsp(g));

    Weight w = (trial % 2) ? Weight{3, 2} : Weight{2, 1};
    MtspResult weighted = mtsp_solve(g, w);
    CHECK(weighted.f_scaled == brute_mtsp(g, w));

    // w = 1 must coincide with plain mode exactly.
    CHECK(mtsp_solve(g, Weight{1, 1}).f_scaled == plain.f_scaled);

    // The assignment partitions the pivots and reproduces f.
    std::set<int> seen;
    int64_t recomputed = 0;
    for (int a = 0; a < num_a; ++a) {
      int32_t path = 0;
      int prev = -1;
      for (int p : plain.assignment[a]) {
        CHECK(seen.insert(p).second);
        path += prev < 0 ? g.e_ap(a, p) : g.e_pp(prev, p);
        prev = p;
      }
      CHECK(path == plain.per_agent_h[a]);
      recomputed = std::max(recomputed, int64_t{g.agent_g[a]} + path);
    }
    CHECK(static_cast<int>(seen.size()) == num_p);
    CHECK(recomputed == plain.f_scaled);
  }
}
