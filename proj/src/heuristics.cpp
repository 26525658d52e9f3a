#include "mwrp/heuristics.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mwrp {

namespace {
constexpr int32_t kInf32 = std::numeric_limits<int32_t>::max() / 4;
constexpr int64_t kInf64 = std::numeric_limits<int64_t>::max() / 4;
}  // namespace

Weight Weight::parse(const std::string& text) {
  auto fail = [&] { throw std::runtime_error("bad weight: '" + text + "'"); };
  Weight w;
  size_t slash = text.find('/');
  size_t dot = text.find('.');
  try {
    if (slash != std::string::npos) {
      w.num = std::stoll(text.substr(0, slash));
      w.den = std::stoll(text.substr(slash + 1));
    } else if (dot != std::string::npos) {
      std::string frac = text.substr(dot + 1);
      if (frac.empty()) fail();
      w.num = std::stoll(text.substr(0, dot));
      w.den = 1;
      for (char ch : frac) {
        if (ch < '0' || ch > '9') fail();
        w.num = w.num * 10 + (ch - '0');
        w.den *= 10;
      }
    } else {
      w.num = std::stoll(text);
      w.den = 1;
    }
  } catch (const std::logic_error&) {
    fail();
  }
  if (w.den <= 0 || w.num < w.den) fail();  // require w >= 1
  int64_t g = std::gcd(w.num, w.den);
  w.num /= g;
  w.den /= g;
  return w;
}

std::string Weight::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

HeurContext HeurContext::build(const GridMap& map, const VisibilityIndex& index,
                               const Bitset& reduced_unseen, bool parallel) {
  HeurContext ctx;
  ctx.map = &map;
  ctx.index = &index;
  ctx.u_cells.clear();
  reduced_unseen.for_each(
      [&](int id) { ctx.u_cells.push_back(static_cast<CellId>(id)); });

  const int num_u = ctx.num_u();
  const int num_c = map.num_free();
  ctx.fields.assign(static_cast<size_t>(num_u) * num_c, kUnreachable);
  ctx.watcher_count.assign(num_u, 0);

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int u = 0; u < num_u; ++u) {
    DistField field = bfs_dist_field(map, index.watchers[ctx.u_cells[u]]);
    std::copy(field.dist.begin(), field.dist.end(),
              ctx.fields.begin() + static_cast<size_t>(u) * num_c);
    ctx.watcher_count[u] = index.watchers[ctx.u_cells[u]].count();
  }

  ctx.sees_u.assign(num_c, Bitset(num_u));
#pragma omp parallel for schedule(static) if (parallel)
  for (int c = 0; c < num_c; ++c) {
    const Bitset& los = index.los[c];
    for (int u = 0; u < num_u; ++u)
      if (los.test(ctx.u_cells[u])) ctx.sees_u[c].set(u);
  }
  return ctx;
}

int64_t singleton_value(const Bitset& residual,
                        std::span<const AgentView> live_agents,
                        const HeurContext& ctx, Weight w) {
  assert(residual.any());
  assert(!live_agents.empty());
  int64_t best = 0;
  residual.for_each([&](int u) {
    int64_t lowest = kInf64;
    for (const AgentView& a : live_agents) {
      int64_t v = w.den * int64_t{a.cost} + w.num * int64_t{ctx.field(u, a.loc)};
      if (v < lowest) lowest = v;
    }
    if (lowest > best) best = lowest;
  });
  return best;
}

std::vector<int> select_pivots(const Bitset& residual, const HeurContext& ctx,
                               int pivot_cap) {
  std::vector<int> cand = residual.to_indices();
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    return ctx.watcher_count[a] < ctx.watcher_count[b];
  });
  Bitset taken(ctx.map->num_free());
  std::vector<int> out;
  for (int u : cand) {
    if (static_cast<int>(out.size()) >= pivot_cap) break;
    const Bitset& w = ctx.index->watchers[ctx.u_cells[u]];
    if (!w.intersects(taken)) {
      out.push_back(u);
      taken |= w;
    }
  }
  return out;
}

GdlsGraph GdlsGraph::make(std::vector<int32_t> agent_g,
                          std::vector<int32_t> agent_pivot,
                          std::vector<int32_t> pivot_pivot) {
  GdlsGraph g;
  g.agent_g = std::move(agent_g);
  g.agent_pivot = std::move(agent_pivot);
  g.pivot_pivot = std::move(pivot_pivot);
  size_t p = g.agent_g.empty() ? 0 : g.agent_pivot.size() / g.agent_g.size();
  g.pivot_cells.assign(p, kNoCell);
  assert(g.pivot_pivot.size() == p * p);
  return g;
}

GdlsGraph build_gdls(std::span<const AgentView> live_agents,
                     const std::vector<int>& pivots, const HeurContext& ctx) {
  GdlsGraph g;
  const int num_live = static_cast<int>(live_agents.size());
  const int num_p = static_cast<int>(pivots.size());
  g.agent_g.reserve(num_live);
  for (const AgentView& a : live_agents) g.agent_g.push_back(a.cost);
  g.pivot_cells.reserve(num_p);
  for (int u : pivots) g.pivot_cells.push_back(ctx.u_cells[u]);

  g.agent_pivot.assign(static_cast<size_t>(num_live) * num_p, 0);
  for (int a = 0; a < num_live; ++a)
    for (int p = 0; p < num_p; ++p)
      g.agent_pivot[static_cast<size_t>(a) * num_p + p] =
          ctx.field(pivots[p], live_agents[a].loc);

  g.pivot_pivot.assign(static_cast<size_t>(num_p) * num_p, 0);
  for (int i = 0; i < num_p; ++i) {
    for (int j = i + 1; j < num_p; ++j) {
      int32_t best = kInf32;
      ctx.index->watchers[ctx.u_cells[pivots[j]]].for_each([&](int wc) {
        int32_t d = ctx.field(pivots[i], static_cast<CellId>(wc));
        if (d < best) best = d;
      });
      g.pivot_pivot[static_cast<size_t>(i) * num_p + j] = best;
      g.pivot_pivot[static_cast<size_t>(j) * num_p + i] = best;
    }
  }
  return g;
}

GdlsGraph pivot_prune(GdlsGraph g) {
  while (g.num_pivots() >= 2) {
    const int num_p = g.num_pivots();
    const int num_a = g.num_agents();
    int64_t best = 0;
    int victim = -1;
    for (int i = 0; i < num_p; ++i) {
      for (int j = 0; j < num_p; ++j) {
        if (j == i) continue;
        for (int a = 0; a < num_a; ++a) {
          int64_t shortcut = int64_t{g.e_ap(a, j)} -
                             (int64_t{g.e_ap(a, i)} + int64_t{g.e_pp(i, j)});
          if (shortcut > best) {
            best = shortcut;
            victim = i;
          }
        }
      }
    }
    if (victim < 0) break;

    GdlsGraph next;
    next.agent_g = g.agent_g;
    const int num_q = num_p - 1;
    next.pivot_cells.reserve(num_q);
    std::vector<int> keep;
    for (int p = 0; p < num_p; ++p)
      if (p != victim) {
        keep.push_back(p);
        next.pivot_cells.push_back(g.pivot_cells[p]);
      }
    next.agent_pivot.assign(static_cast<size_t>(num_a) * num_q, 0);
    for (int a = 0; a < num_a; ++a)
      for (int q = 0; q < num_q; ++q)
        next.agent_pivot[static_cast<size_t>(a) * num_q + q] =
            g.e_ap(a, keep[q]);
    next.pivot_pivot.assign(static_cast<size_t>(num_q) * num_q, 0);
    for (int i = 0; i < num_q; ++i)
      for (int j = 0; j < num_q; ++j)
        next.pivot_pivot[static_cast<size_t>(i) * num_q + j] =
            g.e_pp(keep[i], keep[j]);
    g = std::move(next);
  }
  return g;
}

MtspResult mtsp_solve(const GdlsGraph& g, Weight w) {
  const int num_a = g.num_agents();
  const int num_p = g.num_pivots();
  if (num_a < 1)
    throw std::invalid_argument("mtsp_solve: needs at least one live agent");
  if (num_p > kMaxMtspPivots)
    throw std::invalid_argument("mtsp_solve: pivot count exceeds cap");
  const int full = (1 << num_p) - 1;

  // Held-Karp open-path costs per agent: dp[mask][last] = cheapest path from
  // the agent vertex through exactly `mask`, ending at pivot `last`.
  std::vector<std::vector<int32_t>> dp(num_a);
  std::vector<std::vector<int32_t>> pathcost(
      num_a, std::vector<int32_t>(full + 1, 0));
  for (int a = 0; a < num_a; ++a) {
    if (num_p == 0) continue;
    auto& d = dp[a];
    d.assign(static_cast<size_t>(full + 1) * num_p, kInf32);
    for (int p = 0; p < num_p; ++p)
      d[(size_t{1} << p) * num_p + p] = g.e_ap(a, p);
    for (int mask = 1; mask <= full; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) < 2) continue;
      for (int last = 0; last < num_p; ++last) {
        if (!(mask >> last & 1)) continue;
        const int rest = mask ^ (1 << last);
        int32_t best = kInf32;
        for (int prev = 0; prev < num_p; ++prev) {
          if (!(rest >> prev & 1)) continue;
          int32_t v = d[static_cast<size_t>(rest) * num_p + prev] +
                      g.e_pp(prev, last);
          if (v < best) best = v;
        }
        d[static_cast<size_t>(mask) * num_p + last] = best;
      }
    }
    for (int mask = 1; mask <= full; ++mask) {
      int32_t best = kInf32;
      for (int last = 0; last < num_p; ++last)
        if (mask >> last & 1)
          best = std::min(best, d[static_cast<size_t>(mask) * num_p + last]);
      pathcost[a][mask] = best;
    }
  }

  auto term = [&](int a, int sub) {
    return w.den * int64_t{g.agent_g[a]} + w.num * int64_t{pathcost[a][sub]};
  };

  // Partition DP over agent suffixes: suf[a][mask] = optimal scaled value for
  // covering `mask` with agents a..num_a-1 (each agent's own g-term counts
  // even when its share is empty).
  std::vector<std::vector<int64_t>> suf(
      num_a + 1, std::vector<int64_t>(full + 1, kInf64));
  suf[num_a][0] = 0;
  for (int a = num_a - 1; a >= 0; --a) {
    for (int mask = 0; mask <= full; ++mask) {
      int64_t best = kInf64;
      int sub = mask;
      while (true) {
        int64_t rest = suf[a + 1][mask ^ sub];
        if (rest < kInf64) {
          int64_t v = std::max(term(a, sub), rest);
          if (v < best) best = v;
        }
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      suf[a][mask] = best;
    }
  }

  MtspResult res;
  res.f_scaled = suf[0][full];
  res.per_agent_h.assign(num_a, 0);
  res.assignment.assign(num_a, {});

  // Forward recovery, choosing the smallest subset (as a bitmask) per agent
  // among optimal splits, which makes the reported assignment deterministic.
  int remaining = full;
  for (int a = 0; a < num_a; ++a) {
    const int64_t target = suf[a][remaining];
    int chosen = -1;
    for (int sub = 0; sub <= remaining; ++sub) {
      if ((sub & remaining) != sub) continue;
      int64_t rest = suf[a + 1][remaining ^ sub];
      if (rest >= kInf64) continue;
      if (std::max(term(a, sub), rest) == target) {
        chosen = sub;
        break;
      }
    }
    assert(chosen >= 0);
    res.per_agent_h[a] = pathcost[a][chosen];

    if (chosen) {
      const auto& d = dp[a];
      int mask = chosen;
      int last = -1;
      int32_t best = kInf32;
      for (int p = 0; p < num_p; ++p) {
        if (!(mask >> p & 1)) continue;
        int32_t v = d[static_cast<size_t>(mask) * num_p + p];
        if (v < best) {
          best = v;
          last = p;
        }
      }
      std::vector<int> order;
      while (true) {
        order.push_back(last);
        const int rest = mask ^ (1 << last);
        if (rest == 0) break;
        const int32_t need = d[static_cast<size_t>(mask) * num_p + last];
        int prev = -1;
        for (int p = 0; p < num_p; ++p) {
          if (!(rest >> p & 1)) continue;
          if (d[static_cast<size_t>(rest) * num_p + p] + g.e_pp(p, last) ==
              need) {
            prev = p;
            break;
          }
        }
        assert(prev >= 0);
        mask = rest;
        last = prev;
      }
      std::reverse(order.begin(), order.end());
      res.assignment[a] = std::move(order);
    }
    remaining ^= chosen;
  }
  return res;
}

}  // namespace mwrp
