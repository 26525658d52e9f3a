#include "mwrp/search.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace mwrp {

namespace {

constexpr int64_t kInf64 = std::numeric_limits<int64_t>::max() / 4;

uint64_t fnv1a(const int32_t* data, int n) {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i) {
    uint32_t v = static_cast<uint32_t>(data[i]);
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

// Heap order: lowest f first, ties broken toward higher g, then LIFO.
struct EntryWorse {
  template <typename E>
  bool operator()(const E& a, const E& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    return a.seq < b.seq;
  }
};

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "baseline") return Algorithm::Baseline;
  if (name == "cp3") return Algorithm::Cp3;
  if (name == "mxw") return Algorithm::Mxw;
  if (name == "focal-sorc") return Algorithm::FocalSorc;
  if (name == "focal-morc") return Algorithm::FocalMorc;
  throw std::runtime_error("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Baseline: return "baseline";
    case Algorithm::Cp3: return "cp3";
    case Algorithm::Mxw: return "mxw";
    case Algorithm::FocalSorc: return "focal-sorc";
    case Algorithm::FocalMorc: return "focal-morc";
  }
  return "?";
}

SolverConfig SolverConfig::defaults_for(Algorithm algo) {
  SolverConfig cfg;
  cfg.algo = algo;
  if (algo == Algorithm::Baseline) {
    cfg.enable_cd = false;
    cfg.enable_pd = false;
    cfg.enable_pivot_prune = false;
    cfg.batch_size = 1;
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// DominanceStore

DominanceStore::DominanceStore(const std::vector<int32_t>& loc_arena,
                               const std::vector<int32_t>& cost_arena,
                               const std::vector<uint64_t>& residual_arena,
                               int num_agents, int residual_words)
    : locs_(&loc_arena),
      costs_(&cost_arena),
      residuals_(&residual_arena),
      num_agents_(num_agents),
      residual_words_(residual_words) {}

bool DominanceStore::insert_if_undominated(int32_t node_id,
                                           std::vector<int32_t>& evicted) {
  const size_t lbase = static_cast<size_t>(node_id) * num_agents_;
  const size_t rbase = static_cast<size_t>(node_id) * residual_words_;
  const int32_t* cand_loc = locs_->data() + lbase;
  const int32_t* cand_cost = costs_->data() + lbase;
  const uint64_t* cand_r = residuals_->data() + rbase;

  auto& bucket = buckets_[fnv1a(cand_loc, num_agents_)];

  auto same_locs = [&](int32_t other) {
    const int32_t* ol =
        locs_->data() + static_cast<size_t>(other) * num_agents_;
    for (int k = 0; k < num_agents_; ++k)
      if (ol[k] != cand_loc[k]) return false;
    return true;
  };
  auto r_subset = [&](int32_t a, const uint64_t* b_r) {
    const uint64_t* a_r =
        residuals_->data() + static_cast<size_t>(a) * residual_words_;
    for (int i = 0; i < residual_words_; ++i)
      if (a_r[i] & ~b_r[i]) return false;
    return true;
  };
  auto costs_le = [&](const int32_t* a, const int32_t* b) {
    for (int k = 0; k < num_agents_; ++k)
      if (a[k] > b[k]) return false;
    return true;
  };

  for (int32_t other : bucket) {
    if (!same_locs(other)) continue;
    const int32_t* oc =
        costs_->data() + static_cast<size_t>(other) * num_agents_;
    if (r_subset(other, cand_r) && costs_le(oc, cand_cost)) return true;
  }

  for (size_t i = 0; i < bucket.size();) {
    int32_t other = bucket[i];
    bool dominated = false;
    if (same_locs(other)) {
      const int32_t* oc =
          costs_->data() + static_cast<size_t>(other) * num_agents_;
      const uint64_t* orr =
          residuals_->data() + static_cast<size_t>(other) * residual_words_;
      bool sub = true;
      for (int wi = 0; wi < residual_words_; ++wi)
        if (cand_r[wi] & ~orr[wi]) {
          sub = false;
          break;
        }
      dominated = sub && costs_le(cand_cost, oc);
    }
    if (dominated) {
      evicted.push_back(other);
      bucket[i] = bucket.back();
      bucket.pop_back();
      --count_;
    } else {
      ++i;
    }
  }

  bucket.push_back(node_id);
  ++count_;
  return false;
}

// ---------------------------------------------------------------------------
// JointSearch

JointSearch::JointSearch(const ProblemInstance& problem,
                         const VisibilityIndex& index, SolverConfig config)
    : map_(*problem.map),
      index_(index),
      cfg_(config),
      starts_(problem.starts),
      num_agents_(problem.num_agents()),
      dom_(loc_arena_, cost_arena_, r_arena_, problem.num_agents(), 0) {
  t_start_ = std::chrono::steady_clock::now();
  if (num_agents_ < 1) throw std::runtime_error("need at least one agent");
  for (Cell s : starts_)
    if (!map_.is_free(s)) throw std::runtime_error("start is not a free cell");
  if (cfg_.w.num < cfg_.w.den) throw std::runtime_error("weight must be >= 1");
  if (cfg_.batch_size < 1) throw std::runtime_error("batch size must be >= 1");

  weighted_ = cfg_.algo == Algorithm::Mxw;
  prio_w_ = weighted_ ? cfg_.w : Weight{1, 1};

  Bitset unseen = problem.unseen ? *problem.unseen : map_.full_cellset();
  Bitset start_los(map_.num_free());
  for (Cell s : starts_) start_los |= index_.los[map_.id_of(s)];
  unseen.and_not(start_los);

  auto [red, stats] = cpd(unseen, starts_, map_, index_, cfg_.enable_cd,
                          cfg_.enable_pd);
  reduced_ = std::move(red);
  red_stats_ = stats;
  stats_.reduction = red_stats_;

  ctx_ = HeurContext::build(map_, index_, reduced_, cfg_.parallel);
  num_u_ = ctx_.num_u();
  r_words_ = Bitset(num_u_).num_words();
  // Rebuild the store now that the residual width is known.
  dom_ = DominanceStore(loc_arena_, cost_arena_, r_arena_, num_agents_,
                        r_words_);
}

std::span<const int32_t> JointSearch::locs_of(int32_t id) const {
  return {loc_arena_.data() + static_cast<size_t>(id) * num_agents_,
          static_cast<size_t>(num_agents_)};
}
std::span<const int32_t> JointSearch::costs_of(int32_t id) const {
  return {cost_arena_.data() + static_cast<size_t>(id) * num_agents_,
          static_cast<size_t>(num_agents_)};
}
std::span<const uint64_t> JointSearch::rwords_of(int32_t id) const {
  return {r_arena_.data() + static_cast<size_t>(id) * r_words_,
          static_cast<size_t>(r_words_)};
}

bool JointSearch::residual_empty(int32_t id) const {
  for (uint64_t w : rwords_of(id))
    if (w) return false;
  return true;
}

Bitset JointSearch::residual_bitset(int32_t id) const {
  Bitset b(num_u_);
  auto words = rwords_of(id);
  std::copy(words.begin(), words.end(), b.words().begin());
  return b;
}

int32_t JointSearch::append_node(int32_t parent, std::span<const int32_t> locs,
                                 std::span<const int32_t> costs,
                                 std::span<const uint64_t> rwords) {
  int32_t id = static_cast<int32_t>(nodes_.size());
  Node n;
  n.parent = parent;
  int32_t g = 0;
  for (int32_t c : costs) g = std::max(g, c);
  n.g = g;
  nodes_.push_back(n);
  loc_arena_.insert(loc_arena_.end(), locs.begin(), locs.end());
  cost_arena_.insert(cost_arena_.end(), costs.begin(), costs.end());
  r_arena_.insert(r_arena_.end(), rwords.begin(), rwords.end());
  return id;
}

void JointSearch::pop_last_node() {
  nodes_.pop_back();
  loc_arena_.resize(loc_arena_.size() - num_agents_);
  cost_arena_.resize(cost_arena_.size() - num_agents_);
  r_arena_.resize(r_arena_.size() - r_words_);
}

std::vector<AgentView> JointSearch::live_agents(int32_t id) const {
  std::vector<AgentView> live;
  live.reserve(num_agents_);
  auto locs = locs_of(id);
  auto costs = costs_of(id);
  for (int k = 0; k < num_agents_; ++k)
    if (locs[k] != kNoCell) live.push_back({locs[k], costs[k]});
  return live;
}

int64_t JointSearch::singleton_f(int32_t id) const {
  const Node& n = nodes_[id];
  int64_t f;
  if (residual_empty(id)) {
    f = prio_w_.den * int64_t{n.g};
  } else {
    std::vector<AgentView> live = live_agents(id);
    if (live.empty()) return kInf64;
    f = singleton_value(residual_bitset(id), live, ctx_, prio_w_);
  }
  if (!weighted_ && n.parent >= 0) f = pathmax(f, nodes_[n.parent].f);
  return f;
}

JointSearch::MtspEval JointSearch::mtsp_f(int32_t id) const {
  const Node& n = nodes_[id];
  MtspEval ev{prio_w_.den * int64_t{n.g}, 0, 0};
  if (!residual_empty(id)) {
    std::vector<AgentView> live = live_agents(id);
    if (live.empty()) return {kInf64, 0, 0};
    std::vector<int> pivots =
        select_pivots(residual_bitset(id), ctx_, cfg_.pivot_cap);
    GdlsGraph g = build_gdls(live, pivots, ctx_);
    if (cfg_.enable_pivot_prune) g = pivot_prune(std::move(g));
    MtspResult res = mtsp_solve(g, prio_w_);
    ev.f = std::max(ev.f, res.f_scaled);
    for (int32_t h : res.per_agent_h) {
      ev.sorc += h;
      ev.morc = std::max(ev.morc, h);
    }
  }
  if (!weighted_ && n.parent >= 0) ev.f = pathmax(ev.f, nodes_[n.parent].f);
  return ev;
}

void JointSearch::push_open(int32_t id) {
  const Node& n = nodes_[id];
  open_.push_back({n.f, n.g, seq_++, id, n.epoch});
  std::push_heap(open_.begin(), open_.end(), EntryWorse{});
}

bool JointSearch::anytime_pruned(int32_t id) const {
  if (!cfg_.anytime || incumbent_cost_ < 0) return false;
  const Node& n = nodes_[id];
  const int64_t bound = incumbent_cost_ * (weighted_ ? prio_w_.num : 1);
  return n.f >= bound || n.g >= incumbent_cost_;
}

bool JointSearch::entry_valid(const Entry& e) const {
  const Node& n = nodes_[e.id];
  if (n.epoch != e.epoch || n.pruned) return false;
  return !anytime_pruned(e.id);
}

void JointSearch::drop_invalid_tops() {
  while (!open_.empty() && !entry_valid(open_.front())) {
    std::pop_heap(open_.begin(), open_.end(), EntryWorse{});
    open_.pop_back();
  }
}

const DistField& JointSearch::dist_from(CellId loc) {
  auto it = dist_cache_.find(loc);
  if (it == dist_cache_.end()) {
    it = dist_cache_
             .emplace(loc, bfs_dist_field(map_, std::vector<Cell>{
                                                    map_.cell_of(loc)}))
             .first;
  }
  return it->second;
}

int JointSearch::make_root() {
  if (root_id_ >= 0) return root_id_;
  std::vector<int32_t> locs(num_agents_), costs(num_agents_, 0);
  for (int k = 0; k < num_agents_; ++k) locs[k] = map_.id_of(starts_[k]);

  Bitset r(num_u_);
  for (int u = 0; u < num_u_; ++u) r.set(u);
  for (int k = 0; k < num_agents_; ++k) r.and_not(ctx_.sees_u[locs[k]]);

  root_id_ = append_node(-1, locs, costs, r.words());
  nodes_[root_id_].f = singleton_f(root_id_);
  if (cfg_.enable_dominance) {
    evicted_scratch_.clear();
    dom_.insert_if_undominated(root_id_, evicted_scratch_);
  }
  push_open(root_id_);
  return root_id_;
}

void JointSearch::expand(int32_t id) {
  ++stats_.expansions;
  nodes_[id].stage = kStageExpanded;

  const Bitset r = residual_bitset(id);
  Bitset border(map_.num_free());
  r.for_each([&](int u) { border |= index_.watchers[ctx_.u_cells[u]]; });

  struct State {
    CellId loc;
    int32_t cost;
  };
  std::vector<int32_t> parent_locs(locs_of(id).begin(), locs_of(id).end());
  std::vector<int32_t> parent_costs(costs_of(id).begin(), costs_of(id).end());
  std::vector<std::vector<State>> states(num_agents_);
  for (int k = 0; k < num_agents_; ++k) {
    if (parent_locs[k] == kNoCell) continue;
    const DistField& df = dist_from(parent_locs[k]);
    auto& sk = states[k];
    border.for_each([&](int w) {
      if (ctx_.sees_u[w].intersects(r))
        sk.push_back({static_cast<CellId>(w), parent_costs[k] + df.dist[w]});
    });
  }

  // Cartesian product; choice index == states[k].size() means TERMINATE for a
  // live agent. Terminated agents carry a single frozen choice.
  std::vector<int> num_choices(num_agents_), choice(num_agents_, 0);
  for (int k = 0; k < num_agents_; ++k)
    num_choices[k] =
        parent_locs[k] == kNoCell ? 1 : static_cast<int>(states[k].size()) + 1;

  std::vector<int32_t> clocs(num_agents_), ccosts(num_agents_);
  Bitset child_r(num_u_);
  while (true) {
    bool all_term = true;
    for (int k = 0; k < num_agents_; ++k) {
      if (parent_locs[k] == kNoCell ||
          choice[k] == static_cast<int>(states[k].size())) {
        clocs[k] = kNoCell;
        ccosts[k] = parent_costs[k];
      } else {
        clocs[k] = states[k][choice[k]].loc;
        ccosts[k] = states[k][choice[k]].cost;
        all_term = false;
      }
    }
    if (!all_term) {
      ++stats_.generated;
      std::copy(rwords_of(id).begin(), rwords_of(id).end(),
                child_r.words().begin());
      for (int k = 0; k < num_agents_; ++k)
        if (clocs[k] != kNoCell) child_r.and_not(ctx_.sees_u[clocs[k]]);

      int32_t cid = append_node(id, clocs, ccosts, child_r.words());
      bool keep = true;
      if (cfg_.enable_dominance) {
        evicted_scratch_.clear();
        if (dom_.insert_if_undominated(cid, evicted_scratch_)) {
          ++stats_.dominance_prunes;
          pop_last_node();
          keep = false;
        } else {
          for (int32_t victim : evicted_scratch_) {
            nodes_[victim].pruned = true;
            ++nodes_[victim].epoch;
            ++stats_.dominance_prunes;
          }
        }
      }
      if (keep) {
        nodes_[cid].f = singleton_f(cid);
        if (cfg_.anytime && incumbent_cost_ >= 0 && anytime_pruned(cid)) {
          nodes_[cid].pruned = true;
        } else {
          push_open(cid);
        }
      }
    }

    int k = num_agents_ - 1;
    while (k >= 0 && ++choice[k] == num_choices[k]) choice[k--] = 0;
    if (k < 0) break;
  }
}

void JointSearch::batch_evaluate() {
  std::vector<int32_t> stash;
  stash.reserve(cfg_.batch_size);
  while (static_cast<int>(stash.size()) < cfg_.batch_size) {
    drop_invalid_tops();
    if (open_.empty()) break;
    stash.push_back(open_.front().id);
    std::pop_heap(open_.begin(), open_.end(), EntryWorse{});
    open_.pop_back();
  }

  std::vector<int32_t> singles;
  for (int32_t id : stash)
    if (nodes_[id].stage == kStageSingleton) singles.push_back(id);

  std::vector<MtspEval> evals(singles.size());
  const int count = static_cast<int>(singles.size());
#pragma omp parallel for schedule(dynamic, 1) if (cfg_.parallel && count > 1)
  for (int i = 0; i < count; ++i) evals[i] = mtsp_f(singles[i]);

  for (int i = 0; i < count; ++i) {
    Node& n = nodes_[singles[i]];
    n.stage = kStageMtsp;
    n.f = evals[i].f;
    n.sorc = evals[i].sorc;
    n.morc = evals[i].morc;
    ++n.epoch;
  }
  stats_.mtsp_calls += count;
  ++stats_.batches;
  for (int32_t id : stash)
    if (!nodes_[id].pruned) push_open(id);
}

void JointSearch::upgrade_for_focal() {
  while (true) {
    drop_invalid_tops();
    if (open_.empty()) return;
    const int64_t f_min = open_.front().f;

    std::vector<int32_t> singles;
    for (const Entry& e : open_) {
      if (!entry_valid(e)) continue;
      if (nodes_[e.id].stage != kStageSingleton) continue;
      if (e.f * cfg_.w.den <= cfg_.w.num * f_min) singles.push_back(e.id);
    }
    if (singles.empty()) return;

    std::vector<MtspEval> evals(singles.size());
    const int count = static_cast<int>(singles.size());
#pragma omp parallel for schedule(dynamic, 1) if (cfg_.parallel && count > 1)
    for (int i = 0; i < count; ++i) evals[i] = mtsp_f(singles[i]);

    for (int i = 0; i < count; ++i) {
      Node& n = nodes_[singles[i]];
      n.stage = kStageMtsp;
      n.f = evals[i].f;
      n.sorc = evals[i].sorc;
      n.morc = evals[i].morc;
      ++n.epoch;
      push_open(singles[i]);
    }
    stats_.mtsp_calls += count;
    ++stats_.batches;
  }
}

bool JointSearch::time_exceeded() const {
  if (cfg_.time_limit_s <= 0) return false;
  return elapsed_ms() > cfg_.time_limit_s * 1000.0;
}

double JointSearch::elapsed_ms() const {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t_start_)
      .count();
}

void JointSearch::record_incumbent(int32_t goal) {
  assert(incumbent_cost_ < 0 || nodes_[goal].g < incumbent_cost_);
  incumbent_cost_ = nodes_[goal].g;
  incumbent_goal_ = goal;
  trace_.push_back({elapsed_ms(), static_cast<int>(nodes_[goal].g)});
}

Solution JointSearch::no_solution(bool timed_out) {
  Solution s;
  s.found = false;
  s.timed_out = timed_out;
  stats_.runtime_ms = elapsed_ms();
  s.stats = stats_;
  return s;
}

Solution JointSearch::build_solution(int32_t goal, bool proved,
                                     bool timed_out) {
  Solution s;
  s.found = true;
  s.proved_optimal = proved;
  s.timed_out = timed_out;
  s.makespan = nodes_[goal].g;

  std::vector<int32_t> chain;
  for (int32_t id = goal; id >= 0; id = nodes_[id].parent) chain.push_back(id);
  std::reverse(chain.begin(), chain.end());

  s.paths.assign(num_agents_, {});
  s.path_costs.assign(num_agents_, 0);
  for (int k = 0; k < num_agents_; ++k) {
    auto& path = s.paths[k];
    CellId at = map_.id_of(starts_[k]);
    path.push_back(starts_[k]);
    for (int32_t id : chain) {
      CellId loc = locs_of(id)[k];
      if (loc == kNoCell) break;
      if (loc == at) continue;
      // Stitch the jump with a concrete shortest path.
      std::vector<CellId> parents;
      bfs_dist_field_with_parents(map_, {map_.cell_of(at)}, parents);
      std::vector<CellId> seg;
      for (CellId cur = loc; cur != at; cur = parents[cur]) seg.push_back(cur);
      std::reverse(seg.begin(), seg.end());
      for (CellId c : seg) path.push_back(map_.cell_of(c));
      at = loc;
    }
    s.path_costs[k] = static_cast<int>(path.size()) - 1;
  }
  assert(*std::max_element(s.path_costs.begin(), s.path_costs.end()) ==
         s.makespan);

  stats_.runtime_ms = elapsed_ms();
  s.stats = stats_;
  return s;
}

Solution JointSearch::run_best_first() {
  make_root();
  while (true) {
    if (time_exceeded()) {
      if (incumbent_goal_ >= 0)
        return build_solution(incumbent_goal_, false, true);
      return no_solution(true);
    }
    drop_invalid_tops();
    if (open_.empty()) {
      if (incumbent_goal_ >= 0)
        return build_solution(incumbent_goal_, true, false);
      return no_solution(false);
    }
    const Entry top = open_.front();
    const int32_t id = top.id;
    if (residual_empty(id)) {
      std::pop_heap(open_.begin(), open_.end(), EntryWorse{});
      open_.pop_back();
      if (cfg_.anytime) {
        record_incumbent(id);
        continue;
      }
      return build_solution(id, !weighted_ || prio_w_.is_one(), false);
    }
    if (nodes_[id].stage == kStageSingleton) {
      batch_evaluate();
      continue;
    }
    std::pop_heap(open_.begin(), open_.end(), EntryWorse{});
    open_.pop_back();
    expand(id);
  }
}

Solution JointSearch::run_focal() {
  make_root();
  while (true) {
    if (time_exceeded()) {
      if (incumbent_goal_ >= 0)
        return build_solution(incumbent_goal_, false, true);
      return no_solution(true);
    }
    upgrade_for_focal();
    drop_invalid_tops();
    if (open_.empty()) {
      if (incumbent_goal_ >= 0)
        return build_solution(incumbent_goal_, true, false);
      return no_solution(false);
    }

    const int64_t f_min = open_.front().f;
    int best = -1;
    int64_t best_h = 0, best_f = 0;
    int32_t best_g = 0;
    uint32_t best_seq = 0;
    for (const Entry& e : open_) {
      if (!entry_valid(e)) continue;
      const Node& n = nodes_[e.id];
      if (n.stage != kStageMtsp) continue;
      if (e.f * cfg_.w.den > cfg_.w.num * f_min) continue;
      int64_t h = cfg_.algo == Algorithm::FocalSorc ? n.sorc : n.morc;
      bool better =
          best < 0 || h < best_h ||
          (h == best_h &&
           (e.f < best_f ||
            (e.f == best_f &&
             (e.g > best_g || (e.g == best_g && e.seq > best_seq)))));
      if (better) {
        best = e.id;
        best_h = h;
        best_f = e.f;
        best_g = e.g;
        best_seq = e.seq;
      }
    }
    assert(best >= 0);  // the f_min node itself always qualifies
    ++nodes_[best].epoch;  // consume its OPEN entry

    if (residual_empty(best)) {
      if (cfg_.anytime) {
        record_incumbent(best);
        continue;
      }
      return build_solution(best, cfg_.w.is_one(), false);
    }
    expand(best);
  }
}

Solution JointSearch::run() {
  Solution s = (cfg_.algo == Algorithm::FocalSorc ||
                cfg_.algo == Algorithm::FocalMorc)
                   ? run_focal()
                   : run_best_first();
  s.algorithm = algorithm_name(cfg_.algo);
  s.w = cfg_.w;
  s.anytime = cfg_.anytime;
  s.anytime_trace = trace_;
  return s;
}

std::vector<int> JointSearch::expand_for_test(int id) {
  if (nodes_[id].stage == kStageSingleton) {
    MtspEval ev = mtsp_f(id);
    nodes_[id].f = ev.f;
    nodes_[id].sorc = ev.sorc;
    nodes_[id].morc = ev.morc;
    nodes_[id].stage = kStageMtsp;
    ++nodes_[id].epoch;
  }
  const int32_t before = static_cast<int32_t>(nodes_.size());
  expand(id);
  std::vector<int> out;
  for (int32_t i = before; i < static_cast<int32_t>(nodes_.size()); ++i)
    out.push_back(i);
  return out;
}

JointSearch::NodeView JointSearch::view(int id) const {
  NodeView v;
  auto locs = locs_of(id);
  auto costs = costs_of(id);
  v.locs.assign(locs.begin(), locs.end());
  v.costs.assign(costs.begin(), costs.end());
  residual_bitset(id).for_each(
      [&](int u) { v.residual.push_back(map_.cell_of(ctx_.u_cells[u])); });
  v.f = nodes_[id].f;
  v.g = nodes_[id].g;
  v.stage = nodes_[id].stage;
  v.pruned = nodes_[id].pruned;
  return v;
}

Solution solve(const ProblemInstance& problem, const VisibilityIndex& index,
               const SolverConfig& config) {
  JointSearch search(problem, index, config);
  return search.run();
}

Solution solve(const ProblemInstance& problem, const SolverConfig& config) {
  VisibilityIndex index =
      build_visibility_index(*problem.map, {.parallel = config.parallel});
  return solve(problem, index, config);
}

}  // namespace mwrp
