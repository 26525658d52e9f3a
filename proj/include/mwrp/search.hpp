#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mwrp/grid.hpp"
#include "mwrp/heuristics.hpp"
#include "mwrp/reduction.hpp"
#include "mwrp/visibility.hpp"

namespace mwrp {

enum class Algorithm { Baseline, Cp3, Mxw, FocalSorc, FocalMorc };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algo);

struct SolverConfig {
  Algorithm algo = Algorithm::Cp3;
  Weight w{};      // suboptimality bound for mxw / focal (>= 1)
  bool anytime = false;
  int batch_size = 100;  // N nodes inspected per parallel heuristic batch
  int pivot_cap = 12;
  bool enable_cd = true;
  bool enable_pd = true;
  bool enable_pivot_prune = true;
  bool enable_dominance = true;  // turning this off may only change node counts
  double time_limit_s = 0.0;     // 0 = unlimited
  uint64_t seed = 0;
  bool parallel = true;

  // Baseline is the plain lazy-evaluation search: reductions, pivot pruning
  // and batching all off (N = 1). Everything else keeps the enhancements.
  static SolverConfig defaults_for(Algorithm algo);
};

struct SearchStats {
  int64_t expansions = 0;
  int64_t generated = 0;
  int64_t mtsp_calls = 0;
  int64_t dominance_prunes = 0;
  int64_t batches = 0;
  ReductionStats reduction;
  double runtime_ms = 0.0;
};

struct AnytimePoint {
  double t_ms = 0.0;
  int cost = 0;
};

struct Solution {
  bool found = false;
  bool proved_optimal = false;
  bool timed_out = false;
  int makespan = -1;
  std::vector<std::vector<Cell>> paths;  // one per agent, starting at S_k
  std::vector<int> path_costs;           // moves per agent
  std::string algorithm;
  Weight w{};
  bool anytime = false;
  SearchStats stats;
  std::vector<AnytimePoint> anytime_trace;
};

struct ProblemInstance {
  const GridMap* map = nullptr;
  std::vector<Cell> starts;
  // Cells that must be seen; unset means every free cell.
  std::optional<Bitset> unseen;

  int num_agents() const { return static_cast<int>(starts.size()); }
};

// Prunes re-generated joint states: a candidate is dropped when a stored
// node with the same agent-location tuple (terminated agents use a distinct
// token) has a subset residual set and component-wise <= costs. Insertion
// evicts stored records the new node dominates. Records reference the
// engine's node arenas instead of copying them.
class DominanceStore {
 public:
  DominanceStore(const std::vector<int32_t>& loc_arena,
                 const std::vector<int32_t>& cost_arena,
                 const std::vector<uint64_t>& residual_arena, int num_agents,
                 int residual_words);

  // The candidate must already occupy slot `node_id` in the arenas. Returns
  // true when the candidate is dominated (caller discards it); otherwise
  // stores it and appends the node ids of evicted records to `evicted`.
  bool insert_if_undominated(int32_t node_id, std::vector<int32_t>& evicted);

  int64_t size() const { return count_; }

 private:
  const std::vector<int32_t>* locs_;
  const std::vector<int32_t>* costs_;
  const std::vector<uint64_t>* residuals_;
  int num_agents_;
  int residual_words_;
  std::unordered_map<uint64_t, std::vector<int32_t>> buckets_;
  int64_t count_ = 0;
};

// Joint-space best-first search over (agent locations, costs, residual set)
// nodes with expanding-borders successors, lazy two-stage heuristic
// evaluation, and batched parallel mTSP computation. One instance per solve.
class JointSearch {
 public:
  static constexpr uint8_t kStageSingleton = 0;
  static constexpr uint8_t kStageMtsp = 1;
  static constexpr uint8_t kStageExpanded = 2;

  JointSearch(const ProblemInstance& problem, const VisibilityIndex& index,
              SolverConfig config);

  Solution run();

  // --- white-box hooks used by the test suites ---
  struct NodeView {
    std::vector<int32_t> locs;  // kNoCell = terminated
    std::vector<int32_t> costs;
    std::vector<Cell> residual;  // remaining unseen cells
    int64_t f = 0;
    int32_t g = 0;
    int stage = 0;
    bool pruned = false;
  };

  int make_root();
  // Runs the mTSP stage on a node if needed, then expands it and returns the
  // surviving child ids.
  std::vector<int> expand_for_test(int id);
  NodeView view(int id) const;
  const HeurContext& heur_context() const { return ctx_; }
  const Bitset& reduced_unseen() const { return reduced_; }
  const ReductionStats& reduction_stats() const { return red_stats_; }

 private:
  struct Node {
    int32_t parent = -1;
    int64_t f = 0;
    int32_t g = 0;
    int32_t sorc = 0;
    int32_t morc = 0;
    uint32_t epoch = 0;
    uint8_t stage = kStageSingleton;
    bool pruned = false;
  };
  struct Entry {
    int64_t f;
    int32_t g;
    uint32_t seq;
    int32_t id;
    uint32_t epoch;
  };
  struct MtspEval {
    int64_t f;
    int32_t sorc;
    int32_t morc;
  };

  // arena accessors
  std::span<const int32_t> locs_of(int32_t id) const;
  std::span<const int32_t> costs_of(int32_t id) const;
  std::span<const uint64_t> rwords_of(int32_t id) const;
  bool residual_empty(int32_t id) const;
  Bitset residual_bitset(int32_t id) const;

  int32_t append_node(int32_t parent, std::span<const int32_t> locs,
                      std::span<const int32_t> costs,
                      std::span<const uint64_t> rwords);
  void pop_last_node();

  std::vector<AgentView> live_agents(int32_t id) const;
  int64_t singleton_f(int32_t id) const;
  MtspEval mtsp_f(int32_t id) const;

  void push_open(int32_t id);
  bool entry_valid(const Entry& e) const;
  void drop_invalid_tops();
  bool anytime_pruned(int32_t id) const;

  const DistField& dist_from(CellId loc);
  void expand(int32_t id);
  void batch_evaluate();
  void upgrade_for_focal();

  void record_incumbent(int32_t goal);
  Solution build_solution(int32_t goal, bool proved, bool timed_out);
  Solution no_solution(bool timed_out);
  bool time_exceeded() const;
  double elapsed_ms() const;

  Solution run_best_first();
  Solution run_focal();

  const GridMap& map_;
  const VisibilityIndex& index_;
  SolverConfig cfg_;
  std::vector<Cell> starts_;
  int num_agents_;
  Weight prio_w_;   // {1,1} in plain modes, cfg.w for mxw
  bool weighted_;   // mxw priorities

  Bitset reduced_;
  ReductionStats red_stats_;
  HeurContext ctx_;
  int num_u_ = 0;
  int r_words_ = 0;

  std::vector<Node> nodes_;
  std::vector<int32_t> loc_arena_;
  std::vector<int32_t> cost_arena_;
  std::vector<uint64_t> r_arena_;

  std::vector<Entry> open_;
  uint32_t seq_ = 0;

  DominanceStore dom_;
  std::vector<int32_t> evicted_scratch_;
  std::unordered_map<CellId, DistField> dist_cache_;

  SearchStats stats_;
  std::vector<AnytimePoint> trace_;
  int64_t incumbent_cost_ = -1;  // -1 = none
  int32_t incumbent_goal_ = -1;
  Solution incumbent_solution_;

  std::chrono::steady_clock::time_point t_start_;
  int root_id_ = -1;
};

Solution solve(const ProblemInstance& problem, const VisibilityIndex& index,
               const SolverConfig& config);
// Convenience overload that builds the visibility index itself.
Solution solve(const ProblemInstance& problem, const SolverConfig& config);

}  // namespace mwrp
