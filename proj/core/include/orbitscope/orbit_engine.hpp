#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitscope/graph.hpp"
#include "orbitscope/partition.hpp"
#include "orbitscope/permutation.hpp"
#include "orbitscope/refinement.hpp"

namespace orbitscope {

// Order in which vertices are offered for fixation.
enum class FixStrategy {
  kLeastFixed,  // (fixation count, class size, class id, vertex id)
  kMinClass,    // (class size, class id, vertex id)
  kFirst,       // (class id, vertex id)
};

const char* to_string(FixStrategy s);
std::optional<FixStrategy> parse_fix_strategy(std::string_view name);

struct EngineConfig {
  RefinementConfig refinement;
  FixStrategy strategy = FixStrategy::kLeastFixed;
  // Fresh fix sequences compute_orbits may try; nullopt means n - 1, the
  // most automorphic partitions a join chain can need.
  std::optional<std::size_t> budget;
  // Levels of nested verification; nullopt means ceil(log2 n) + 1.
  std::optional<std::size_t> depth_budget;
  // Search nodes one isomorphism search may expand before giving up.
  std::size_t search_node_limit = 20000;
};

struct RunStats {
  std::uint64_t refine_calls = 0;
  std::uint64_t canonical_form_calls = 0;
  std::uint64_t verify_tree_nodes = 0;
  std::uint64_t verify_tree_depth_max = 0;
  // Diagnostics: verifications skipped for lack of depth budget, and
  // searches cut off by search_node_limit.
  std::uint64_t depth_budget_hits = 0;
  std::uint64_t search_limit_hits = 0;
};

// A refined, individualized view of a base graph: the graph R(x1..xk).
struct StageGraph {
  const Graph* base = nullptr;
  std::vector<VertexId> fixes;
  StableColoring coloring;

  bool discrete() const { return is_discrete(coloring.vertex_partition); }
};

enum class OrbitStatus {
  kCertified,   // partition is exactly the automorphism orbit partition
  kLowerBound,  // partition is an automorphic partition; may be too fine
};

const char* to_string(OrbitStatus s);

struct OrbitSystem {
  // Accumulated automorphic partition, classes ordered by minimum element.
  OrderedPartition partition;
  std::vector<Permutation> generators;
  OrbitStatus status = OrbitStatus::kLowerBound;
  RunStats stats;
};

// Per-vertex fixation counts shared across one engine run.
using FixHistory = std::vector<std::uint32_t>;

// Candidate fix vertices (members of non-singleton classes) in strategy
// order. Empty iff the stage is discrete.
std::vector<VertexId> fix_order(const StageGraph& stage, std::span<const std::uint32_t> history,
                                FixStrategy strategy);

// First vertex of fix_order. Throws NoCandidate on a discrete stage.
VertexId pick_fix_vertex(const StageGraph& stage, std::span<const std::uint32_t> history,
                         FixStrategy strategy);

// Base graph matrix in canonical vertex order, prefixed by the class
// signatures and the refinement trace. Throws NotDiscrete.
std::string canonical_form_discrete(const StageGraph& stage);

// The class-order bijection s1 -> s2, returned only if the canonical forms
// agree and the map is verified entrywise on the base graphs.
std::optional<Permutation> extract_isomorphism(const StageGraph& s1, const StageGraph& s2);

// Drives the orbit search on one graph. Not thread-safe; cheap to create.
class OrbitEngine {
 public:
  // Keeps a reference to g, which must outlive the engine.
  OrbitEngine(const Graph& g, EngineConfig cfg);
  OrbitEngine(Graph&&, EngineConfig) = delete;

  const Graph& graph() const { return *g_; }
  const EngineConfig& config() const { return cfg_; }
  const RunStats& stats() const { return *stats_; }
  const FixHistory& history() const { return history_; }

  // Refinement of the base graph with the given fixes, counted in stats.
  StageGraph stage(std::span<const VertexId> fixes);

  // Extends the fix sequence until the stage is non-discrete but every
  // single further individualization is discrete. `seed`, if it sits in a
  // non-singleton class, becomes the first fix. Returns the unrefined
  // stage when the base refinement is already discrete.
  StageGraph find_regular_stage(std::optional<VertexId> seed = std::nullopt);

  struct StageOrbits {
    OrderedPartition partition;
    std::vector<Permutation> generators;
  };
  // Orbits of the regular stage's automorphism group, read off by grouping
  // the one-step individualizations by canonical form.
  StageOrbits stage_orbits(const StageGraph& stage);

  // Verification of one candidate merge: searches for an automorphism of
  // the base graph taking min(O1) to min(O2). A nullopt result is not a
  // proof that none exists.
  std::optional<Permutation> verify_merge(const OrderedPartition& q, ClassId o1, ClassId o2);

  OrbitSystem compute_orbits();

  // Searches for an automorphism of the base graph mapping fixes_a to
  // fixes_b pointwise. `target_orbits`, when given, must be an automorphic
  // partition of the stabilizer of fixes_b; it prunes the first branching.
  // Sets *exhausted to true iff the search space was fully explored.
  std::optional<Permutation> match_fixes(std::span<const VertexId> fixes_a,
                                         std::span<const VertexId> fixes_b,
                                         const OrderedPartition* target_orbits,
                                         bool* exhausted);

 private:
  OrbitEngine(const Graph& g, EngineConfig cfg, RunStats* shared, std::size_t level,
              std::size_t depth_budget);

  struct SearchState;
  std::optional<Permutation> match_node(SearchState& st, std::vector<VertexId>& fixes_a,
                                        std::vector<VertexId>& fixes_b,
                                        const OrderedPartition* target_orbits);
  bool absorb(const Permutation& perm);
  bool iterate(std::size_t iteration);
  bool verify_pass();
  void note_fixes(std::span<const VertexId> fixes);

  const Graph* g_;
  EngineConfig cfg_;
  RunStats own_stats_;
  RunStats* stats_;
  std::size_t level_ = 0;
  std::size_t depth_budget_ = 0;
  FixHistory history_;

  std::optional<StableColoring> base_coloring_;
  OrderedPartition q_;
  std::vector<Permutation> generators_;
  // One-step individualizations computed while certifying the last
  // regular stage, reused by stage_orbits.
  std::vector<VertexId> regular_fixes_;
  std::map<VertexId, StableColoring> regular_children_;
  std::map<std::pair<VertexId, VertexId>, bool> failed_pairs_;
};

// Convenience wrapper: OrbitEngine(g, cfg).compute_orbits().
OrbitSystem compute_orbits(const Graph& g, const EngineConfig& cfg = {});

}  // namespace orbitscope
