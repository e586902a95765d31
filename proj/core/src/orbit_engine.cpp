#include "orbitscope/orbit_engine.hpp"

#include <algorithm>
#include <tuple>

#include "disjoint_sets.hpp"
#include "orbitscope/errors.hpp"

namespace orbitscope {
namespace {

std::size_t default_depth_budget(std::size_t n) {
  std::size_t log = 0;
  while ((std::size_t{1} << log) < n) ++log;
  return log + 1;
}

void append_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// Maps the i-th class of a onto the i-th class of b. Both discrete.
Permutation class_order_map(const StageGraph& a, const StageGraph& b) {
  const auto& pa = a.coloring.vertex_partition;
  const auto& pb = b.coloring.vertex_partition;
  std::vector<VertexId> image(pa.size());
  for (std::size_t c = 0; c < pa.class_count(); ++c) {
    image[static_cast<std::size_t>(pa.members(static_cast<ClassId>(c)).front())] =
        pb.members(static_cast<ClassId>(c)).front();
  }
  return Permutation(std::move(image));
}

bool compatible(const StageGraph& a, const StageGraph& b) {
  return a.coloring.trace == b.coloring.trace &&
         a.coloring.vertex_partition.class_count() == b.coloring.vertex_partition.class_count();
}

std::vector<VertexId> extended(std::span<const VertexId> fixes, VertexId v) {
  std::vector<VertexId> out(fixes.begin(), fixes.end());
  out.push_back(v);
  return out;
}

}  // namespace

const char* to_string(FixStrategy s) {
  switch (s) {
    case FixStrategy::kLeastFixed: return "least_fixed";
    case FixStrategy::kMinClass: return "min_class";
    case FixStrategy::kFirst: return "first";
  }
  return "?";
}

std::optional<FixStrategy> parse_fix_strategy(std::string_view name) {
  if (name == "least_fixed") return FixStrategy::kLeastFixed;
  if (name == "min_class") return FixStrategy::kMinClass;
  if (name == "first") return FixStrategy::kFirst;
  return std::nullopt;
}

const char* to_string(OrbitStatus s) {
  return s == OrbitStatus::kCertified ? "certified" : "lower_bound";
}

std::vector<VertexId> fix_order(const StageGraph& stage, std::span<const std::uint32_t> history,
                                FixStrategy strategy) {
  const auto& p = stage.coloring.vertex_partition;
  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, VertexId>;
  std::vector<Key> keys;
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const auto members = p.members(static_cast<ClassId>(c));
    if (members.size() < 2) continue;
    for (VertexId v : members) {
      const std::uint64_t count =
          static_cast<std::size_t>(v) < history.size() ? history[static_cast<std::size_t>(v)] : 0;
      switch (strategy) {
        case FixStrategy::kLeastFixed:
          keys.emplace_back(count, members.size(), c, v);
          break;
        case FixStrategy::kMinClass:
          keys.emplace_back(members.size(), c, 0, v);
          break;
        case FixStrategy::kFirst:
          keys.emplace_back(c, 0, 0, v);
          break;
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<VertexId> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(std::get<3>(key));
  return out;
}

VertexId pick_fix_vertex(const StageGraph& stage, std::span<const std::uint32_t> history,
                         FixStrategy strategy) {
  const auto order = fix_order(stage, history, strategy);
  if (order.empty()) throw NoCandidate("stage is discrete; no vertex left to fix");
  return order.front();
}

std::string canonical_form_discrete(const StageGraph& stage) {
  if (!stage.discrete()) throw NotDiscrete("canonical form requires a discrete stage");
  const Graph& g = *stage.base;
  const auto& p = stage.coloring.vertex_partition;
  const std::size_t n = g.order();
  std::string out;
  out.reserve(16 + 8 * (n + g.color_count()) + 4 * n * n);
  append_u64(out, n);
  append_u64(out, stage.coloring.trace);
  for (std::uint64_t label : g.palette()) append_u64(out, label);
  for (std::uint64_t sig : stage.coloring.signatures) append_u64(out, sig);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId u = p.members(static_cast<ClassId>(i)).front();
    for (std::size_t j = 0; j < n; ++j) {
      append_u32(out, g.at(u, p.members(static_cast<ClassId>(j)).front()));
    }
  }
  return out;
}

std::optional<Permutation> extract_isomorphism(const StageGraph& s1, const StageGraph& s2) {
  if (!s1.discrete() || !s2.discrete()) {
    throw NotDiscrete("isomorphism extraction requires discrete stages");
  }
  if (s1.base->order() != s2.base->order()) return std::nullopt;
  if (canonical_form_discrete(s1) != canonical_form_discrete(s2)) return std::nullopt;
  Permutation perm = class_order_map(s1, s2);
  if (!is_isomorphism(*s1.base, *s2.base, perm)) return std::nullopt;
  return perm;
}

OrbitEngine::OrbitEngine(const Graph& g, EngineConfig cfg)
    : OrbitEngine(g, cfg, nullptr, 0,
                  cfg.depth_budget.value_or(default_depth_budget(g.order()))) {}

OrbitEngine::OrbitEngine(const Graph& g, EngineConfig cfg, RunStats* shared, std::size_t level,
                         std::size_t depth_budget)
    : g_(&g),
      cfg_(cfg),
      stats_(shared ? shared : &own_stats_),
      level_(level),
      depth_budget_(depth_budget),
      history_(g.order(), 0),
      q_(OrderedPartition::discrete(g.order())) {}

StageGraph OrbitEngine::stage(std::span<const VertexId> fixes) {
  if (fixes.empty() && base_coloring_) return StageGraph{g_, {}, *base_coloring_};
  ++stats_->refine_calls;
  StageGraph s{g_, std::vector<VertexId>(fixes.begin(), fixes.end()),
               refine_with_fixes(*g_, fixes, cfg_.refinement)};
  if (fixes.empty()) base_coloring_ = s.coloring;
  return s;
}

void OrbitEngine::note_fixes(std::span<const VertexId> fixes) {
  for (VertexId v : fixes) ++history_[static_cast<std::size_t>(v)];
}

StageGraph OrbitEngine::find_regular_stage(std::optional<VertexId> seed) {
  StageGraph current = stage({});
  regular_fixes_.clear();
  regular_children_.clear();
  if (current.discrete()) return current;

  if (seed && current.coloring.vertex_partition
                      .members(current.coloring.vertex_partition.class_of(*seed))
                      .size() > 1) {
    StageGraph seeded = stage(std::vector<VertexId>{*seed});
    if (!seeded.discrete()) current = std::move(seeded);
  }

  while (true) {
    // The next fix is the first candidate (in strategy order) whose
    // individualization is still non-discrete; if there is none, every
    // one-step extension is discrete and the stage is regular.
    std::map<VertexId, StableColoring> children;
    std::optional<StageGraph> next;
    for (VertexId y : fix_order(current, history_, cfg_.strategy)) {
      StageGraph child = stage(extended(current.fixes, y));
      if (!child.discrete()) {
        next = std::move(child);
        break;
      }
      children.emplace(y, std::move(child.coloring));
    }
    if (!next) {
      note_fixes(current.fixes);
      regular_fixes_ = current.fixes;
      regular_children_ = std::move(children);
      return current;
    }
    current = std::move(*next);
  }
}

OrbitEngine::StageOrbits OrbitEngine::stage_orbits(const StageGraph& stage_graph) {
  const std::size_t n = g_->order();
  detail::DisjointSets sets(n);
  StageOrbits out;
  const auto& p = stage_graph.coloring.vertex_partition;
  const bool cached = regular_fixes_ == stage_graph.fixes;

  for (const auto& members : p.classes()) {
    if (members.size() < 2) continue;
    std::map<std::string, StageGraph> anchors;
    for (VertexId y : members) {
      StageGraph child;
      auto hit = cached ? regular_children_.find(y) : regular_children_.end();
      if (hit != regular_children_.end()) {
        child = StageGraph{g_, extended(stage_graph.fixes, y), hit->second};
      } else {
        child = stage(extended(stage_graph.fixes, y));
      }
      if (!child.discrete()) continue;
      ++stats_->canonical_form_calls;
      auto form = canonical_form_discrete(child);
      auto [it, inserted] = anchors.try_emplace(std::move(form), child);
      if (inserted) continue;
      Permutation perm = class_order_map(it->second, child);
      if (!is_automorphism(*g_, perm)) continue;
      sets.unite(it->second.fixes.back(), y);
      if (!perm.is_identity()) out.generators.push_back(std::move(perm));
    }
  }
  out.partition = sets.to_partition();
  return out;
}

bool OrbitEngine::absorb(const Permutation& perm) {
  if (perm.is_identity()) return false;
  OrderedPartition joined = partition_join(q_, cycle_partition(perm));
  // A generator that merges nothing leaves the closure unchanged; dropping
  // it keeps the list at most n - 1 long.
  if (joined.class_count() == q_.class_count()) return false;
  generators_.push_back(perm);
  q_ = std::move(joined);
  return true;
}

bool OrbitEngine::iterate(std::size_t iteration) {
  const auto& base = base_coloring_->vertex_partition;
  std::optional<VertexId> seed;
  if (iteration > 0) {
    // Cycle the first fix through the Q-classes that can still merge.
    std::vector<ClassId> open;
    for (std::size_t c = 0; c < q_.class_count(); ++c) {
      const VertexId rep = q_.members(static_cast<ClassId>(c)).front();
      if (base.members(base.class_of(rep)).size() > 1) open.push_back(static_cast<ClassId>(c));
    }
    if (!open.empty()) {
      const auto members = q_.members(open[(iteration - 1) % open.size()]);
      seed = *std::min_element(members.begin(), members.end(), [&](VertexId a, VertexId b) {
        return std::pair(history_[static_cast<std::size_t>(a)], a) <
               std::pair(history_[static_cast<std::size_t>(b)], b);
      });
    }
  }
  StageGraph regular = find_regular_stage(seed);
  if (regular.discrete()) return false;
  StageOrbits found = stage_orbits(regular);

  bool changed = false;
  for (const auto& perm : found.generators) changed |= absorb(perm);
  OrderedPartition joined = partition_join(q_, found.partition);
  if (joined.class_count() != q_.class_count()) {
    q_ = std::move(joined);
    changed = true;
  }
  return changed;
}

std::optional<Permutation> OrbitEngine::verify_merge(const OrderedPartition& q, ClassId c1,
                                                     ClassId c2) {
  if (depth_budget_ == 0) {
    ++stats_->depth_budget_hits;
    return std::nullopt;
  }
  const std::size_t level = level_ + 1;
  stats_->verify_tree_depth_max = std::max<std::uint64_t>(stats_->verify_tree_depth_max, level);

  const VertexId o1 = q.members(c1).front();
  const VertexId o2 = q.members(c2).front();
  if (failed_pairs_.contains({o1, o2})) return std::nullopt;

  // Step 1: fix vertices while o1 and o2 keep a common color.
  StageGraph current = stage({});
  const auto& base = current.coloring.vertex_partition;
  if (base.class_of(o1) != base.class_of(o2)) return std::nullopt;
  while (true) {
    bool extended_once = false;
    for (VertexId x : fix_order(current, history_, cfg_.strategy)) {
      if (x == o1 || x == o2) continue;
      StageGraph next = stage(extended(current.fixes, x));
      const auto& np = next.coloring.vertex_partition;
      if (np.class_of(o1) == np.class_of(o2)) {
        current = std::move(next);
        extended_once = true;
        break;
      }
    }
    if (!extended_once) break;
  }
  note_fixes(current.fixes);

  // Step 2: T(o1) and T(o2).
  const auto fixes_a = extended(current.fixes, o1);
  const auto fixes_b = extended(current.fixes, o2);
  stats_->verify_tree_nodes += 2;
  StageGraph t1 = stage(fixes_a);
  StageGraph t2 = stage(fixes_b);
  if (!compatible(t1, t2)) {
    failed_pairs_[{o1, o2}] = true;
    return std::nullopt;
  }

  // Step 3: orbits of T(o2), one level down, then the isomorphism test.
  Graph t2_graph = *g_;
  for (VertexId v : fixes_b) t2_graph = individualize(t2_graph, v);
  OrbitEngine child(t2_graph, cfg_, stats_, level, depth_budget_ - 1);
  const OrbitSystem t2_orbits = child.compute_orbits();

  bool exhausted = false;
  auto perm = match_fixes(fixes_a, fixes_b, &t2_orbits.partition, &exhausted);
  if (!perm) {
    failed_pairs_[{o1, o2}] = exhausted;
    return std::nullopt;
  }
  return perm;
}

struct OrbitEngine::SearchState {
  std::size_t nodes = 0;
  bool limit_hit = false;
};

std::optional<Permutation> OrbitEngine::match_fixes(std::span<const VertexId> fixes_a,
                                                    std::span<const VertexId> fixes_b,
                                                    const OrderedPartition* target_orbits,
                                                    bool* exhausted) {
  SearchState st;
  std::vector<VertexId> a(fixes_a.begin(), fixes_a.end());
  std::vector<VertexId> b(fixes_b.begin(), fixes_b.end());
  auto perm = match_node(st, a, b, target_orbits);
  if (exhausted) *exhausted = !perm && !st.limit_hit;
  return perm;
}

std::optional<Permutation> OrbitEngine::match_node(SearchState& st, std::vector<VertexId>& fixes_a,
                                                   std::vector<VertexId>& fixes_b,
                                                   const OrderedPartition* target_orbits) {
  if (++st.nodes > cfg_.search_node_limit) {
    if (!st.limit_hit) ++stats_->search_limit_hits;
    st.limit_hit = true;
    return std::nullopt;
  }
  StageGraph sa = stage(fixes_a);
  StageGraph sb = stage(fixes_b);
  if (!compatible(sa, sb)) return std::nullopt;
  if (sa.discrete()) {
    Permutation perm = class_order_map(sa, sb);
    if (is_automorphism(*g_, perm)) return perm;
    return std::nullopt;
  }

  const VertexId y = pick_fix_vertex(sa, history_, cfg_.strategy);
  const ClassId target = sa.coloring.vertex_partition.class_of(y);
  std::vector<VertexId> candidates;
  std::vector<ClassId> seen_orbits;
  for (VertexId z : sb.coloring.vertex_partition.members(target)) {
    if (target_orbits) {
      const ClassId orbit = target_orbits->class_of(z);
      if (std::ranges::find(seen_orbits, orbit) != seen_orbits.end()) continue;
      seen_orbits.push_back(orbit);
    }
    candidates.push_back(z);
  }
  for (VertexId z : candidates) {
    fixes_a.push_back(y);
    fixes_b.push_back(z);
    auto perm = match_node(st, fixes_a, fixes_b, nullptr);
    fixes_a.pop_back();
    fixes_b.pop_back();
    if (perm) return perm;
    if (st.limit_hit) return std::nullopt;
  }
  return std::nullopt;
}

bool OrbitEngine::verify_pass() {
  const auto& base = base_coloring_->vertex_partition;
  bool changed = false;
  for (const auto& members : base.classes()) {
    if (members.size() < 2) continue;
    std::vector<VertexId> reps;
    for (VertexId v : members) {
      if (q_.members(q_.class_of(v)).front() == v) reps.push_back(v);
    }
    for (std::size_t i = 1; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (q_.class_of(reps[i]) == q_.class_of(reps[j])) break;
        auto perm = verify_merge(q_, q_.class_of(reps[j]), q_.class_of(reps[i]));
        if (perm && absorb(*perm)) {
          changed = true;
          break;
        }
      }
    }
  }
  return changed;
}

OrbitSystem OrbitEngine::compute_orbits() {
  const std::size_t n = g_->order();
  q_ = OrderedPartition::discrete(n);
  generators_.clear();
  const OrderedPartition target = stage({}).coloring.vertex_partition;

  const std::size_t budget = cfg_.budget.value_or(n > 0 ? n - 1 : 0);
  std::size_t iteration = 0;
  while (!same_blocks(q_, target)) {
    bool changed = false;
    if (iteration < budget) changed = iterate(iteration++);
    if (!changed) changed = verify_pass();
    if (!changed && iteration >= budget) break;
  }

  OrbitSystem out;
  out.partition = q_;
  out.generators = generators_;
  out.status = same_blocks(q_, target) ? OrbitStatus::kCertified : OrbitStatus::kLowerBound;
  out.stats = *stats_;
  return out;
}

OrbitSystem compute_orbits(const Graph& g, const EngineConfig& cfg) {
  OrbitEngine engine(g, cfg);
  return engine.compute_orbits();
}

}  // namespace orbitscope
