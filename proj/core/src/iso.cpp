#include "orbitscope/iso.hpp"

#include <algorithm>

#include "orbitscope/errors.hpp"

namespace orbitscope {
namespace {

std::vector<std::uint64_t> label_multiset(const Graph& g) {
  std::vector<std::uint64_t> labels;
  labels.reserve(g.matrix().size());
  for (ColorId c : g.matrix()) labels.push_back(g.palette()[c]);
  std::sort(labels.begin(), labels.end());
  return labels;
}

// Restricts a side-swapping automorphism of the tagged union to g1 -> g2.
std::optional<Permutation> restrict_to_sides(const Permutation& perm, std::size_t n) {
  std::vector<VertexId> image(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId w = perm(static_cast<VertexId>(v));
    if (static_cast<std::size_t>(w) < n) return std::nullopt;
    image[v] = w - static_cast<VertexId>(n);
  }
  return Permutation(std::move(image));
}

}  // namespace

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kIsomorphic: return "isomorphic";
    case IsoVerdict::kNonIsomorphic: return "non_isomorphic";
    case IsoVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(IsoEvidence e) {
  switch (e) {
    case IsoEvidence::kOrderMismatch: return "order_mismatch";
    case IsoEvidence::kPaletteMismatch: return "palette_mismatch";
    case IsoEvidence::kRefinementSplit: return "refinement_split";
    case IsoEvidence::kCrossingOrbit: return "crossing_orbit";
    case IsoEvidence::kCertifiedOrbits: return "certified_orbits";
    case IsoEvidence::kPairSearch: return "pair_search";
    case IsoEvidence::kSearchLimit: return "search_limit";
  }
  return "?";
}

Graph tagged_union(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) throw SizeMismatch("tagged union needs graphs of equal order");
  const std::size_t n = g1.order();
  const std::size_t m = 2 * n;
  std::uint64_t tag = 0;
  for (const Graph* g : {&g1, &g2}) {
    if (!g->palette().empty()) tag = std::max(tag, g->palette().back() + 1);
  }
  std::vector<std::uint64_t> labels(m * m, tag);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto su = static_cast<VertexId>(u);
      const auto sv = static_cast<VertexId>(v);
      labels[u * m + v] = g1.palette()[g1.at(su, sv)];
      labels[(n + u) * m + n + v] = g2.palette()[g2.at(su, sv)];
    }
  }
  return Graph::from_labels(m, labels);
}

IsoResult iso_test(const Graph& g1, const Graph& g2, const EngineConfig& cfg) {
  IsoResult result;
  if (g1.order() != g2.order()) {
    result.verdict = IsoVerdict::kNonIsomorphic;
    result.evidence = IsoEvidence::kOrderMismatch;
    return result;
  }
  if (label_multiset(g1) != label_multiset(g2)) {
    result.verdict = IsoVerdict::kNonIsomorphic;
    result.evidence = IsoEvidence::kPaletteMismatch;
    return result;
  }
  const std::size_t n = g1.order();
  auto accept = [&](const Permutation& perm, IsoEvidence evidence) {
    if (!is_isomorphism(g1, g2, perm)) return false;
    result.verdict = IsoVerdict::kIsomorphic;
    result.evidence = evidence;
    result.isomorphism = perm;
    return true;
  };
  if (n == 0) {
    accept(Permutation::identity(0), IsoEvidence::kCrossingOrbit);
    return result;
  }

  const Graph u = tagged_union(g1, g2);
  OrbitEngine engine(u, cfg);
  auto finish = [&]() {
    result.stats = engine.stats();
    return result;
  };

  // Any isomorphism extends to a side-swapping automorphism of the union,
  // which fixes every stable class setwise, so classes must be balanced.
  const StageGraph base = engine.stage({});
  for (const auto& members : base.coloring.vertex_partition.classes()) {
    const auto left = std::count_if(members.begin(), members.end(),
                                    [&](VertexId v) { return static_cast<std::size_t>(v) < n; });
    if (2 * static_cast<std::size_t>(left) != members.size()) {
      result.verdict = IsoVerdict::kNonIsomorphic;
      result.evidence = IsoEvidence::kRefinementSplit;
      return finish();
    }
  }

  const OrbitSystem orbits = engine.compute_orbits();
  for (const auto& gen : orbits.generators) {
    if (auto perm = restrict_to_sides(gen, n); perm && accept(*perm, IsoEvidence::kCrossingOrbit)) {
      return finish();
    }
  }
  if (orbits.status == OrbitStatus::kCertified) {
    // Certified orbits are exact; none of them crosses (no generator does).
    result.verdict = IsoVerdict::kNonIsomorphic;
    result.evidence = IsoEvidence::kCertifiedOrbits;
    return finish();
  }

  // Pair search: fix one left vertex v of the smallest stable class; an
  // isomorphism exists iff some automorphism of the union maps v to a
  // right vertex of that class. Right candidates are pruned to one per
  // engine orbit, which is sound because orbits come from automorphisms.
  const auto& classes = base.coloring.vertex_partition.classes();
  const auto smallest = std::min_element(
      classes.begin(), classes.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const VertexId v = smallest->front();
  std::vector<ClassId> seen;
  bool all_exhausted = true;
  for (VertexId w : *smallest) {
    if (static_cast<std::size_t>(w) < n) continue;
    const ClassId orbit = orbits.partition.class_of(w);
    if (std::ranges::find(seen, orbit) != seen.end()) continue;
    seen.push_back(orbit);
    bool exhausted = false;
    const std::vector<VertexId> a{v};
    const std::vector<VertexId> b{w};
    if (auto perm = engine.match_fixes(a, b, nullptr, &exhausted)) {
      if (auto iso = restrict_to_sides(*perm, n); iso && accept(*iso, IsoEvidence::kPairSearch)) {
        return finish();
      }
    }
    all_exhausted = all_exhausted && exhausted;
  }
  result.verdict = all_exhausted ? IsoVerdict::kNonIsomorphic : IsoVerdict::kInconclusive;
  result.evidence = all_exhausted ? IsoEvidence::kPairSearch : IsoEvidence::kSearchLimit;
  return finish();
}

}  // namespace orbitscope
