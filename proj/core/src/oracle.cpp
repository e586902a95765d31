#include "orbitscope/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "disjoint_sets.hpp"
#include "orbitscope/errors.hpp"

namespace orbitscope::oracle {
namespace {

void check_limit(std::size_t n, OracleLimit limit) {
  if (n > limit.max_n) {
    throw SizeLimit("oracle refuses n = " + std::to_string(n) + " (limit " +
                    std::to_string(limit.max_n) + "); raise the limit explicitly");
  }
}

// Entrywise check of apply_permutation(g1, image) == g2, bailing out early.
bool maps_onto(const Graph& g1, const Graph& g2, const std::vector<VertexId>& image) {
  const std::size_t n = g1.order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g2.at(image[u], image[v]) != g1.at(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Permutation> brute_aut(const Graph& g, OracleLimit limit) {
  check_limit(g.order(), limit);
  std::vector<VertexId> image(g.order());
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    if (maps_onto(g, g, image)) out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

OrderedPartition brute_orbits(const Graph& g, OracleLimit limit) {
  return closure_orbits(g.order(), brute_aut(g, limit));
}

std::optional<Permutation> brute_iso(const Graph& g1, const Graph& g2, OracleLimit limit) {
  if (g1.order() != g2.order()) throw SizeMismatch("brute_iso needs graphs of equal order");
  check_limit(g1.order(), limit);
  if (!std::ranges::equal(g1.palette(), g2.palette())) return std::nullopt;
  std::vector<VertexId> image(g1.order());
  std::iota(image.begin(), image.end(), 0);
  do {
    if (maps_onto(g1, g2, image)) return Permutation(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return std::nullopt;
}

OrderedPartition closure_orbits(std::size_t n, std::span<const Permutation> gens) {
  detail::DisjointSets sets(n);
  for (const auto& gen : gens) {
    if (gen.size() != n) throw SizeMismatch("generator degree differs from n");
    for (std::size_t v = 0; v < n; ++v) sets.unite(static_cast<VertexId>(v), gen(static_cast<VertexId>(v)));
  }
  return sets.to_partition();
}

}  // namespace orbitscope::oracle
