#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orbitscope/graph.hpp"
#include "orbitscope/partition.hpp"

namespace orbitscope {

// Dimension of the stabilization: 1 refines vertex colors, 2 refines
// colors of ordered pairs, 3 colors of ordered triples.
struct RefinementConfig {
  int k = 2;
  // Round cap; 0 selects the default bound for k (see refine()).
  std::size_t max_rounds = 0;
};

// Largest order accepted for k = 3 (n^3 cells, n^4 work per round).
inline constexpr std::size_t kMaxOrderForK3 = 40;

struct StableColoring {
  // Vertex classes in canonical order.
  OrderedPartition vertex_partition;
  // Row-major n*n canonical pair colors; empty for k = 1.
  std::vector<ColorId> pair_coloring;
  std::size_t rounds_used = 0;
  // signatures[c] fingerprints the refinement history of vertex class c.
  std::vector<std::uint64_t> signatures;
  // Fingerprint of the whole run (every round's sorted signature table).
  // Equal for isomorphic inputs; differing traces prove non-isomorphism.
  std::uint64_t trace = 0;
};

// Throws RangeError for an invalid config (k outside {1,2,3}, k = 3 on a
// graph larger than kMaxOrderForK3) and RoundCapExceeded if the coloring
// does not stabilize within the cap (n * color_count rounds for k = 1,
// n^2 * color_count for k >= 2).
StableColoring refine(const Graph& g, const RefinementConfig& cfg);

// g with vertex v recolored to the fresh color id color_count().
// Throws RangeError for an out-of-range vertex.
Graph individualize(const Graph& g, VertexId v);

// Folds individualize over `fixes` in order, then refines.
// Throws InvariantViolation on duplicate fixes, RangeError when out of range.
StableColoring refine_with_fixes(const Graph& g, std::span<const VertexId> fixes,
                                 const RefinementConfig& cfg);

// True iff the coloring refines the colors of g and one extra round over
// it splits nothing. Checks multisets directly, independently of refine's own
// stopping rule. For a refinement with fixes, pass the individualized
// graph. Supports k = 1 and k = 2; throws RangeError for k = 3.
bool is_stable(const Graph& g, const StableColoring& coloring, const RefinementConfig& cfg);

}  // namespace orbitscope
