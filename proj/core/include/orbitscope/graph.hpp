#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbitscope/permutation.hpp"

namespace orbitscope {

using ColorId = std::uint32_t;

// A total coloring of V x V. Entry (u, v) is the color of the ordered pair;
// diagonal entries double as vertex colors. Color ids are always compact:
// every id in [0, color_count()) occurs somewhere in the matrix.
//
// Each compact id also carries a palette label, the color value it had in
// the source (file format or caller). Compaction preserves label order, so
// ids compare the same way labels do. Labels let two independently loaded
// graphs be placed in one color space (see reconcile helpers in iso.hpp).
class Graph {
 public:
  Graph() = default;

  // Builds a graph from a row-major n*n matrix of arbitrary color labels.
  // Labels are compacted to [0, c) preserving their relative order.
  static Graph from_labels(std::size_t n, std::span<const std::uint64_t> labels);
  // Same as from_labels, for callers already holding 32-bit values.
  static Graph from_matrix(std::size_t n, std::span<const ColorId> colors);

  std::size_t order() const { return n_; }
  std::size_t color_count() const { return palette_.size(); }

  ColorId at(VertexId u, VertexId v) const {
    return colors_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  ColorId vertex_color(VertexId v) const { return at(v, v); }

  std::span<const ColorId> row(VertexId u) const {
    return std::span<const ColorId>(colors_).subspan(static_cast<std::size_t>(u) * n_, n_);
  }
  std::span<const ColorId> matrix() const { return colors_; }
  // palette()[id] is the source label of compact color `id`; strictly increasing.
  std::span<const std::uint64_t> palette() const { return palette_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ColorId> colors_;
  std::vector<std::uint64_t> palette_;
};

// result.at(perm(u), perm(v)) == g.at(u, v). Throws SizeMismatch.
Graph apply_permutation(const Graph& g, const Permutation& perm);

// True iff perm preserves every pair color of g. Throws SizeMismatch.
bool is_automorphism(const Graph& g, const Permutation& perm);

// True iff perm maps g1 onto g2 entrywise, palettes included.
bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& perm);

// Convenience constructors used by tests, benchmarks and the CLI.
// Simple undirected graphs use the three-color encoding: 0 on the
// diagonal, 1 for edges, 2 for non-edges.
Graph from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace orbitscope
