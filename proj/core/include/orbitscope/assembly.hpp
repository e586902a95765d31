#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitscope/permutation.hpp"

namespace orbitscope {

// A 2 x k block of vertex ids: a top k-tuple over a bottom k-tuple.
struct Window {
  std::vector<VertexId> top;
  std::vector<VertexId> bottom;

  std::size_t width() const { return top.size(); }
  friend auto operator<=>(const Window&, const Window&) = default;
  friend bool operator==(const Window&, const Window&) = default;
};

// A set of equal-width windows. Construction validates the invariants
// (shared width, distinct entries within each row) and throws
// InvariantViolation otherwise.
class WindowSet {
 public:
  WindowSet(std::size_t k, std::vector<Window> elements);

  std::size_t width() const { return k_; }
  const std::set<Window>& elements() const { return elements_; }

 private:
  std::size_t k_;
  std::set<Window> elements_;
};

// All cyclic width-k column windows of a 2 x (k+1) matrix.
WindowSet cyclic_windows(const Window& matrix, std::size_t k);

struct AssemblyResult {
  bool assembled = false;
  // 2 x (k+1) matrix whose cyclic windows are exactly the set.
  std::optional<Window> witness;
  // Non-empty when the set could not even be a candidate.
  std::string diagnostic;
};

// A set of k+1 width-k windows is assembled iff it equals the set of
// cyclic windows of one 2 x (k+1) matrix with distinct entries per row.
AssemblyResult is_assembled(const WindowSet& ws);

using Column = std::pair<VertexId, VertexId>;  // (top, bottom)

// Ordered column pairs occurring in any element.
std::set<Column> project_to_vertices(const WindowSet& ws);

// Column pairs read as unordered vertex subsets {top, bottom}; each is
// returned as (min, max).
std::set<Column> project_to_vertex_subsets(const WindowSet& ws);

}  // namespace orbitscope
