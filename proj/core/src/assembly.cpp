#include "orbitscope/assembly.hpp"

#include <algorithm>

#include "orbitscope/errors.hpp"

namespace orbitscope {
namespace {

bool row_distinct(const std::vector<VertexId>& row) {
  std::vector<VertexId> sorted(row);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Window window_at(const Window& matrix, std::size_t start, std::size_t k) {
  const std::size_t cols = matrix.width();
  Window w;
  for (std::size_t i = 0; i < k; ++i) {
    w.top.push_back(matrix.top[(start + i) % cols]);
    w.bottom.push_back(matrix.bottom[(start + i) % cols]);
  }
  return w;
}

}  // namespace

WindowSet::WindowSet(std::size_t k, std::vector<Window> elements) : k_(k) {
  if (k == 0) throw InvariantViolation("window width must be positive");
  for (auto& e : elements) {
    if (e.top.size() != k || e.bottom.size() != k) {
      throw InvariantViolation("window of width " + std::to_string(e.top.size()) +
                               " in a width-" + std::to_string(k) + " set");
    }
    if (!row_distinct(e.top) || !row_distinct(e.bottom)) {
      throw InvariantViolation("window row repeats a vertex");
    }
    elements_.insert(std::move(e));
  }
}

WindowSet cyclic_windows(const Window& matrix, std::size_t k) {
  if (matrix.top.size() != k + 1 || matrix.bottom.size() != k + 1) {
    throw InvariantViolation("cyclic windows need a 2 x (k+1) matrix");
  }
  std::vector<Window> out;
  for (std::size_t s = 0; s <= k; ++s) out.push_back(window_at(matrix, s, k));
  return WindowSet(k, std::move(out));
}

// Anchor one element as the window at column 0; the window at column 1
// shares k - 1 columns with it and contributes column k. Any valid
// witness can be rotated so the anchor sits at column 0, so trying every
// continuation of the anchor is exhaustive.
AssemblyResult is_assembled(const WindowSet& ws) {
  const std::size_t k = ws.width();
  AssemblyResult result;
  if (ws.elements().size() != k + 1) {
    result.diagnostic = "expected " + std::to_string(k + 1) + " windows of width " +
                        std::to_string(k) + ", got " + std::to_string(ws.elements().size());
    return result;
  }
  const Window& anchor = *ws.elements().begin();
  for (const Window& next : ws.elements()) {
    bool overlaps = true;
    for (std::size_t i = 0; i + 1 < k && overlaps; ++i) {
      overlaps = next.top[i] == anchor.top[i + 1] && next.bottom[i] == anchor.bottom[i + 1];
    }
    if (!overlaps) continue;
    Window matrix = anchor;
    matrix.top.push_back(next.top[k - 1]);
    matrix.bottom.push_back(next.bottom[k - 1]);
    if (!row_distinct(matrix.top) || !row_distinct(matrix.bottom)) continue;
    if (cyclic_windows(matrix, k).elements() == ws.elements()) {
      result.assembled = true;
      result.witness = std::move(matrix);
      return result;
    }
  }
  return result;
}

std::set<Column> project_to_vertices(const WindowSet& ws) {
  std::set<Column> out;
  for (const auto& e : ws.elements()) {
    for (std::size_t i = 0; i < e.width(); ++i) out.emplace(e.top[i], e.bottom[i]);
  }
  return out;
}

std::set<Column> project_to_vertex_subsets(const WindowSet& ws) {
  std::set<Column> out;
  for (const auto& [top, bottom] : project_to_vertices(ws)) {
    out.emplace(std::min(top, bottom), std::max(top, bottom));
  }
  return out;
}

}  // namespace orbitscope
