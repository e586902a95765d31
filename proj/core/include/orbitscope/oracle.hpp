#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orbitscope/graph.hpp"
#include "orbitscope/partition.hpp"
#include "orbitscope/permutation.hpp"

namespace orbitscope::oracle {

// Brute force over all n! vertex maps. Inputs above max_n are refused
// with SizeLimit unless the caller raises the limit.
struct OracleLimit {
  std::size_t max_n = 8;
};

// All automorphisms in lexicographic order of their image sequences.
std::vector<Permutation> brute_aut(const Graph& g, OracleLimit limit = {});

// Orbit partition of brute_aut(g), classes ordered by minimum element.
OrderedPartition brute_orbits(const Graph& g, OracleLimit limit = {});

// Lexicographically first p with apply_permutation(g1, p) == g2.
std::optional<Permutation> brute_iso(const Graph& g1, const Graph& g2, OracleLimit limit = {});

// Orbits of the group generated by `gens` on [0, n), by transitive
// closure of generator images. Throws SizeMismatch if a generator is not
// on n points.
OrderedPartition closure_orbits(std::size_t n, std::span<const Permutation> gens);

}  // namespace orbitscope::oracle
