#pragma once

#include <optional>

#include "orbitscope/graph.hpp"
#include "orbitscope/orbit_engine.hpp"
#include "orbitscope/permutation.hpp"

namespace orbitscope {

enum class IsoVerdict { kIsomorphic, kNonIsomorphic, kInconclusive };

const char* to_string(IsoVerdict v);

// How a verdict was reached; reported for transparency.
enum class IsoEvidence {
  kOrderMismatch,     // different vertex counts
  kPaletteMismatch,   // different color label multisets
  kRefinementSplit,   // a stable class of the union is unbalanced
  kCrossingOrbit,     // an engine generator crossed the two sides
  kCertifiedOrbits,   // certified orbits of the union never cross
  kPairSearch,        // exhaustive pair-individualization search
  kSearchLimit,       // the search hit its node limit
};

const char* to_string(IsoEvidence e);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::kInconclusive;
  IsoEvidence evidence = IsoEvidence::kSearchLimit;
  // g1 -> g2, present iff verdict is kIsomorphic; always verified.
  std::optional<Permutation> isomorphism;
  RunStats stats;
};

// Disjoint union on 2n vertices: g1 on [0, n), g2 on [n, 2n), colors
// matched by palette label, cross pairs in a fresh color above both
// palettes. Throws SizeMismatch if orders differ.
Graph tagged_union(const Graph& g1, const Graph& g2);

// Isomorphism test through the orbits of the tagged union. Never returns
// an unverified witness.
IsoResult iso_test(const Graph& g1, const Graph& g2, const EngineConfig& cfg = {});

}  // namespace orbitscope
