#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitscope/assembly.hpp"
#include "orbitscope/iso.hpp"
#include "orbitscope/orbit_engine.hpp"
#include "orbitscope/partition.hpp"
#include "orbitscope/refinement.hpp"

namespace orbitscope::report {

// Every emitter returns the full output text, newline-terminated. JSON is
// a single object; text mode is the human-readable equivalent. Orbit lists
// are sorted by minimum element with ascending members. Runtime is
// included only when `runtime_ms` is set, so repeated runs can be
// compared byte for byte.

struct Common {
  std::string command;
  bool json = false;
  std::optional<double> runtime_ms;
};

std::string orbits(const Common& c, std::size_t n, const OrbitSystem& result);

std::string iso(const Common& c, std::size_t n, const IsoResult& result);

std::string refine(const Common& c, std::size_t n, int k, const StableColoring& coloring);

std::string oracle_orbits(const Common& c, std::size_t n, const OrderedPartition& orbits,
                          std::size_t group_order);

std::string oracle_aut(const Common& c, std::size_t n, const std::vector<Permutation>& auts);

struct VerifyOutcome {
  OrbitSystem engine;
  OrderedPartition oracle;
  bool generators_sound = false;
  bool lower_bound_ok = false;     // engine partition finer-or-equal oracle
  bool certificate_ok = false;     // certified implies equal
  bool closure_ok = false;         // partition == closure orbits of generators
  bool exact = false;              // engine partition equals oracle
};

std::string verify(const Common& c, std::size_t n, const VerifyOutcome& outcome);

std::string assembly(const Common& c, const WindowSet& ws, const AssemblyResult& result);

// Classes sorted by minimum element, members ascending.
std::vector<std::vector<VertexId>> sorted_classes(const OrderedPartition& p);

}  // namespace orbitscope::report
