#include "orbitscope/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace orbitscope::report {
namespace {

using Json = nlohmann::ordered_json;

Json stats_json(const RunStats& s) {
  return Json{{"refine_calls", s.refine_calls},
              {"canonical_form_calls", s.canonical_form_calls},
              {"verify_tree_nodes", s.verify_tree_nodes},
              {"verify_tree_depth_max", s.verify_tree_depth_max}};
}

Json diagnostics_json(const RunStats& s) {
  return Json{{"depth_budget_hits", s.depth_budget_hits},
              {"search_limit_hits", s.search_limit_hits}};
}

Json image_json(const Permutation& p) {
  return Json(std::vector<VertexId>(p.image().begin(), p.image().end()));
}

Json header(const Common& c, std::size_t n) {
  Json j;
  j["command"] = c.command;
  j["n"] = n;
  return j;
}

std::string finish(const Common& c, Json j) {
  if (c.runtime_ms) j["runtime_ms"] = *c.runtime_ms;
  return j.dump() + "\n";
}

std::string class_list(const std::vector<std::vector<VertexId>>& classes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << (i ? " " : "") << '{';
    for (std::size_t j = 0; j < classes[i].size(); ++j) out << (j ? "," : "") << classes[i][j];
    out << '}';
  }
  return out.str();
}

void text_stats(std::ostringstream& out, const RunStats& s) {
  out << "refine calls: " << s.refine_calls << '\n'
      << "canonical forms: " << s.canonical_form_calls << '\n'
      << "verify tree nodes: " << s.verify_tree_nodes << '\n'
      << "verify tree depth: " << s.verify_tree_depth_max << '\n';
  if (s.depth_budget_hits || s.search_limit_hits) {
    out << "depth budget hits: " << s.depth_budget_hits << '\n'
        << "search limit hits: " << s.search_limit_hits << '\n';
  }
}

void text_runtime(std::ostringstream& out, const Common& c) {
  if (c.runtime_ms) out << "runtime: " << *c.runtime_ms << " ms\n";
}

}  // namespace

std::vector<std::vector<VertexId>> sorted_classes(const OrderedPartition& p) {
  std::vector<std::vector<VertexId>> out = p.classes();
  for (auto& members : out) std::sort(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string orbits(const Common& c, std::size_t n, const OrbitSystem& result) {
  const auto classes = sorted_classes(result.partition);
  if (c.json) {
    Json j = header(c, n);
    j["orbits"] = classes;
    Json gens = Json::array();
    for (const auto& g : result.generators) gens.push_back(image_json(g));
    j["generators"] = gens;
    j["status"] = to_string(result.status);
    j["stats"] = stats_json(result.stats);
    j["diagnostics"] = diagnostics_json(result.stats);
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": n = " << n << ", " << classes.size() << " orbit(s), "
      << to_string(result.status) << '\n'
      << "orbits: " << class_list(classes) << '\n'
      << "generators: " << result.generators.size() << '\n';
  for (const auto& g : result.generators) out << "  " << g.cycle_string() << '\n';
  text_stats(out, result.stats);
  text_runtime(out, c);
  return out.str();
}

std::string iso(const Common& c, std::size_t n, const IsoResult& result) {
  if (c.json) {
    Json j = header(c, n);
    j["verdict"] = to_string(result.verdict);
    j["evidence"] = to_string(result.evidence);
    j["isomorphism"] = result.isomorphism ? image_json(*result.isomorphism) : Json(nullptr);
    j["stats"] = stats_json(result.stats);
    j["diagnostics"] = diagnostics_json(result.stats);
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": " << to_string(result.verdict) << " (" << to_string(result.evidence)
      << ")\n";
  if (result.isomorphism) {
    out << "map:";
    for (VertexId v : result.isomorphism->image()) out << ' ' << v;
    out << '\n';
  }
  text_stats(out, result.stats);
  text_runtime(out, c);
  return out.str();
}

std::string refine(const Common& c, std::size_t n, int k, const StableColoring& coloring) {
  const auto& p = coloring.vertex_partition;
  if (c.json) {
    Json j = header(c, n);
    j["k"] = k;
    Json classes = Json::array();
    for (const auto& members : p.classes()) classes.push_back(members);
    j["classes"] = classes;
    j["class_count"] = p.class_count();
    j["discrete"] = is_discrete(p);
    j["rounds"] = coloring.rounds_used;
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": n = " << n << ", k = " << k << ", " << p.class_count()
      << " class(es) after " << coloring.rounds_used << " round(s)\n"
      << "classes: " << class_list(p.classes()) << '\n';
  text_runtime(out, c);
  return out.str();
}

std::string oracle_orbits(const Common& c, std::size_t n, const OrderedPartition& orbits,
                          std::size_t group_order) {
  const auto classes = sorted_classes(orbits);
  if (c.json) {
    Json j = header(c, n);
    j["orbits"] = classes;
    j["group_order"] = group_order;
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": n = " << n << ", |Aut| = " << group_order << '\n'
      << "orbits: " << class_list(classes) << '\n';
  text_runtime(out, c);
  return out.str();
}

std::string oracle_aut(const Common& c, std::size_t n, const std::vector<Permutation>& auts) {
  if (c.json) {
    Json j = header(c, n);
    Json list = Json::array();
    for (const auto& a : auts) list.push_back(image_json(a));
    j["automorphisms"] = list;
    j["group_order"] = auts.size();
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": n = " << n << ", |Aut| = " << auts.size() << '\n';
  for (const auto& a : auts) out << "  " << a.cycle_string() << '\n';
  text_runtime(out, c);
  return out.str();
}

std::string verify(const Common& c, std::size_t n, const VerifyOutcome& v) {
  const auto engine_classes = sorted_classes(v.engine.partition);
  const auto oracle_classes = sorted_classes(v.oracle);
  if (c.json) {
    Json j = header(c, n);
    j["orbits"] = engine_classes;
    j["oracle_orbits"] = oracle_classes;
    Json gens = Json::array();
    for (const auto& g : v.engine.generators) gens.push_back(image_json(g));
    j["generators"] = gens;
    j["status"] = to_string(v.engine.status);
    j["checks"] = Json{{"generators_sound", v.generators_sound},
                       {"lower_bound", v.lower_bound_ok},
                       {"certificate", v.certificate_ok},
                       {"closure", v.closure_ok},
                       {"exact", v.exact}};
    j["stats"] = stats_json(v.engine.stats);
    j["diagnostics"] = diagnostics_json(v.engine.stats);
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": n = " << n << ", " << to_string(v.engine.status)
      << (v.exact ? ", matches oracle" : ", differs from oracle") << '\n'
      << "engine: " << class_list(engine_classes) << '\n'
      << "oracle: " << class_list(oracle_classes) << '\n'
      << "generators sound: " << (v.generators_sound ? "yes" : "NO") << '\n'
      << "lower bound holds: " << (v.lower_bound_ok ? "yes" : "NO") << '\n'
      << "certificate holds: " << (v.certificate_ok ? "yes" : "NO") << '\n'
      << "closure matches: " << (v.closure_ok ? "yes" : "NO") << '\n';
  text_stats(out, v.engine.stats);
  text_runtime(out, c);
  return out.str();
}

std::string assembly(const Common& c, const WindowSet& ws, const AssemblyResult& result) {
  const auto ordered = project_to_vertices(ws);
  const auto unordered = project_to_vertex_subsets(ws);
  auto columns = [](const std::set<Column>& cols) {
    Json list = Json::array();
    for (const auto& [top, bottom] : cols) list.push_back({top, bottom});
    return list;
  };
  if (c.json) {
    Json j;
    j["command"] = c.command;
    j["k"] = ws.width();
    j["windows"] = ws.elements().size();
    j["assembled"] = result.assembled;
    j["witness"] = result.witness ? Json{{"top", result.witness->top}, {"bottom", result.witness->bottom}}
                                  : Json(nullptr);
    j["projection"] = columns(ordered);
    j["projection_subsets"] = columns(unordered);
    j["diagnostic"] = result.diagnostic;
    return finish(c, std::move(j));
  }
  std::ostringstream out;
  out << c.command << ": " << (result.assembled ? "assembled" : "non-assembled") << '\n';
  if (result.witness) {
    out << "witness: [";
    for (VertexId v : result.witness->top) out << ' ' << v;
    out << " ;";
    for (VertexId v : result.witness->bottom) out << ' ' << v;
    out << " ]\n";
  }
  out << "projection:";
  for (const auto& [top, bottom] : ordered) out << " [" << top << ';' << bottom << ']';
  out << '\n';
  if (!result.diagnostic.empty()) out << "note: " << result.diagnostic << '\n';
  text_runtime(out, c);
  return out.str();
}

}  // namespace orbitscope::report
