#include "cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "orbitscope/assembly.hpp"
#include "orbitscope/errors.hpp"
#include "orbitscope/io.hpp"
#include "orbitscope/iso.hpp"
#include "orbitscope/oracle.hpp"
#include "orbitscope/orbit_engine.hpp"
#include "orbitscope/refinement.hpp"
#include "orbitscope/report.hpp"

namespace orbitscope::cli {
namespace {

struct Options {
  std::string command;
  std::vector<std::string> files;
  int k = 2;
  std::string strategy = "least_fixed";
  std::optional<std::size_t> budget;
  std::optional<std::size_t> max_n;
  std::optional<std::string> format;
  std::optional<std::int64_t> seed;  // reserved
  bool json = false;
  bool no_timing = false;
  bool certify = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

using Clock = std::chrono::steady_clock;

std::optional<io::Format> forced_format(const Options& o) {
  if (!o.format) return std::nullopt;
  return io::parse_format(*o.format);
}

std::string read_input(const std::string& path) {
  try {
    return io::read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Graph load_graph(const Options& o, const std::string& path) {
  return io::parse_graph(read_input(path), forced_format(o));
}

EngineConfig engine_config(const Options& o) {
  EngineConfig cfg;
  cfg.refinement.k = o.k;
  cfg.strategy = *parse_fix_strategy(o.strategy);
  cfg.budget = o.budget;
  return cfg;
}

oracle::OracleLimit oracle_limit(const Options& o) {
  oracle::OracleLimit limit;
  if (o.max_n) limit.max_n = *o.max_n;
  return limit;
}

bool generators_sound(const Graph& g, const OrbitSystem& sys) {
  for (const auto& p : sys.generators) {
    if (!is_automorphism(g, p)) return false;
  }
  return true;
}

int dispatch(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  report::Common common{o.command, o.json, std::nullopt};
  auto stamp = [&] {
    if (o.no_timing) return;
    common.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  if (o.command == "orbits" || o.command == "auts") {
    const Graph g = load_graph(o, o.files[0]);
    const OrbitSystem sys = compute_orbits(g, engine_config(o));
    stamp();
    out << report::orbits(common, g.order(), sys);
    return o.certify && sys.status != OrbitStatus::kCertified ? kUncertified : kOk;
  }
  if (o.command == "iso") {
    const Graph g1 = load_graph(o, o.files[0]);
    const Graph g2 = load_graph(o, o.files[1]);
    const IsoResult r = iso_test(g1, g2, engine_config(o));
    stamp();
    out << report::iso(common, g1.order(), r);
    switch (r.verdict) {
      case IsoVerdict::kIsomorphic: return kOk;
      case IsoVerdict::kNonIsomorphic: return kNonIsomorphic;
      case IsoVerdict::kInconclusive: return kUncertified;
    }
    return kInternal;
  }
  if (o.command == "refine") {
    const Graph g = load_graph(o, o.files[0]);
    RefinementConfig cfg;
    cfg.k = o.k;
    const StableColoring c = refine(g, cfg);
    stamp();
    out << report::refine(common, g.order(), o.k, c);
    return kOk;
  }
  if (o.command == "oracle-orbits") {
    const Graph g = load_graph(o, o.files[0]);
    const auto auts = oracle::brute_aut(g, oracle_limit(o));
    const auto orbits = oracle::closure_orbits(g.order(), auts);
    stamp();
    out << report::oracle_orbits(common, g.order(), orbits, auts.size());
    return kOk;
  }
  if (o.command == "oracle-aut") {
    const Graph g = load_graph(o, o.files[0]);
    const auto auts = oracle::brute_aut(g, oracle_limit(o));
    stamp();
    out << report::oracle_aut(common, g.order(), auts);
    return kOk;
  }
  if (o.command == "verify") {
    const Graph g = load_graph(o, o.files[0]);
    report::VerifyOutcome v{compute_orbits(g, engine_config(o)),
                            oracle::brute_orbits(g, oracle_limit(o))};
    const auto closure = oracle::closure_orbits(g.order(), v.engine.generators);
    v.generators_sound = generators_sound(g, v.engine);
    v.lower_bound_ok = is_finer_or_equal(v.engine.partition, v.oracle);
    v.exact = same_blocks(v.engine.partition, v.oracle);
    v.certificate_ok = v.engine.status != OrbitStatus::kCertified || v.exact;
    v.closure_ok = same_blocks(closure, v.engine.partition);
    stamp();
    out << report::verify(common, g.order(), v);
    if (!(v.generators_sound && v.lower_bound_ok && v.certificate_ok && v.closure_ok)) {
      return kInternal;
    }
    return v.engine.status == OrbitStatus::kCertified ? kOk : kUncertified;
  }
  if (o.command == "assembly") {
    if (o.format && *o.format != "ws") throw UsageError("assembly reads window-set files only");
    const WindowSet ws = io::parse_window_set(read_input(o.files[0]));
    const AssemblyResult r = is_assembled(ws);
    stamp();
    out << report::assembly(common, ws, r);
    return kOk;
  }
  throw UsageError("unknown command: " + o.command);
}

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--format", o.format, "Input format (graph6, dimacs, cdg, ws); sniffed if absent")
      ->check(CLI::IsMember({"graph6", "dimacs", "cdg", "ws"}));
  sub.add_flag("--json", o.json, "Emit one JSON object");
  sub.add_flag("--no-timing", o.no_timing, "Omit runtime_ms so output is reproducible");
  sub.add_option("--seed", o.seed, "Reserved; every default is deterministic");
}

void add_engine(CLI::App& sub, Options& o) {
  sub.add_option("--k", o.k, "Refinement dimension")->check(CLI::IsMember({1, 2, 3}));
  sub.add_option("--strategy", o.strategy, "Fix-vertex strategy")
      ->check(CLI::IsMember({"least_fixed", "min_class", "first"}));
  sub.add_option("--budget", o.budget, "Iteration cap (default n - 1)");
}

void add_oracle(CLI::App& sub, Options& o) {
  sub.add_option("--max-n", o.max_n, "Oracle order limit (default 8)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Automorphism orbits of edge-colored digraphs", "orbitscope"};
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    int files;
    bool engine;
    bool oracle;
    bool certify;
  };
  const Spec specs[] = {
      {"orbits", "Orbit partition and generators", 1, true, false, true},
      {"auts", "Generating set of the automorphism group", 1, true, false, true},
      {"iso", "Isomorphism test of two graphs", 2, true, false, false},
      {"refine", "Stable coloring", 1, true, false, false},
      {"oracle-orbits", "Orbits by exhaustive enumeration", 1, false, true, false},
      {"oracle-aut", "All automorphisms by exhaustive enumeration", 1, false, true, false},
      {"verify", "Compare the engine against the oracle", 1, true, true, false},
      {"assembly", "Check whether a window set is assembled", 1, false, false, false},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("files", o.files, s.files == 1 ? "Input file" : "Input files")
        ->required()
        ->expected(s.files);
    add_common(*sub, o);
    if (s.engine) add_engine(*sub, o);
    if (s.oracle) add_oracle(*sub, o);
    if (s.certify) sub->add_flag("--certify", o.certify, "Exit 2 unless the orbits are certified");
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    return dispatch(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeLimit& e) {
    err << "size limit: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace orbitscope::cli
