#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "corpus.hpp"
#include "json.hpp"

namespace orbitscope {
namespace {

using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return testing::data_path(name); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("orbitscope-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, OrbitsJson) {
  const Invocation r = run({"orbits", data("k3.cdg"), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["orbits"], json::parse("[[0,1,2]]"));
  EXPECT_EQ(j["status"], "certified");
  EXPECT_TRUE(j.contains("runtime_ms"));
}

TEST_F(CliTest, NoTimingIsByteStable) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"orbits", data("c5.g6")},
           {"auts", data("p3.dimacs")},
           {"iso", data("k3.cdg"), data("p3.dimacs")},
           {"refine", data("c5.g6"), "--k", "1"},
           {"oracle-orbits", data("c5.g6")},
           {"oracle-aut", data("p3.dimacs")},
           {"verify", data("c5.g6")},
           {"assembly", data("c2_prime.ws")}}) {
    auto args = cmd;
    args.push_back("--json");
    args.push_back("--no-timing");
    const Invocation a = run(args);
    const Invocation b = run(args);
    EXPECT_EQ(a.out, b.out) << cmd[0];
    EXPECT_FALSE(json::parse(a.out).contains("runtime_ms")) << cmd[0];
    EXPECT_EQ(json::parse(a.out)["command"], cmd[0]);
  }
}

TEST_F(CliTest, IsoExitCodes) {
  EXPECT_EQ(run({"iso", data("k3.cdg"), data("p3.dimacs")}).code, 1);
  EXPECT_EQ(run({"iso", data("c5.g6"), data("c5.g6")}).code, 0);
  const std::string relabeled = write("c5.dimacs", "p edge 5 5\ne 1 3\ne 3 5\ne 5 2\ne 2 4\ne 4 1\n");
  const Invocation r = run({"iso", data("c5.g6"), relabeled, "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["verdict"], "isomorphic");
  EXPECT_EQ(run({"iso", data("rook4x4.dimacs"), data("shrikhande.dimacs")}).code, 1);
}

TEST_F(CliTest, Refine) {
  const Invocation r = run({"refine", data("p3.dimacs"), "--k", "1", "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["class_count"], 2);
}

TEST_F(CliTest, Oracle) {
  const json j = json::parse(run({"oracle-orbits", data("c5.g6"), "--json"}).out);
  EXPECT_EQ(j["group_order"], 10);
  EXPECT_EQ(j["orbits"], json::parse("[[0,1,2,3,4]]"));
  const json a = json::parse(run({"oracle-aut", data("k3.cdg"), "--json"}).out);
  EXPECT_EQ(a["automorphisms"].size(), 6u);
}

TEST_F(CliTest, OracleSizeLimit) {
  std::string cdg = "cdg 9 2\n";
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) cdg += (j ? " " : "") + std::string(i == j ? "0" : "1");
    cdg += "\n";
  }
  const std::string k9 = write("k9.cdg", cdg);
  EXPECT_EQ(run({"oracle-orbits", k9}).code, 4);
  EXPECT_EQ(run({"oracle-orbits", k9, "--max-n", "9"}).code, 0);
}

TEST_F(CliTest, Verify) {
  const Invocation r = run({"verify", data("c5.g6"), "--json", "--no-timing"});
  EXPECT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  for (const char* check : {"generators_sound", "lower_bound", "certificate", "closure", "exact"}) {
    EXPECT_EQ(j["checks"][check], true) << check;
  }
}

TEST_F(CliTest, Assembly) {
  const json a = json::parse(run({"assembly", data("c2_prime.ws"), "--json"}).out);
  EXPECT_EQ(a["assembled"], true);
  EXPECT_EQ(a["witness"]["top"], json::parse("[1,2,3]"));
  EXPECT_EQ(a["witness"]["bottom"], json::parse("[4,5,6]"));
  const Invocation b = run({"assembly", data("c2_double_prime.ws"), "--json"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(b.out)["assembled"], false);
  EXPECT_EQ(run({"assembly", data("c2_prime.ws"), "--format", "cdg"}).code, 4);
}

TEST_F(CliTest, ParseErrors) {
  const std::string bad = write("bad.cdg", "cdg 2 2\n0 1\n1 5\n");
  const Invocation r = run({"orbits", bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"orbits", data("c2_prime.ws")}).code, 3);
  EXPECT_EQ(run({"orbits", data("c5.g6"), "--format", "dimacs"}).code, 3);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"frobnicate", data("c5.g6")}).code, 4);
  EXPECT_EQ(run({"orbits"}).code, 4);
  EXPECT_EQ(run({"iso", data("c5.g6")}).code, 4);
  EXPECT_EQ(run({"orbits", data("c5.g6"), "--k", "5"}).code, 4);
  EXPECT_EQ(run({"orbits", data("c5.g6"), "--strategy", "random"}).code, 4);
  EXPECT_EQ(run({"orbits", data("c5.g6"), "--format", "xml"}).code, 4);
  EXPECT_EQ(run({"orbits", data("missing.g6")}).code, 4);
  EXPECT_EQ(run({"refine", data("c5.g6"), "--max-n", "3"}).code, 4);
}

TEST_F(CliTest, Flags) {
  EXPECT_EQ(run({"orbits", data("c5.g6"), "--strategy", "min_class", "--budget", "2", "--seed",
                 "17", "--certify"})
                .code,
            0);
  EXPECT_EQ(run({"orbits", data("c5.g6"), "--k", "3", "--format", "graph6"}).code, 0);
  const Invocation help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("orbits"), std::string::npos);
}

TEST_F(CliTest, TextOutput) {
  const Invocation r = run({"orbits", data("p3.dimacs")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("orbits: {0,2} {1}"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace orbitscope
