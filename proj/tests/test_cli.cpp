#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "quiverq/cli.hpp"
#include "quiverq/errors.hpp"

using namespace quiverq;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  json report;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "quiverq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  json report;
  if (!out.str().empty() && out.str().front() == '{') report = json::parse(out.str());
  return {code, report, err.str()};
}

const json& check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  FAIL("missing check " << name);
  static json none;
  return none;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/quiverq_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("report layout") {
  const auto r = invoke({"quiver", "--type", "A1", "--n", "5"});
  CHECK(r.code == kExitOk);
  std::vector<std::string> keys;
  for (auto it = r.report.begin(); it != r.report.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"config", "instance", "results", "checks"});
  for (const auto& c : r.report["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("claim"));
    CHECK(c.contains("passed"));
    CHECK(c.contains("detail"));
  }
  CHECK(r.report["config"]["backend"] == "modular");
}

TEST_CASE("dimension commands") {
  auto r = invoke({"dim", "--type", "A1", "--n", "6", "--backend", "exact"});
  CHECK(r.code == kExitOk);
  CHECK(r.report["results"][0]["total"] == 18);

  r = invoke({"dim", "--type", "A2", "--n", "5"});
  CHECK(r.code == kExitVerificationFailure);
  CHECK(check(r.report, "total_dimension_pbw")["passed"] == false);

  r = invoke({"dim", "--type", "A2", "--n", "5", "--root-vector-powers"});
  CHECK(r.code == kExitOk);
  CHECK(r.report["results"][0]["total"] == 3125);

  r = invoke({"graded", "--type", "A2", "--n", "5", "--max-degree", "3", "--serial"});
  CHECK(r.report["results"][0]["graded"] == json::array({25, 50, 100, 150}));
}

TEST_CASE("quiver, blocks, ext, witness") {
  const std::string dot = "/tmp/quiverq_test_graph.dot";
  auto r = invoke({"quiver", "--type", "A1", "--n", "6", "--emit-graph", dot});
  CHECK(r.code == kExitOk);
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("digraph") != std::string::npos);

  r = invoke({"blocks", "--type", "D4", "--n", "6"});
  CHECK(r.code == kExitOk);
  r = invoke({"ext", "--type", "A2", "--n", "5"});
  CHECK(r.code == kExitOk);
  r = invoke({"witness", "--type", "A1xA1", "--n", "5", "--backend", "exact"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("verify suites") {
  auto r = invoke({"verify", "--type", "A1", "--n", "6", "--backend", "exact", "--suite", "hopf,ideal,fourier"});
  CHECK(r.code == kExitOk);
  CHECK(check(r.report, "coassociativity_negative_control")["passed"] == true);
  r = invoke({"verify", "--type", "A1", "--n", "5", "--backend", "exact", "--suite", "complement"});
  CHECK(r.code == kExitOk);
  r = invoke({"verify", "--type", "A1", "--n", "6", "--backend", "exact", "--suite", "crossed"});
  CHECK(r.code == kExitVerificationFailure);
  CHECK(check(r.report, "phi_involution")["passed"] == true);
  CHECK(check(r.report, "phi_delta_is_delta_op")["passed"] == false);
}

TEST_CASE("classify") {
  auto r = invoke({"classify", "--type", "A3", "--n", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.report["results"][0]["verdict"] == "Wild");
  r = invoke({"classify", "--type", "A1", "--n", "7"});
  CHECK(r.report["results"][0]["verdict"] == "Finite");
}

TEST_CASE("matrix files") {
  const auto good = temp_file("good.json", R"({"matrix": [[2, -1], [-1, 2]]})");
  auto r = invoke({"dim", "--matrix-file", good, "--n", "5", "--max-degree", "2"});
  CHECK(r.report["results"][0]["graded"] == json::array({25, 50, 100}));
  CHECK(load_cartan_file(temp_file("named.json", R"({"type": "D4"})")).rank() == 4);
  const auto bad = temp_file("bad.json", R"({"matrix": [[2, 1], [1, 2]]})");
  CHECK(invoke({"dim", "--matrix-file", bad, "--n", "5"}).code == kExitConfigError);
  CHECK_THROWS_AS(load_cartan_file(temp_file("junk.json", "{")), InvalidCartan);
  CHECK_THROWS_AS(load_cartan_file("/tmp/quiverq_test_missing.json"), InvalidCartan);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"dim", "--type", "Q9", "--n", "5"}).code == kExitConfigError);
  CHECK(invoke({"dim", "--type", "A2", "--n", "0"}).code == kExitConfigError);
  CHECK(invoke({"dim", "--n", "5"}).code == kExitConfigError);
  CHECK(invoke({"dim", "--type", "A2", "--n", "5", "--backend", "float"}).code == kExitConfigError);
  CHECK(invoke({"verify", "--type", "A2", "--n", "5", "--suite", "nonsense"}).code == kExitConfigError);
  CHECK(invoke({"verify", "--type", "A3", "--n", "5", "--suite", "complement"}).code == kExitConfigError);
  CHECK(invoke({"verify", "--type", "A1", "--n", "7", "--suite", "complement"}).code == kExitConfigError);
  CHECK(invoke({"dim", "--type", "A2", "--n", "5", "--vertex-budget", "10"}).code == kExitBudgetExceeded);
  CHECK(invoke({"dim", "--type", "A2", "--n", "5", "--prime-floor", "4294967295"}).code == kExitPrimeUnavailable);
  const auto e = invoke({"dim", "--type", "Q9", "--n", "5"});
  CHECK(e.report["error"]["exit_code"] == kExitConfigError);
  CHECK(!e.err.empty());
}

TEST_CASE("run never throws") {
  RunConfig cfg;
  cfg.command = "bogus";
  cfg.type = "A1";
  cfg.n = 5;
  CHECK(run(cfg).exit_code == kExitConfigError);
}
