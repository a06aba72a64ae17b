#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverq/cartan.hpp"
#include "quiverq/cyclotomic.hpp"
#include "quiverq/quiver.hpp"

namespace quiverq {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitConfigError = 2,
  kExitBudgetExceeded = 3,
  kExitPrimeUnavailable = 4,
};

struct RunConfig {
  std::string command;  // quiver, dim, graded, blocks, ext, classify, verify, witness
  std::string type;
  std::string matrix_file;
  int n = 0;
  std::string backend = "modular";  // or "exact"
  std::uint64_t prime_floor = PrimeField::kDefaultPrimeFloor;
  std::size_t max_degree = 0;  // 0: PBW top degree + 1
  std::size_t vertex_budget = kDefaultVertexBudget;
  std::string out;
  std::string emit_graph;
  std::vector<std::string> suites;
  bool serial = false;
  bool root_vector_powers = false;  // dim/graded: add E_ij^e for height-two roots
};

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = kExitOk;
  std::string error;
};

/// Reads {"type": name} or {"matrix": [[...]]}; throws InvalidCartan.
CartanMatrix load_cartan_file(const std::string& path);

/// Named type or matrix file; validated as a symmetric Cartan matrix.
CartanMatrix resolve_cartan(const RunConfig& config);

/// Never throws: errors become exit codes with an "error" section.
RunResult run(const RunConfig& config);

/// Parses arguments, runs, writes the report to `out` (or --out) and
/// diagnostics to `err`; returns the exit status.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quiverq
