#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphdiffuse/operators.hpp"

namespace graphdiffuse::experiments {

inline constexpr const char* kToolVersion = "0.1.0";

// Rows of already formatted cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct RunResult {
  Table table;
  nlohmann::json config;  // effective configuration, defaults filled in
  bool passed = true;
  std::string summary;
};

struct RunOptions {
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

// Shortest representation that round-trips.
std::string format_number(double v);

// Header comment lines followed by the table.
std::string render_csv(const std::string& subcommand, const RunResult& result, std::uint64_t seed);

// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
// claimed exactly once; callers write results into slot i.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

// Seeded support of `count` interior vertices with weights in [0.5, 1],
// rescaled so the largest weight is eta_max.
AbsorptionProfile random_profile(std::size_t interior, std::size_t count, double eta_max,
                                 std::mt19937_64& engine);

RunResult run_eigvals(const nlohmann::json& config, const RunOptions& options);
RunResult run_born_sweep(const nlohmann::json& config, const RunOptions& options);
RunResult run_cutoff(const nlohmann::json& config, const RunOptions& options);
RunResult run_catalog_check(const nlohmann::json& config, const RunOptions& options);
RunResult run_permutohedron(const nlohmann::json& config, const RunOptions& options);
RunResult run_absorbers(const nlohmann::json& config, const RunOptions& options);

const std::vector<std::string>& subcommands();
RunResult run(const std::string& subcommand, const nlohmann::json& config, const RunOptions& options);

}  // namespace graphdiffuse::experiments
