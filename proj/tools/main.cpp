#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "experiments.hpp"
#include "graphdiffuse/error.hpp"

namespace ex = graphdiffuse::experiments;

int main(int argc, char** argv) {
  CLI::App app{"Diffusion Green's function experiments; every subcommand writes a CSV."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("graphdiffuse ") + ex::kToolVersion);

  std::string config_path, out_path;
  std::uint64_t seed = 42;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  for (const auto& name : ex::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration (defaults used when omitted)")->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "output CSV path, '-' for stdout")->required();
    sub->add_option("--seed", seed, "64-bit seed (overrides a 'seed' key in the config)");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();
  const bool seed_given = app.get_subcommands().front()->count("--seed") > 0;

  nlohmann::json config;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      config = nlohmann::json::parse(in);
      if (config.is_object() && config.contains("seed")) {
        if (!seed_given) seed = config.at("seed").get<std::uint64_t>();
        config.erase("seed");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: cannot read configuration: " << e.what() << '\n';
    return 1;
  }

  ex::RunResult result;
  try {
    result = ex::run(subcommand, config, {seed, jobs});
  } catch (const graphdiffuse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad configuration: " << e.what() << '\n';
    return 1;
  }

  const std::string csv = ex::render_csv(subcommand, result, seed);
  if (out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << csv;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 1;
    }
  }
  std::cerr << subcommand << ": " << result.summary << (result.passed ? "" : " [check failed]") << '\n';
  return result.passed ? 0 : 2;
}
