#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wqc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wqc - actuator-mediated cross-node coupling channel simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  int points = -1;
  unsigned long long seed = 0;  // reserved; all computation is deterministic
  app.add_option("--config", config_path, "configuration file (JSON, frequencies in Hz)");
  app.add_option("--out", out_dir, "output directory (overrides config)");
  app.add_option("--points", points, "sweep grid size (overrides config)");
  app.add_option("--seed", seed, "reserved, unused");

  auto* verify = app.add_subcommand("verify", "run the verification checks and write a report");
  auto* sweep = app.add_subcommand("sweep", "run the noise-robustness sweep (CSV + SVG)");
  auto* dump = app.add_subcommand("dump-sequence", "print a compiled pulse sequence");
  std::string which;
  dump->add_option("which", which, "wqc or swap")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wqc::kExitUsageError;
  }

  try {
    wqc::RunConfig config =
        config_path.empty() ? wqc::default_run_config() : wqc::load_run_config(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (points > 0) config.sweep.points = points;

    if (verify->parsed()) return wqc::cmd_verify(config, std::cout, std::cerr);
    if (sweep->parsed()) return wqc::cmd_sweep(config, std::cout, std::cerr);
    if (dump->parsed()) return wqc::cmd_dump_sequence(config, which, std::cout, std::cerr);
  } catch (const wqc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return wqc::kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return wqc::kExitCheckFailure;
  }
  return wqc::kExitUsageError;
}
