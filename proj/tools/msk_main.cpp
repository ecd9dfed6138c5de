// msk: exact multisymplectic geometry toolkit.
//
//   msk run <scenario.json> [--task <id>] [--format json|text] [--seed <u64>]
//           [--timings] [-o <file>]
//   msk darboux --base-dim <n> --degree <k> [--fiber-coords a,b --horizontal <r>]
//           [-o <file>]
//
// Exit codes: 0 success, 1 task failure or error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "msk/errors.hpp"
#include "msk/scenario.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "msk: cannot write '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multisymplectic geometry toolkit"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "text";
  std::string only_task;
  std::string output_path;
  std::uint64_t seed = msk::kDefaultSeed;
  bool timings = false;

  CLI::App* run_cmd = app.add_subcommand("run", "run a scenario file");
  run_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--task", only_task, "run only the task with this id");
  run_cmd->add_option("--format", format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_option("--seed", seed, "seed for sampled tasks (default 12345)");
  run_cmd->add_flag("--timings", timings, "include wall-clock timings in the report");
  run_cmd->add_option("-o,--output", output_path, "write the report to a file");

  int base_dim = 0;
  int degree = 0;
  int horizontal = 0;
  std::string fiber_coords;

  CLI::App* darboux_cmd =
      app.add_subcommand("darboux", "emit a ready scenario for a canonical model");
  darboux_cmd->add_option("--base-dim", base_dim, "dimension n of the base")->required();
  darboux_cmd->add_option("--degree", degree, "degree k of the tautological form")->required();
  darboux_cmd->add_option("--fiber-coords", fiber_coords,
                          "comma-separated fiber coordinate names (horizontal model)");
  darboux_cmd->add_option("--horizontal", horizontal, "horizontality level r");
  darboux_cmd->add_option("-o,--output", output_path, "write the scenario to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) {
      msk::Scenario scenario = msk::parse_scenario_file(scenario_path);
      msk::RunOptions options;
      options.seed = seed;
      if (!only_task.empty()) options.only_task = only_task;
      msk::Report report = msk::run(scenario, options);
      std::string text =
          format == "json" ? report.to_json_text(timings) : report.to_text(timings);
      int rc = write_output(text, output_path);
      if (rc != 0) return rc;
      return report.clean() ? 0 : 1;
    }
    if (darboux_cmd->parsed()) {
      auto fibers = split_commas(fiber_coords);
      if (!fibers.empty() && horizontal == 0) {
        std::cerr << "msk: --fiber-coords requires --horizontal\n";
        return 2;
      }
      std::string text = msk::emit_darboux_scenario(base_dim, degree, fibers, horizontal);
      return write_output(text, output_path);
    }
  } catch (const msk::parse_error& e) {
    std::cerr << "msk: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "msk: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
