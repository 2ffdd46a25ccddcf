#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mdcsim/report.hpp"
#include "mdcsim/version.hpp"

namespace {

using namespace mdcsim;

struct CommonArgs {
  std::string scenario_path;
  std::string out_dir = "out";
  std::string format = "table";
  uint64_t seed = 0;
  bool seed_set = false;
  int64_t replications = 0;
  bool replications_set = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario_path, "scenario file (JSON)")->required();
  cmd->add_option("--out", args.out_dir, "output directory (created if missing)");
  cmd->add_option("--format", args.format, "stdout rendering")
      ->check(CLI::IsMember({"table", "csv", "json-doc"}));
  cmd->add_option("--seed", args.seed, "override the scenario seed")
      ->each([&args](const std::string&) { args.seed_set = true; });
  cmd->add_option("--replications", args.replications, "override the scenario replication count")
      ->each([&args](const std::string&) { args.replications_set = true; });
}

Scenario load_scenario(const CommonArgs& args) {
  Scenario scenario = parse_scenario_file(args.scenario_path);
  if (args.seed_set) scenario.seed = args.seed;
  if (args.replications_set) {
    if (args.replications < 1) throw ValidationError("replications", "must be >= 1");
    scenario.replications = args.replications;
  }
  scenario.validate();
  return scenario;
}

void ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw std::runtime_error("cannot create output directory '" + out_dir + "': " + ec.message());
}

std::string out_path(const CommonArgs& args, const char* name) {
  return (std::filesystem::path(args.out_dir) / name).string();
}

void emit(const CommonArgs& args, const Json& report, const std::string& table, const std::string& csv) {
  if (args.format == "json-doc")
    std::cout << report.dump(2) << '\n';
  else if (args.format == "csv")
    std::cout << csv;
  else
    std::cout << table;
}

int cmd_simulate(const CommonArgs& args) {
  const Scenario scenario = load_scenario(args);
  const RunResult result = run(scenario);
  const Json report = build_simulate_report(scenario, result.metrics);
  ensure_out_dir(args.out_dir);
  write_text_file(out_path(args, "report.json"), report.dump(2) + "\n");
  write_text_file(out_path(args, "traces.jsonl"), trace_to_jsonl(scenario, result.traces));
  write_text_file(out_path(args, "metrics.csv"), format_metrics_csv(report));
  write_text_file(out_path(args, "tco.csv"), format_tco_csv(report));
  emit(args, report, render_simulate_table(report), format_metrics_csv(report) + "\n" + format_tco_csv(report));
  return 0;
}

int cmd_compare(const CommonArgs& args) {
  const Scenario scenario = load_scenario(args);
  const ArchitectureTco arch = compute_architecture_tco(scenario);
  RedundancyComparison redundancy;
  const bool has_redundancy = scenario.sites.size() >= 2;
  if (has_redundancy) {
    RunOptions options;
    options.keep_traces = false;
    redundancy = compare_redundancy(scenario, options);
  }
  const Json report = build_compare_report(scenario, arch, has_redundancy ? &redundancy : nullptr);
  ensure_out_dir(args.out_dir);
  write_text_file(out_path(args, "report.json"), report.dump(2) + "\n");
  write_text_file(out_path(args, "compare.csv"), format_compare_csv(report));
  emit(args, report, render_compare_table(report), format_compare_csv(report));
  return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& param, const std::vector<double>& values) {
  const Scenario scenario = load_scenario(args);
  const SweepResult sweep = run_sweep(scenario, param, values);
  const Json report = build_sweep_report(scenario, sweep);
  ensure_out_dir(args.out_dir);
  write_text_file(out_path(args, "report.json"), report.dump(2) + "\n");
  write_text_file(out_path(args, "sweep.csv"), format_sweep_csv(report));
  write_text_file(out_path(args, "sweep_series.csv"), format_sweep_series_csv(report));
  emit(args, report, render_sweep_table(report), format_sweep_csv(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(mdcsim::kToolName) + " " + mdcsim::kVersion +
               " - container macro-module data center simulator"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  CLI::App* simulate = app.add_subcommand("simulate", "run the fleet simulation");
  add_common_options(simulate, sim_args);

  CommonArgs cmp_args;
  CLI::App* compare = app.add_subcommand("compare", "conventional vs modular, generators vs geo-failover");
  add_common_options(compare, cmp_args);

  CommonArgs sweep_args;
  std::string sweep_param;
  std::vector<double> sweep_values;
  CLI::App* sweep = app.add_subcommand("sweep", "re-run while varying one numeric scenario field");
  add_common_options(sweep, sweep_args);
  sweep->add_option("--param", sweep_param, "dotted path, e.g. module.system.annual_failure_prob")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // bad invocation counts as a validation failure
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim_args);
    if (compare->parsed()) return cmd_compare(cmp_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args, sweep_param, sweep_values);
  } catch (const mdcsim::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
