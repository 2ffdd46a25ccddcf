#pragma once

#include <string>
#include <vector>

#include "mdcsim/power_floor.hpp"
#include "mdcsim/scenario_io.hpp"

namespace mdcsim {

/// Conventional-vs-modular accounting for one scenario: same fleet size,
/// same facility parameters, differing only where the architectures differ
/// (maintenance mode, containers/recycling, cooling overhead).
struct ArchitectureTco {
  CostBreakdown conventional;
  CostBreakdown modular;
  double base_downtime_hours_per_year = 0.0;
  double conventional_downtime_hours_per_year = 0.0;
  double modular_downtime_hours_per_year = 0.0;
  double downtime_reduction_fraction = 0.0;  // admin_error_share * elimination
};

ArchitectureTco compute_architecture_tco(const Scenario& scenario);

struct SweepRow {
  double value = 0.0;
  Metrics metrics;
  Provisioning provisioning;          // resolved per row
  ProvisioningOutcome provisioning_outcome;  // priced against the row's facilities
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepRow> rows;
};

/// Re-run the scenario once per value with the parameter at `dotted_path`
/// replaced. All rows share the scenario seed, so random draws are common
/// across rows.
SweepResult run_sweep(const Scenario& scenario, const std::string& dotted_path,
                      const std::vector<double>& values, const RunOptions& options = {});

// Report documents. Reports carry no wall-clock state: rerunning the same
// invocation yields byte-identical files.
Json build_simulate_report(const Scenario& scenario, const Metrics& metrics);
Json build_compare_report(const Scenario& scenario, const ArchitectureTco& arch,
                          const RedundancyComparison* redundancy);
Json build_sweep_report(const Scenario& scenario, const SweepResult& sweep);

// Trace serialization: one JSON object per event line, replication-tagged.
std::string trace_to_jsonl(const Scenario& scenario, const std::vector<FleetTrace>& traces);

// Pure formatters: they stringify report fields and never compute values.
std::string format_metrics_csv(const Json& report);
std::string format_tco_csv(const Json& report);
std::string format_compare_csv(const Json& report);
std::string format_sweep_csv(const Json& report);
std::string format_sweep_series_csv(const Json& report);
std::string render_simulate_table(const Json& report);
std::string render_compare_table(const Json& report);
std::string render_sweep_table(const Json& report);

// Deterministic double formatting shared by every table writer.
std::string format_number(double value);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mdcsim
