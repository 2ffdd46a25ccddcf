#include "mdcsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mdcsim/power_floor.hpp"
#include "mdcsim/version.hpp"

namespace mdcsim {

namespace {

Json breakdown_to_json(const CostBreakdown& b) {
  return Json{{"building_usd", b.building_usd},
              {"power_equipment_usd", b.power_equipment_usd},
              {"other_facility_usd", b.other_facility_usd},
              {"systems_usd", b.systems_usd},
              {"containers_usd", b.containers_usd},
              {"generators_usd", b.generators_usd},
              {"energy_usd", b.energy_usd},
              {"field_maintenance_usd", b.field_maintenance_usd},
              {"admin_staff_usd", b.admin_staff_usd},
              {"recycle_usd", b.recycle_usd},
              {"total_usd", b.total_usd}};
}

Json aggregate_to_json(const Aggregate& a) { return Json{{"mean", a.mean}, {"std_error", a.std_error}}; }

Json metrics_to_json(const Metrics& m) {
  Json aggregate{{"demanded_system_hours", aggregate_to_json(m.demanded_system_hours)},
                 {"delivered_system_hours", aggregate_to_json(m.delivered_system_hours)},
                 {"shortfall_system_hours", aggregate_to_json(m.shortfall_system_hours)},
                 {"available_system_hours", aggregate_to_json(m.available_system_hours)},
                 {"availability", aggregate_to_json(m.availability)},
                 {"energy_kwh", aggregate_to_json(m.energy_kwh)},
                 {"tco_total_usd", aggregate_to_json(m.tco_total_usd)}};
  Json per_rep = Json::array();
  for (size_t i = 0; i < m.per_replication.size(); ++i) {
    const ReplicationMetrics& r = m.per_replication[i];
    per_rep.push_back(Json{{"replication", i},
                           {"demanded_system_hours", r.demanded_system_hours},
                           {"delivered_system_hours", r.delivered_system_hours},
                           {"shortfall_system_hours", r.shortfall_system_hours},
                           {"available_system_hours", r.available_system_hours},
                           {"availability", r.availability},
                           {"energy_kwh", r.energy_kwh},
                           {"system_failures", r.system_failures},
                           {"recycle_count", r.recycle_count},
                           {"module_purchases", r.module_purchases},
                           {"tco_total_usd", r.tco.total_usd}});
  }
  return Json{{"aggregate", std::move(aggregate)},
              {"per_replication", std::move(per_rep)},
              {"tco_mean", breakdown_to_json(m.tco_mean)}};
}

Json build_meta(const Scenario& scenario, const char* command) {
  Json notes = Json::array();
  notes.push_back("load migration between sites is modeled as instantaneous and latency-free");
  for (const SiteSpec& site : scenario.sites) {
    if (site.facility.cost_per_watt_usd == 10.0) {
      notes.push_back(
          "facility cost uses the default $10/W, an inferred pairing of the 15 MW and $150M facility "
          "anchors; override facility.cost_per_watt_usd to change it");
      break;
    }
  }
  return Json{{"tool", kToolName},
              {"version", kVersion},
              {"command", command},
              {"seed", scenario.seed},
              {"replications", scenario.replications},
              {"rng", std::string(RngStream::generator_id())},
              {"notes", std::move(notes)},
              {"scenario", echo_scenario(scenario)}};
}

}  // namespace

ArchitectureTco compute_architecture_tco(const Scenario& scenario) {
  ArchitectureTco result;
  for (const SiteSpec& site : scenario.sites) {
    TcoInputs inputs;
    inputs.module = scenario.module;
    inputs.module_count = site.module_slots;
    inputs.container_condition = scenario.econ.container_condition;
    inputs.integration_fraction = scenario.econ.integration_fraction;
    inputs.facility = site.facility;
    inputs.energy_price_per_kwh = scenario.econ.energy_price_per_kwh;
    inputs.admin_staff_cost_per_year = 0.0;  // scenario-wide, added once below
    inputs.recycle_cost_per_module_usd = scenario.econ.recycle_cost_per_module_usd;
    inputs.discount_rate = scenario.econ.discount_rate;
    inputs.horizon_years = scenario.horizon_years;

    TcoInputs conventional = inputs;
    conventional.maintenance = MaintenancePolicy{MaintenanceMode::kFieldService, scenario.econ.maintenance.rate_per_3yr};
    conventional.cooling_overhead = scenario.econ.cooling_overhead_conventional;
    result.conventional += tco(Architecture::kConventional, conventional);

    TcoInputs modular = inputs;
    modular.maintenance = MaintenancePolicy{MaintenanceMode::kNone, scenario.econ.maintenance.rate_per_3yr};
    modular.cooling_overhead = scenario.module.cooling_overhead;
    result.modular += tco(Architecture::kModular, modular);
  }
  const double admin =
      scenario.econ.admin_staff_cost_per_year * discounted_years(scenario.horizon_years, scenario.econ.discount_rate);
  result.conventional.admin_staff_usd += admin;
  result.modular.admin_staff_usd += admin;
  result.conventional.set_total_from_components();
  result.modular.set_total_from_components();

  result.base_downtime_hours_per_year = scenario.econ.base_downtime_hours_per_year;
  result.conventional_downtime_hours_per_year = scenario.econ.base_downtime_hours_per_year;
  result.modular_downtime_hours_per_year =
      downtime_hours_per_year(scenario.econ.base_downtime_hours_per_year, scenario.econ.admin_error_share,
                              scenario.econ.admin_error_elimination);
  result.downtime_reduction_fraction = scenario.econ.admin_error_share * scenario.econ.admin_error_elimination;
  return result;
}

SweepResult run_sweep(const Scenario& scenario, const std::string& dotted_path,
                      const std::vector<double>& values, const RunOptions& options) {
  if (values.empty()) throw ValidationError("values", "at least one sweep value is required");
  const Json base = echo_scenario(scenario);
  const std::string pointer_text = param_path_to_pointer(dotted_path);
  const Json::json_pointer pointer(pointer_text);
  if (!base.contains(pointer))
    throw ValidationError(dotted_path, "parameter path not found in the scenario");
  if (!base.at(pointer).is_number())
    throw ValidationError(dotted_path, "sweep target is not numeric");

  SweepResult result;
  result.parameter = dotted_path;
  RunOptions row_options = options;
  row_options.keep_traces = false;
  for (double value : values) {
    Json doc = base;
    doc[pointer] = value;
    const Scenario row_scenario = parse_scenario_json(doc);
    SweepRow row;
    row.value = value;
    row.metrics = run(row_scenario, row_options).metrics;
    if (row_scenario.provisioning) {
      row.provisioning = *row_scenario.provisioning;
      CostBreakdown facility_total;
      for (const SiteSpec& site : row_scenario.sites) facility_total += facility_capex(site.facility);
      row.provisioning_outcome = mismatch_cost(
          provisioning_mismatch(row.provisioning.design_w_per_sqft, row.provisioning.realized_w_per_sqft),
          facility_total);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

Json build_simulate_report(const Scenario& scenario, const Metrics& metrics) {
  Json report;
  report["meta"] = build_meta(scenario, "simulate");
  report["metrics"] = metrics_to_json(metrics);

  Json sites = Json::array();
  for (const SiteSpec& site : scenario.sites) {
    const int64_t modules = deployed_module_count(scenario, site);
    sites.push_back(Json{{"name", site.name},
                         {"deployed_modules", modules},
                         {"yard_area_sqft", yard_area_sqft(modules, scenario.module, site.stack_height,
                                                           site.central_building_area_sqft,
                                                           site.circulation_fraction)}});
  }
  report["sites"] = std::move(sites);

  if (scenario.provisioning) {
    CostBreakdown facility_total;
    for (const SiteSpec& site : scenario.sites) facility_total += facility_capex(site.facility);
    const ProvisioningOutcome outcome = mismatch_cost(
        provisioning_mismatch(scenario.provisioning->design_w_per_sqft, scenario.provisioning->realized_w_per_sqft),
        facility_total);
    report["provisioning"] = Json{{"design_w_per_sqft", scenario.provisioning->design_w_per_sqft},
                                  {"realized_w_per_sqft", scenario.provisioning->realized_w_per_sqft},
                                  {"stranded_power_fraction", outcome.stranded_power_fraction},
                                  {"unusable_floor_fraction", outcome.unusable_floor_fraction},
                                  {"stranded_cost_usd", outcome.stranded_cost_usd},
                                  {"wasted_floor_cost_usd", outcome.wasted_floor_cost_usd}};
    // Published reference points for reading the densities above in context.
    report["density_reference"] =
        Json{{"typical_w_per_sqft", density::kTypicalWPerSqft},
             {"high_range_w_per_sqft",
              Json::array({density::kHighRangeLowWPerSqft, density::kHighRangeHighWPerSqft})},
             {"rackable_w_per_sqft", density::kRackableWPerSqft},
             {"air_cooling_study",
              Json{{"rack_kw", density::kOakRidgeRackKw},
                   {"airflow_cfm", density::kOakRidgeAirflowCfm},
                   {"duct_side_ft", density::kOakRidgeDuctSideFt}}}};
  }
  return report;
}

Json build_compare_report(const Scenario& scenario, const ArchitectureTco& arch,
                          const RedundancyComparison* redundancy) {
  Json report;
  report["meta"] = build_meta(scenario, "compare");

  Json delta;
  const Json conventional = breakdown_to_json(arch.conventional);
  const Json modular = breakdown_to_json(arch.modular);
  for (auto it = conventional.begin(); it != conventional.end(); ++it)
    delta[it.key()] = modular.at(it.key()).get<double>() - it.value().get<double>();
  report["architecture_tco"] =
      Json{{"conventional", conventional}, {"modular", modular}, {"delta_modular_minus_conventional", delta}};

  report["downtime"] = Json{{"base_hours_per_year", arch.base_downtime_hours_per_year},
                            {"conventional_hours_per_year", arch.conventional_downtime_hours_per_year},
                            {"modular_hours_per_year", arch.modular_downtime_hours_per_year},
                            {"reduction_fraction", arch.downtime_reduction_fraction}};

  if (redundancy != nullptr) {
    report["redundancy"] =
        Json{{"onsite_generators", metrics_to_json(redundancy->onsite.metrics)["aggregate"]},
             {"geo_failover", metrics_to_json(redundancy->geo.metrics)["aggregate"]},
             {"cost_delta_usd", redundancy->cost_delta_usd},
             {"shortfall_delta_hours", redundancy->shortfall_delta_hours},
             {"generator_capex_usd", redundancy->generator_capex_usd},
             {"overprovision_modules", redundancy->overprovision_modules},
             {"overprovision_capex_usd", redundancy->overprovision_capex_usd}};
  } else {
    report["redundancy"] = Json{{"note", "redundancy comparison needs at least 2 sites; skipped"}};
  }
  return report;
}

Json build_sweep_report(const Scenario& scenario, const SweepResult& sweep) {
  Json report;
  report["meta"] = build_meta(scenario, "sweep");
  report["meta"]["parameter"] = sweep.parameter;
  Json rows = Json::array();
  Json series = Json::array();
  for (const SweepRow& row : sweep.rows) {
    rows.push_back(Json{{"value", row.value},
                        {"delivered_system_hours", aggregate_to_json(row.metrics.delivered_system_hours)},
                        {"shortfall_system_hours", aggregate_to_json(row.metrics.shortfall_system_hours)},
                        {"availability", aggregate_to_json(row.metrics.availability)},
                        {"energy_kwh", aggregate_to_json(row.metrics.energy_kwh)},
                        {"tco_total_usd", aggregate_to_json(row.metrics.tco_total_usd)},
                        {"stranded_power_fraction", row.provisioning_outcome.stranded_power_fraction},
                        {"unusable_floor_fraction", row.provisioning_outcome.unusable_floor_fraction},
                        {"stranded_cost_usd", row.provisioning_outcome.stranded_cost_usd},
                        {"wasted_floor_cost_usd", row.provisioning_outcome.wasted_floor_cost_usd}});
    for (size_t i = 0; i < row.metrics.per_replication.size(); ++i) {
      const ReplicationMetrics& r = row.metrics.per_replication[i];
      series.push_back(Json{{"value", row.value},
                            {"replication", i},
                            {"delivered_system_hours", r.delivered_system_hours},
                            {"shortfall_system_hours", r.shortfall_system_hours},
                            {"availability", r.availability},
                            {"energy_kwh", r.energy_kwh},
                            {"tco_total_usd", r.tco.total_usd}});
    }
  }
  report["rows"] = std::move(rows);
  report["per_replication_series"] = std::move(series);
  return report;
}

std::string trace_to_jsonl(const Scenario& scenario, const std::vector<FleetTrace>& traces) {
  std::string out;
  for (size_t rep = 0; rep < traces.size(); ++rep) {
    for (const FleetEvent& ev : traces[rep]) {
      Json line{{"rep", rep},
                {"t", ev.time_years},
                {"kind", std::string(to_string(ev.kind))},
                {"site", scenario.sites[ev.site].name}};
      if (ev.site_to >= 0) line["site_to"] = scenario.sites[ev.site_to].name;
      if (ev.module_id >= 0) line["module"] = ev.module_id;
      line["value"] = ev.value;
      out += line.dump();
      out += '\n';
    }
  }
  return out;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string number_field(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<int64_t>());
  if (j.is_number_unsigned()) return std::to_string(j.get<uint64_t>());
  return format_number(j.get<double>());
}

}  // namespace

std::string format_metrics_csv(const Json& report) {
  std::string out = "metric,mean,std_error\n";
  for (auto it = report.at("metrics").at("aggregate").begin(); it != report.at("metrics").at("aggregate").end();
       ++it) {
    out += it.key();
    out += ',';
    out += number_field(it.value().at("mean"));
    out += ',';
    out += number_field(it.value().at("std_error"));
    out += '\n';
  }
  return out;
}

std::string format_tco_csv(const Json& report) {
  std::string out = "component,usd\n";
  for (auto it = report.at("metrics").at("tco_mean").begin(); it != report.at("metrics").at("tco_mean").end();
       ++it) {
    out += it.key();
    out += ',';
    out += number_field(it.value());
    out += '\n';
  }
  return out;
}

std::string format_compare_csv(const Json& report) {
  const Json& arch = report.at("architecture_tco");
  std::string out = "component,conventional_usd,modular_usd,delta_usd\n";
  const Json& conventional = arch.at("conventional");
  for (auto it = conventional.begin(); it != conventional.end(); ++it) {
    out += it.key();
    out += ',';
    out += number_field(it.value());
    out += ',';
    out += number_field(arch.at("modular").at(it.key()));
    out += ',';
    out += number_field(arch.at("delta_modular_minus_conventional").at(it.key()));
    out += '\n';
  }
  return out;
}

std::string format_sweep_csv(const Json& report) {
  std::string out =
      "value,delivered_mean,delivered_std_error,shortfall_mean,shortfall_std_error,availability_mean,"
      "energy_kwh_mean,tco_total_usd_mean,stranded_power_fraction,unusable_floor_fraction,"
      "stranded_cost_usd,wasted_floor_cost_usd\n";
  for (const Json& row : report.at("rows")) {
    out += number_field(row.at("value"));
    out += ',';
    out += number_field(row.at("delivered_system_hours").at("mean"));
    out += ',';
    out += number_field(row.at("delivered_system_hours").at("std_error"));
    out += ',';
    out += number_field(row.at("shortfall_system_hours").at("mean"));
    out += ',';
    out += number_field(row.at("shortfall_system_hours").at("std_error"));
    out += ',';
    out += number_field(row.at("availability").at("mean"));
    out += ',';
    out += number_field(row.at("energy_kwh").at("mean"));
    out += ',';
    out += number_field(row.at("tco_total_usd").at("mean"));
    out += ',';
    out += number_field(row.at("stranded_power_fraction"));
    out += ',';
    out += number_field(row.at("unusable_floor_fraction"));
    out += ',';
    out += number_field(row.at("stranded_cost_usd"));
    out += ',';
    out += number_field(row.at("wasted_floor_cost_usd"));
    out += '\n';
  }
  return out;
}

std::string format_sweep_series_csv(const Json& report) {
  std::string out =
      "value,replication,delivered_system_hours,shortfall_system_hours,availability,energy_kwh,tco_total_usd\n";
  for (const Json& row : report.at("per_replication_series")) {
    out += number_field(row.at("value"));
    out += ',';
    out += number_field(row.at("replication"));
    out += ',';
    out += number_field(row.at("delivered_system_hours"));
    out += ',';
    out += number_field(row.at("shortfall_system_hours"));
    out += ',';
    out += number_field(row.at("availability"));
    out += ',';
    out += number_field(row.at("energy_kwh"));
    out += ',';
    out += number_field(row.at("tco_total_usd"));
    out += '\n';
  }
  return out;
}

namespace {

void append_kv(std::string& out, const std::string& key, const std::string& value) {
  out += "  ";
  out += key;
  if (key.size() < 34) out += std::string(34 - key.size(), ' ');
  out += "  ";
  out += value;
  out += '\n';
}

}  // namespace

std::string render_simulate_table(const Json& report) {
  std::string out;
  out += "== metrics (mean over replications) ==\n";
  for (auto it = report.at("metrics").at("aggregate").begin(); it != report.at("metrics").at("aggregate").end();
       ++it)
    append_kv(out, it.key(),
              number_field(it.value().at("mean")) + " (se " + number_field(it.value().at("std_error")) + ")");
  out += "== tco (mean, usd) ==\n";
  for (auto it = report.at("metrics").at("tco_mean").begin(); it != report.at("metrics").at("tco_mean").end();
       ++it)
    append_kv(out, it.key(), number_field(it.value()));
  if (report.contains("provisioning")) {
    out += "== provisioning ==\n";
    for (auto it = report.at("provisioning").begin(); it != report.at("provisioning").end(); ++it)
      append_kv(out, it.key(), number_field(it.value()));
  }
  out += "== notes ==\n";
  for (const Json& note : report.at("meta").at("notes")) {
    out += "  - ";
    out += note.get<std::string>();
    out += '\n';
  }
  return out;
}

std::string render_compare_table(const Json& report) {
  std::string out;
  const Json& arch = report.at("architecture_tco");
  out += "== architecture tco (usd) ==\n";
  const Json& conventional = arch.at("conventional");
  for (auto it = conventional.begin(); it != conventional.end(); ++it)
    append_kv(out, it.key(),
              number_field(it.value()) + " | " + number_field(arch.at("modular").at(it.key())) + " | " +
                  number_field(arch.at("delta_modular_minus_conventional").at(it.key())));
  out += "  (columns: conventional | modular | delta)\n";
  out += "== downtime (hours/year) ==\n";
  for (auto it = report.at("downtime").begin(); it != report.at("downtime").end(); ++it)
    append_kv(out, it.key(), number_field(it.value()));
  out += "== redundancy ==\n";
  const Json& redundancy = report.at("redundancy");
  if (redundancy.contains("note")) {
    out += "  ";
    out += redundancy.at("note").get<std::string>();
    out += '\n';
  } else {
    append_kv(out, "cost_delta_usd (geo - onsite)", number_field(redundancy.at("cost_delta_usd")));
    append_kv(out, "shortfall_delta_hours", number_field(redundancy.at("shortfall_delta_hours")));
    append_kv(out, "generator_capex_usd", number_field(redundancy.at("generator_capex_usd")));
    append_kv(out, "overprovision_modules", number_field(redundancy.at("overprovision_modules")));
    append_kv(out, "overprovision_capex_usd", number_field(redundancy.at("overprovision_capex_usd")));
  }
  out += "== notes ==\n";
  for (const Json& note : report.at("meta").at("notes")) {
    out += "  - ";
    out += note.get<std::string>();
    out += '\n';
  }
  return out;
}

std::string render_sweep_table(const Json& report) {
  std::string out;
  out += "== sweep over ";
  out += report.at("meta").at("parameter").get<std::string>();
  out += " ==\n";
  out += "  value | delivered_mean | shortfall_mean | availability_mean | tco_total_mean\n";
  for (const Json& row : report.at("rows")) {
    out += "  ";
    out += number_field(row.at("value"));
    out += " | ";
    out += number_field(row.at("delivered_system_hours").at("mean"));
    out += " | ";
    out += number_field(row.at("shortfall_system_hours").at("mean"));
    out += " | ";
    out += number_field(row.at("availability").at("mean"));
    out += " | ";
    out += number_field(row.at("tco_total_usd").at("mean"));
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << content;
  if (!file) throw std::runtime_error("write failed: " + path);
}

}  // namespace mdcsim
