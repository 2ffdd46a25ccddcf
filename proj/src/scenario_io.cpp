#include "mdcsim/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "mdcsim/power_floor.hpp"

namespace mdcsim {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path, message);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail(join(path, it.key()), "unknown key");
  }
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing required key '") + key + "'");
  return *it;
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int64_t as_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && std::rint(v) == v && std::abs(v) <= 9.0e18) return static_cast<int64_t>(v);
  }
  fail(path, "expected an integer");
}

uint64_t as_u64(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  const int64_t v = as_integer(j, path);
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<uint64_t>(v);
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double opt_number(const Json& obj, const char* key, const std::string& path, double fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_number(*it, join(path, key));
}

int64_t opt_integer(const Json& obj, const char* key, const std::string& path, int64_t fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_integer(*it, join(path, key));
}

// Field-level range guard producing an indexed path in the error.
void bound(bool ok, const std::string& path, const std::string& message) {
  if (!ok) fail(path, message);
}

SystemSpec parse_system(const Json& j, const std::string& path, SystemSpec base) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, path, {"unit_price_usd", "power_draw_w", "annual_failure_prob", "weibull_shape"});
  base.unit_price_usd = opt_number(j, "unit_price_usd", path, base.unit_price_usd);
  base.power_draw_w = opt_number(j, "power_draw_w", path, base.power_draw_w);
  base.annual_failure_prob = opt_number(j, "annual_failure_prob", path, base.annual_failure_prob);
  base.weibull_shape = opt_number(j, "weibull_shape", path, base.weibull_shape);
  bound(base.unit_price_usd >= 0.0, join(path, "unit_price_usd"), "must be >= 0");
  bound(base.power_draw_w >= 0.0, join(path, "power_draw_w"), "must be >= 0");
  bound(base.annual_failure_prob >= 0.0 && base.annual_failure_prob < 1.0,
        join(path, "annual_failure_prob"), "must lie in [0,1)");
  bound(base.weibull_shape > 0.0, join(path, "weibull_shape"), "must be > 0");
  return base;
}

std::pair<ModuleSpec, std::string> parse_module(const Json& j, const std::string& path) {
  std::string preset_name;
  ModuleSpec spec;
  if (j.is_string()) {
    preset_name = j.get<std::string>();
    auto preset = presets::by_name(preset_name);
    if (!preset) fail(path, "unknown module preset '" + preset_name + "'");
    return {*preset, preset_name};
  }
  if (!j.is_object()) fail(path, "expected a preset name or an object");
  check_keys(j, path,
             {"preset", "container_length_ft", "container_width_ft", "system_count", "system",
              "container_price_new_usd", "container_price_remanufactured_usd", "cooling",
              "service_life_years", "cooling_overhead"});
  if (auto it = j.find("preset"); it != j.end()) {
    preset_name = as_string(*it, join(path, "preset"));
    auto preset = presets::by_name(preset_name);
    if (!preset) fail(join(path, "preset"), "unknown module preset '" + preset_name + "'");
    spec = *preset;
  }
  spec.container_length_ft = opt_number(j, "container_length_ft", path, spec.container_length_ft);
  spec.container_width_ft = opt_number(j, "container_width_ft", path, spec.container_width_ft);
  spec.system_count = opt_integer(j, "system_count", path, spec.system_count);
  if (auto it = j.find("system"); it != j.end()) spec.system = parse_system(*it, join(path, "system"), spec.system);
  spec.container_price_new_usd = opt_number(j, "container_price_new_usd", path, spec.container_price_new_usd);
  spec.container_price_remanufactured_usd =
      opt_number(j, "container_price_remanufactured_usd", path, spec.container_price_remanufactured_usd);
  if (auto it = j.find("cooling"); it != j.end()) {
    const std::string name = as_string(*it, join(path, "cooling"));
    auto cooling = cooling_from_string(name);
    if (!cooling) fail(join(path, "cooling"), "expected 'air' or 'direct_liquid'");
    spec.cooling = *cooling;
  }
  spec.service_life_years = opt_number(j, "service_life_years", path, spec.service_life_years);
  spec.cooling_overhead = opt_number(j, "cooling_overhead", path, spec.cooling_overhead);

  bound(spec.container_length_ft == 20.0 || spec.container_length_ft == 40.0,
        join(path, "container_length_ft"), "must be 20 or 40");
  bound(spec.container_width_ft > 0.0, join(path, "container_width_ft"), "must be > 0");
  bound(spec.system_count >= 1, join(path, "system_count"), "must be >= 1");
  bound(spec.container_price_new_usd >= 0.0, join(path, "container_price_new_usd"), "must be >= 0");
  bound(spec.container_price_remanufactured_usd >= 0.0, join(path, "container_price_remanufactured_usd"),
        "must be >= 0");
  bound(spec.service_life_years > 0.0, join(path, "service_life_years"), "must be > 0");
  bound(spec.cooling_overhead >= 0.0, join(path, "cooling_overhead"), "must be >= 0");
  return {spec, preset_name};
}

CostShares parse_shares(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, path, {"power_equipment", "building", "other"});
  const double pe = opt_number(j, "power_equipment", path, 0.40);
  const double building = opt_number(j, "building", path, 0.15);
  const double other = opt_number(j, "other", path, 0.45);
  try {
    return CostShares(pe, building, other);
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

FacilityParams parse_facility(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, path, {"power_capacity_mw", "cost_per_watt_usd", "shares", "generator_unit", "generator_count"});
  FacilityParams params;
  params.power_capacity_mw = opt_number(j, "power_capacity_mw", path, params.power_capacity_mw);
  params.cost_per_watt_usd = opt_number(j, "cost_per_watt_usd", path, params.cost_per_watt_usd);
  if (auto it = j.find("shares"); it != j.end()) params.shares = parse_shares(*it, join(path, "shares"));
  if (auto it = j.find("generator_unit"); it != j.end()) {
    const std::string gu_path = join(path, "generator_unit");
    if (!it->is_object()) fail(gu_path, "expected an object");
    check_keys(*it, gu_path, {"rating_mw", "price_usd"});
    params.generator_unit.rating_mw = opt_number(*it, "rating_mw", gu_path, params.generator_unit.rating_mw);
    params.generator_unit.price_usd = opt_number(*it, "price_usd", gu_path, params.generator_unit.price_usd);
  }
  params.generator_count = opt_integer(j, "generator_count", path, params.generator_count);
  bound(params.power_capacity_mw > 0.0, join(path, "power_capacity_mw"), "must be > 0");
  bound(params.cost_per_watt_usd > 0.0, join(path, "cost_per_watt_usd"), "must be > 0");
  bound(params.generator_count >= 0, join(path, "generator_count"), "must be >= 0");
  bound(params.generator_unit.rating_mw > 0.0, join(path, "generator_unit.rating_mw"), "must be > 0");
  bound(params.generator_unit.price_usd >= 0.0, join(path, "generator_unit.price_usd"), "must be >= 0");
  return params;
}

SiteSpec parse_site(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, path,
             {"name", "module_slots", "stack_height", "deployment_lead_time_years",
              "utility_outage_rate_per_year", "outage_duration_hours", "central_building_area_sqft",
              "circulation_fraction", "facility"});
  SiteSpec site;
  site.name = as_string(require(j, "name", path), join(path, "name"));
  site.module_slots = opt_integer(j, "module_slots", path, site.module_slots);
  site.stack_height = opt_integer(j, "stack_height", path, site.stack_height);
  site.deployment_lead_time_years =
      opt_number(j, "deployment_lead_time_years", path, site.deployment_lead_time_years);
  site.utility_outage_rate_per_year =
      opt_number(j, "utility_outage_rate_per_year", path, site.utility_outage_rate_per_year);
  site.outage_duration_hours = opt_number(j, "outage_duration_hours", path, site.outage_duration_hours);
  site.central_building_area_sqft =
      opt_number(j, "central_building_area_sqft", path, site.central_building_area_sqft);
  site.circulation_fraction = opt_number(j, "circulation_fraction", path, site.circulation_fraction);
  if (auto it = j.find("facility"); it != j.end()) site.facility = parse_facility(*it, join(path, "facility"));

  bound(!site.name.empty(), join(path, "name"), "must not be empty");
  bound(site.module_slots >= 1, join(path, "module_slots"), "must be >= 1");
  bound(site.stack_height >= 1 && site.stack_height <= 5, join(path, "stack_height"),
        "must lie in [1,5]: containers stack 3 to 5 high on the ground (only ships pack 7)");
  bound(site.deployment_lead_time_years >= 0.0, join(path, "deployment_lead_time_years"), "must be >= 0");
  bound(site.utility_outage_rate_per_year >= 0.0, join(path, "utility_outage_rate_per_year"), "must be >= 0");
  bound(site.outage_duration_hours >= 0.0, join(path, "outage_duration_hours"), "must be >= 0");
  bound(site.central_building_area_sqft >= 0.0, join(path, "central_building_area_sqft"), "must be >= 0");
  bound(site.circulation_fraction >= 0.0, join(path, "circulation_fraction"), "must be >= 0");
  return site;
}

DemandCurve parse_demand(const Json& j, const std::string& path, double horizon_years) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, path, {"constant", "breakpoints", "end_time_years"});
  DemandCurve demand;
  const bool has_constant = j.contains("constant");
  const bool has_breakpoints = j.contains("breakpoints");
  if (has_constant == has_breakpoints)
    fail(path, "exactly one of 'constant' or 'breakpoints' is required");
  if (has_constant) {
    if (j.contains("end_time_years"))
      fail(join(path, "end_time_years"), "not allowed with 'constant' (it spans the horizon)");
    const double level = as_number(j.at("constant"), join(path, "constant"));
    bound(level >= 0.0, join(path, "constant"), "must be >= 0");
    demand.breakpoints = {{0.0, level}};
    demand.end_time_years = horizon_years;
    return demand;
  }
  const Json& bps = j.at("breakpoints");
  if (!bps.is_array() || bps.empty()) fail(join(path, "breakpoints"), "expected a non-empty array");
  for (size_t i = 0; i < bps.size(); ++i) {
    const std::string bp_path = join(path, "breakpoints[" + std::to_string(i) + "]");
    const Json& bp = bps[i];
    if (!bp.is_array() || bp.size() != 2) fail(bp_path, "expected [time_years, systems]");
    const double t = as_number(bp[0], bp_path);
    const double v = as_number(bp[1], bp_path);
    bound(v >= 0.0, bp_path, "demand must be >= 0");
    if (i == 0) bound(t == 0.0, bp_path, "first breakpoint must be at time 0");
    if (i > 0) bound(t > demand.breakpoints.back().first, bp_path, "times must strictly increase");
    demand.breakpoints.emplace_back(t, v);
  }
  demand.end_time_years = opt_number(j, "end_time_years", path, horizon_years);
  bound(demand.end_time_years >= demand.breakpoints.back().first, join(path, "end_time_years"),
        "must not precede the last breakpoint");
  return demand;
}

EconKnobs parse_econ(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  check_keys(j, path,
             {"energy_price_per_kwh", "cooling_overhead_conventional", "maintenance", "container_condition",
              "integration_fraction", "admin_staff_cost_per_year", "shipping_cost_per_module_usd",
              "recycle_cost_per_module_usd", "base_downtime_hours_per_year", "admin_error_share",
              "admin_error_elimination", "discount_rate"});
  EconKnobs econ;
  econ.energy_price_per_kwh = opt_number(j, "energy_price_per_kwh", path, econ.energy_price_per_kwh);
  econ.cooling_overhead_conventional =
      opt_number(j, "cooling_overhead_conventional", path, econ.cooling_overhead_conventional);
  if (auto it = j.find("maintenance"); it != j.end()) {
    const std::string m_path = join(path, "maintenance");
    if (!it->is_object()) fail(m_path, "expected an object");
    check_keys(*it, m_path, {"mode", "rate_per_3yr"});
    if (auto mode = it->find("mode"); mode != it->end()) {
      const std::string name = as_string(*mode, join(m_path, "mode"));
      if (name == "none")
        econ.maintenance.mode = MaintenanceMode::kNone;
      else if (name == "field_service")
        econ.maintenance.mode = MaintenanceMode::kFieldService;
      else
        fail(join(m_path, "mode"), "expected 'none' or 'field_service'");
    }
    econ.maintenance.rate_per_3yr = opt_number(*it, "rate_per_3yr", m_path, econ.maintenance.rate_per_3yr);
    bound(econ.maintenance.rate_per_3yr >= 0.0, join(m_path, "rate_per_3yr"), "must be >= 0");
  }
  if (auto it = j.find("container_condition"); it != j.end()) {
    const std::string name = as_string(*it, join(path, "container_condition"));
    if (name == "new")
      econ.container_condition = ContainerCondition::kNew;
    else if (name == "remanufactured")
      econ.container_condition = ContainerCondition::kRemanufactured;
    else
      fail(join(path, "container_condition"), "expected 'new' or 'remanufactured'");
  }
  econ.integration_fraction = opt_number(j, "integration_fraction", path, econ.integration_fraction);
  econ.admin_staff_cost_per_year =
      opt_number(j, "admin_staff_cost_per_year", path, econ.admin_staff_cost_per_year);
  econ.shipping_cost_per_module_usd =
      opt_number(j, "shipping_cost_per_module_usd", path, econ.shipping_cost_per_module_usd);
  econ.recycle_cost_per_module_usd =
      opt_number(j, "recycle_cost_per_module_usd", path, econ.shipping_cost_per_module_usd);
  econ.base_downtime_hours_per_year =
      opt_number(j, "base_downtime_hours_per_year", path, econ.base_downtime_hours_per_year);
  econ.admin_error_share = opt_number(j, "admin_error_share", path, econ.admin_error_share);
  econ.admin_error_elimination = opt_number(j, "admin_error_elimination", path, econ.admin_error_elimination);
  econ.discount_rate = opt_number(j, "discount_rate", path, econ.discount_rate);

  bound(econ.energy_price_per_kwh >= 0.0, join(path, "energy_price_per_kwh"), "must be >= 0");
  bound(econ.cooling_overhead_conventional >= 0.0, join(path, "cooling_overhead_conventional"), "must be >= 0");
  bound(econ.integration_fraction >= 0.0, join(path, "integration_fraction"), "must be >= 0");
  bound(econ.admin_staff_cost_per_year >= 0.0, join(path, "admin_staff_cost_per_year"), "must be >= 0");
  bound(econ.shipping_cost_per_module_usd >= 0.0, join(path, "shipping_cost_per_module_usd"), "must be >= 0");
  bound(econ.recycle_cost_per_module_usd >= 0.0, join(path, "recycle_cost_per_module_usd"), "must be >= 0");
  bound(econ.base_downtime_hours_per_year >= 0.0, join(path, "base_downtime_hours_per_year"), "must be >= 0");
  bound(econ.admin_error_share >= 0.0 && econ.admin_error_share <= 1.0, join(path, "admin_error_share"),
        "must lie in [0,1]");
  bound(econ.admin_error_elimination >= 0.0 && econ.admin_error_elimination <= 1.0,
        join(path, "admin_error_elimination"), "must lie in [0,1]");
  bound(econ.discount_rate >= 0.0, join(path, "discount_rate"), "must be >= 0");
  return econ;
}

Provisioning default_provisioning(const ModuleSpec& module) {
  Provisioning prov;
  prov.realized_w_per_sqft = power_density_w_per_sqft(module);
  // A powered-off module has no meaningful density; fall back to the typical
  // 100 W/sqft design point so the mismatch stays well defined.
  prov.design_w_per_sqft = prov.realized_w_per_sqft > 0.0 ? prov.realized_w_per_sqft : 100.0;
  return prov;
}

Provisioning parse_provisioning(const Json* j, const std::string& path, const ModuleSpec& module) {
  Provisioning prov = default_provisioning(module);
  if (j == nullptr) return prov;
  if (!j->is_object()) fail(path, "expected an object");
  check_keys(*j, path, {"design_w_per_sqft", "realized_w_per_sqft"});
  prov.realized_w_per_sqft = opt_number(*j, "realized_w_per_sqft", path, prov.realized_w_per_sqft);
  prov.design_w_per_sqft = opt_number(*j, "design_w_per_sqft", path,
                                      prov.realized_w_per_sqft > 0.0 ? prov.realized_w_per_sqft : 100.0);
  bound(prov.design_w_per_sqft > 0.0, join(path, "design_w_per_sqft"), "must be > 0");
  bound(prov.realized_w_per_sqft >= 0.0, join(path, "realized_w_per_sqft"), "must be >= 0");
  return prov;
}

}  // namespace

Scenario parse_scenario_json(const Json& doc) {
  if (!doc.is_object()) fail("", "scenario must be a JSON object");
  check_keys(doc, "",
             {"module", "sites", "demand", "strategy", "overprovision_fraction", "horizon_years", "seed",
              "replications", "econ", "provisioning"});

  Scenario scenario;
  auto [module, preset_name] = parse_module(require(doc, "module", ""), "module");
  scenario.module = module;
  scenario.module_preset = preset_name;

  scenario.horizon_years = opt_number(doc, "horizon_years", "", scenario.horizon_years);
  bound(scenario.horizon_years > 0.0, "horizon_years", "must be > 0");

  const Json& sites = require(doc, "sites", "");
  if (!sites.is_array() || sites.empty()) fail("sites", "expected a non-empty array");
  for (size_t i = 0; i < sites.size(); ++i)
    scenario.sites.push_back(parse_site(sites[i], "sites[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < scenario.sites.size(); ++i)
    for (size_t k = i + 1; k < scenario.sites.size(); ++k)
      if (scenario.sites[i].name == scenario.sites[k].name)
        fail("sites[" + std::to_string(k) + "].name", "site names must be unique");

  scenario.demand = parse_demand(require(doc, "demand", ""), "demand", scenario.horizon_years);

  if (auto it = doc.find("strategy"); it != doc.end()) {
    const std::string name = as_string(*it, "strategy");
    auto strategy = strategy_from_string(name);
    if (!strategy) fail("strategy", "expected 'onsite_generators' or 'geo_failover'");
    scenario.strategy = *strategy;
  }
  scenario.overprovision_fraction =
      opt_number(doc, "overprovision_fraction", "", scenario.overprovision_fraction);
  bound(scenario.overprovision_fraction >= 0.0, "overprovision_fraction", "must be >= 0");

  if (auto it = doc.find("seed"); it != doc.end()) scenario.seed = as_u64(*it, "seed");
  scenario.replications = opt_integer(doc, "replications", "", scenario.replications);
  bound(scenario.replications >= 1, "replications", "must be >= 1");

  if (auto it = doc.find("econ"); it != doc.end())
    scenario.econ = parse_econ(*it, "econ");

  const Json* prov = nullptr;
  if (auto it = doc.find("provisioning"); it != doc.end()) prov = &*it;
  scenario.provisioning = parse_provisioning(prov, "provisioning", scenario.module);

  scenario.validate();
  return scenario;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError(path, "cannot open scenario file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Locate the byte offset for a line/column message.
    size_t line = 1, column = 1;
    const size_t limit = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError(path, "syntax error at line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + e.what());
  }
  return parse_scenario_json(doc);
}

Json echo_scenario(const Scenario& s) {
  Json doc;
  Json module;
  if (!s.module_preset.empty()) module["preset"] = s.module_preset;
  module["container_length_ft"] = s.module.container_length_ft;
  module["container_width_ft"] = s.module.container_width_ft;
  module["system_count"] = s.module.system_count;
  module["system"] = Json{{"unit_price_usd", s.module.system.unit_price_usd},
                          {"power_draw_w", s.module.system.power_draw_w},
                          {"annual_failure_prob", s.module.system.annual_failure_prob},
                          {"weibull_shape", s.module.system.weibull_shape}};
  module["container_price_new_usd"] = s.module.container_price_new_usd;
  module["container_price_remanufactured_usd"] = s.module.container_price_remanufactured_usd;
  module["cooling"] = std::string(to_string(s.module.cooling));
  module["service_life_years"] = s.module.service_life_years;
  module["cooling_overhead"] = s.module.cooling_overhead;
  doc["module"] = std::move(module);

  Json sites = Json::array();
  for (const SiteSpec& site : s.sites) {
    Json j;
    j["name"] = site.name;
    j["module_slots"] = site.module_slots;
    j["stack_height"] = site.stack_height;
    j["deployment_lead_time_years"] = site.deployment_lead_time_years;
    j["utility_outage_rate_per_year"] = site.utility_outage_rate_per_year;
    j["outage_duration_hours"] = site.outage_duration_hours;
    j["central_building_area_sqft"] = site.central_building_area_sqft;
    j["circulation_fraction"] = site.circulation_fraction;
    j["facility"] = Json{{"power_capacity_mw", site.facility.power_capacity_mw},
                         {"cost_per_watt_usd", site.facility.cost_per_watt_usd},
                         {"shares",
                          Json{{"power_equipment", site.facility.shares.power_equipment()},
                               {"building", site.facility.shares.building()},
                               {"other", site.facility.shares.other()}}},
                         {"generator_unit",
                          Json{{"rating_mw", site.facility.generator_unit.rating_mw},
                               {"price_usd", site.facility.generator_unit.price_usd}}},
                         {"generator_count", site.facility.generator_count}};
    sites.push_back(std::move(j));
  }
  doc["sites"] = std::move(sites);

  Json breakpoints = Json::array();
  for (const auto& [t, v] : s.demand.breakpoints) breakpoints.push_back(Json::array({t, v}));
  doc["demand"] = Json{{"breakpoints", std::move(breakpoints)}, {"end_time_years", s.demand.end_time_years}};

  doc["strategy"] = std::string(to_string(s.strategy));
  doc["overprovision_fraction"] = s.overprovision_fraction;
  doc["horizon_years"] = s.horizon_years;
  doc["seed"] = s.seed;
  doc["replications"] = s.replications;

  doc["econ"] = Json{{"energy_price_per_kwh", s.econ.energy_price_per_kwh},
                     {"cooling_overhead_conventional", s.econ.cooling_overhead_conventional},
                     {"maintenance",
                      Json{{"mode", std::string(to_string(s.econ.maintenance.mode))},
                           {"rate_per_3yr", s.econ.maintenance.rate_per_3yr}}},
                     {"container_condition", std::string(to_string(s.econ.container_condition))},
                     {"integration_fraction", s.econ.integration_fraction},
                     {"admin_staff_cost_per_year", s.econ.admin_staff_cost_per_year},
                     {"shipping_cost_per_module_usd", s.econ.shipping_cost_per_module_usd},
                     {"recycle_cost_per_module_usd", s.econ.recycle_cost_per_module_usd},
                     {"base_downtime_hours_per_year", s.econ.base_downtime_hours_per_year},
                     {"admin_error_share", s.econ.admin_error_share},
                     {"admin_error_elimination", s.econ.admin_error_elimination},
                     {"discount_rate", s.econ.discount_rate}};

  const Provisioning prov = s.provisioning ? *s.provisioning : default_provisioning(s.module);
  doc["provisioning"] = Json{{"design_w_per_sqft", prov.design_w_per_sqft},
                             {"realized_w_per_sqft", prov.realized_w_per_sqft}};
  return doc;
}

std::string param_path_to_pointer(const std::string& dotted_path) {
  if (dotted_path.empty()) throw ValidationError("param", "empty parameter path");
  std::string pointer;
  size_t pos = 0;
  while (pos < dotted_path.size()) {
    size_t dot = dotted_path.find('.', pos);
    std::string token = dotted_path.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (token.empty()) throw ValidationError("param", "empty path segment in '" + dotted_path + "'");
    // token = name([index])*
    const size_t bracket = token.find('[');
    const std::string head = bracket == std::string::npos ? token : token.substr(0, bracket);
    if (head.empty()) throw ValidationError("param", "malformed segment in '" + dotted_path + "'");
    pointer += "/" + head;
    size_t cursor = head.size();
    while (cursor < token.size()) {
      if (token[cursor] != '[') throw ValidationError("param", "malformed index in '" + dotted_path + "'");
      const size_t close = token.find(']', cursor);
      if (close == std::string::npos) throw ValidationError("param", "malformed index in '" + dotted_path + "'");
      const std::string index = token.substr(cursor + 1, close - cursor - 1);
      if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("param", "malformed index in '" + dotted_path + "'");
      pointer += "/" + index;
      cursor = close + 1;
    }
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return pointer;
}

}  // namespace mdcsim
