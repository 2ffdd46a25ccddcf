#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdcsim/core_model.hpp"
#include "mdcsim/econ_model.hpp"
#include "mdcsim/failure_engine.hpp"

namespace mdcsim {

enum class Strategy { kOnsiteGenerators, kGeoFailover };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view name);

/// Required healthy-system capacity over time, piecewise constant and
/// right-continuous. Must cover at least the scenario horizon.
struct DemandCurve {
  std::vector<std::pair<double, double>> breakpoints;  // (time_years, systems)
  double end_time_years = 0.0;

  double at(double t_years) const;
  void validate() const;
};

/// One data-center site: a fenced, paved yard of stacked containers around a
/// small central services building (ground stacking tops out at 5; only
/// ships pack them higher).
struct SiteSpec {
  std::string name;
  int64_t module_slots = 1;
  int64_t stack_height = 3;  // ground stacking: 1..5
  double deployment_lead_time_years = 0.25;  // container delivery; facility builds run ~24 months
  FacilityParams facility;
  double utility_outage_rate_per_year = 0.0;
  double outage_duration_hours = 8.0;
  double central_building_area_sqft = 5000.0;
  double circulation_fraction = 0.0;

  void validate() const;
};

/// Economic knobs shared by the fleet simulation and the architecture
/// comparison. All defaults are overridable from scenario files.
struct EconKnobs {
  double energy_price_per_kwh = 0.07;
  double cooling_overhead_conventional = 0.5;
  MaintenancePolicy maintenance;  // mode none: modular fleets are unserviced
  ContainerCondition container_condition = ContainerCondition::kNew;
  double integration_fraction = 0.0;
  double admin_staff_cost_per_year = 0.0;
  double shipping_cost_per_module_usd = 0.0;
  double recycle_cost_per_module_usd = 0.0;  // defaults to the shipping knob
  double base_downtime_hours_per_year = 87.66;
  double admin_error_share = 0.2;      // hands-on admin causes 20-50% of outages
  double admin_error_elimination = 1.0;
  double discount_rate = 0.0;

  void validate() const;
};

/// Optional power-density provisioning study attached to a scenario.
struct Provisioning {
  double design_w_per_sqft = 0.0;
  double realized_w_per_sqft = 0.0;
};

/// The unit of simulation: fleet composition, demand, strategy, horizon,
/// seed. Fully deterministic given its seed.
struct Scenario {
  std::string module_preset;  // empty when the module was given inline
  ModuleSpec module;
  std::vector<SiteSpec> sites;
  DemandCurve demand;
  Strategy strategy = Strategy::kOnsiteGenerators;
  double overprovision_fraction = 0.0;  // geo_failover only
  double horizon_years = 3.0;
  uint64_t seed = 1;
  int64_t replications = 100;
  EconKnobs econ;
  std::optional<Provisioning> provisioning;

  void validate() const;
};

enum class EventKind {
  kModuleDeployed,
  kSystemFailed,
  kModuleRecycled,
  kDcOutageStart,
  kDcOutageEnd,
  kLoadMigrated,
  kModuleRelocated,
};

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view name);

/// One timestamped simulation event. `value` is kind-specific:
///   module_deployed  -> operational system count the module comes up with
///   system_failed    -> surviving system count after the failure
///   module_recycled  -> failed count handed back to the supplier
///   dc_outage_start  -> 0
///   dc_outage_end    -> outage duration in hours
///   load_migrated    -> displaced system capacity
///   module_relocated -> transit downtime in hours (site_to = destination)
struct FleetEvent {
  double time_years = 0.0;
  EventKind kind = EventKind::kModuleDeployed;
  int32_t site = -1;
  int32_t site_to = -1;
  int64_t module_id = -1;
  double value = 0.0;
};

using FleetTrace = std::vector<FleetEvent>;

struct ReplicationMetrics {
  double demanded_system_hours = 0.0;
  double delivered_system_hours = 0.0;  // served = min(demand, online capacity)
  double shortfall_system_hours = 0.0;
  double available_system_hours = 0.0;  // online capacity integral
  double availability = 1.0;            // delivered / demanded (1 when demand is 0)
  double energy_kwh = 0.0;
  int64_t system_failures = 0;
  int64_t recycle_count = 0;
  int64_t module_purchases = 0;
  CostBreakdown tco;
};

struct Aggregate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct Metrics {
  std::vector<ReplicationMetrics> per_replication;
  Aggregate demanded_system_hours;
  Aggregate delivered_system_hours;
  Aggregate shortfall_system_hours;
  Aggregate available_system_hours;
  Aggregate availability;
  Aggregate energy_kwh;
  Aggregate tco_total_usd;
  CostBreakdown tco_mean;
};

struct RunOptions {
  bool keep_traces = true;
  int thread_count = 0;  // 0: pick from hardware
};

struct RunResult {
  std::vector<FleetTrace> traces;  // empty when keep_traces is false
  Metrics metrics;
};

/// Modules a site operates under the scenario strategy: its slots, plus
/// ceil(slots * overprovision_fraction) extra under geo_failover.
int64_t deployed_module_count(const Scenario& scenario, const SiteSpec& site);

/// Event-driven simulation over the scenario horizon: deploy after lead
/// time, degrade, recycle and replace on the service-life cycle, take
/// utility outages, and serve demand under the redundancy strategy.
/// Deterministic per (scenario, seed); replications run on disjoint RNG
/// streams.
RunResult run(const Scenario& scenario, const RunOptions& options = {});

/// Rebuild one replication's metrics from its event trace. run() reports
/// exactly what this function computes; the trace is the source of truth.
ReplicationMetrics replay_replication(const Scenario& scenario, const FleetTrace& trace);

struct RedundancyComparison {
  RunResult onsite;
  RunResult geo;
  double cost_delta_usd = 0.0;        // geo mean total - onsite mean total
  double shortfall_delta_hours = 0.0; // geo mean shortfall - onsite mean shortfall
  double generator_capex_usd = 0.0;   // charged under onsite_generators only
  int64_t overprovision_modules = 0;  // extra modules deployed under geo_failover
  double overprovision_capex_usd = 0.0;
};

/// Run both redundancy strategies on one scenario with common random
/// numbers (same seed, same substreams), so failure and outage draws match
/// event for event. Requires >= 2 sites.
RedundancyComparison compare_redundancy(const Scenario& scenario, const RunOptions& options = {});

/// Paved yard area for a stack of containers around the central services
/// building: ceil(modules / stack) ground positions, each one footprint,
/// plus circulation margin.
double yard_area_sqft(int64_t module_count, const ModuleSpec& spec, int64_t stack_height,
                      double central_building_area_sqft, double circulation_fraction);

/// Where every module currently sits and how much of it still works.
struct PlacedModule {
  int64_t module_id = 0;
  int64_t surviving_systems = 0;
};

struct FleetPlacement {
  std::vector<std::vector<PlacedModule>> modules_by_site;  // index = site
};

struct RelocationPlan {
  FleetTrace events;
  double cost_usd = 0.0;
};

/// Plan trucking `module_ids` from one site to another at `at_time_years`.
/// Emits a module_relocated event per module plus the re-deploy event at
/// arrival (capacity is unavailable during transit). Surviving counts are
/// carried through unchanged; in-transit failures are not modeled.
RelocationPlan relocate(const Scenario& scenario, const FleetPlacement& placement, int32_t site_from,
                        int32_t site_to, const std::vector<int64_t>& module_ids, double cost_per_module_usd,
                        double downtime_hours, double at_time_years);

}  // namespace mdcsim
