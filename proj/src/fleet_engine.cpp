#include "mdcsim/fleet_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace mdcsim {

namespace {

// Module ids are site-stable: id = site * kModuleIdStride + slot, so the same
// physical slot maps to the same id under either redundancy strategy.
constexpr int64_t kModuleIdStride = 1000000;

// Substream purposes; combined with (replication, site, slot, generation)
// they give every sampling site its own deterministic stream.
constexpr uint64_t kPurposeLifetimes = 0x4C494645;  // "LIFE"
constexpr uint64_t kPurposeOutages = 0x4F555447;    // "OUTG"

uint64_t module_stream(int64_t rep, int64_t site, int64_t slot, int64_t generation) {
  uint64_t h = combine64(kPurposeLifetimes, static_cast<uint64_t>(rep));
  h = combine64(h, static_cast<uint64_t>(site));
  h = combine64(h, static_cast<uint64_t>(slot));
  return combine64(h, static_cast<uint64_t>(generation));
}

uint64_t outage_stream(int64_t rep, int64_t site) {
  return combine64(combine64(kPurposeOutages, static_cast<uint64_t>(rep)), static_cast<uint64_t>(site));
}

int event_rank(EventKind kind) {
  switch (kind) {
    case EventKind::kModuleRecycled: return 0;
    case EventKind::kModuleRelocated: return 1;
    case EventKind::kModuleDeployed: return 2;
    case EventKind::kSystemFailed: return 3;
    case EventKind::kDcOutageEnd: return 4;
    case EventKind::kDcOutageStart: return 5;
    case EventKind::kLoadMigrated: return 6;
  }
  return 7;
}

bool event_less(const FleetEvent& a, const FleetEvent& b) {
  if (a.time_years != b.time_years) return a.time_years < b.time_years;
  if (event_rank(a.kind) != event_rank(b.kind)) return event_rank(a.kind) < event_rank(b.kind);
  if (a.site != b.site) return a.site < b.site;
  return a.module_id < b.module_id;
}

// Discounted measure of [a, b] under continuous compounding.
double discount_interval_years(double a, double b, double rate) {
  if (rate == 0.0) return b - a;
  return (std::exp(-rate * a) - std::exp(-rate * b)) / rate;
}

}  // namespace

std::string_view to_string(Strategy s) {
  return s == Strategy::kOnsiteGenerators ? "onsite_generators" : "geo_failover";
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
  if (name == "onsite_generators") return Strategy::kOnsiteGenerators;
  if (name == "geo_failover") return Strategy::kGeoFailover;
  return std::nullopt;
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kModuleDeployed: return "module_deployed";
    case EventKind::kSystemFailed: return "system_failed";
    case EventKind::kModuleRecycled: return "module_recycled";
    case EventKind::kDcOutageStart: return "dc_outage_start";
    case EventKind::kDcOutageEnd: return "dc_outage_end";
    case EventKind::kLoadMigrated: return "load_migrated";
    case EventKind::kModuleRelocated: return "module_relocated";
  }
  return "?";
}

std::optional<EventKind> event_kind_from_string(std::string_view name) {
  for (EventKind kind : {EventKind::kModuleDeployed, EventKind::kSystemFailed, EventKind::kModuleRecycled,
                         EventKind::kDcOutageStart, EventKind::kDcOutageEnd, EventKind::kLoadMigrated,
                         EventKind::kModuleRelocated}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double DemandCurve::at(double t_years) const {
  if (!(t_years >= 0.0)) throw DomainError("demand queried before time 0");
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t_years,
                             [](double t, const std::pair<double, double>& bp) { return t < bp.first; });
  if (it == breakpoints.begin()) throw DomainError("demand has no breakpoint at or before the query time");
  return std::prev(it)->second;
}

void DemandCurve::validate() const {
  if (breakpoints.empty()) throw ValidationError("demand", "at least one breakpoint is required");
  if (breakpoints.front().first != 0.0) throw ValidationError("demand", "first breakpoint must be at time 0");
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i].second >= 0.0)) throw ValidationError("demand", "demand values must be >= 0");
    if (i > 0 && !(breakpoints[i].first > breakpoints[i - 1].first))
      throw ValidationError("demand", "breakpoint times must strictly increase");
  }
  if (!(end_time_years >= breakpoints.back().first))
    throw ValidationError("demand.end_time_years", "must not precede the last breakpoint");
}

void SiteSpec::validate() const {
  if (name.empty()) throw ValidationError("sites[].name", "site name must not be empty");
  if (module_slots < 1) throw ValidationError("sites[].module_slots", "must be >= 1");
  if (stack_height < 1 || stack_height > 5)
    throw ValidationError("sites[].stack_height",
                          "must lie in [1,5]: containers stack 3 to 5 high on the ground (only ships pack 7)");
  if (!(deployment_lead_time_years >= 0.0))
    throw ValidationError("sites[].deployment_lead_time_years", "must be >= 0");
  if (!(utility_outage_rate_per_year >= 0.0))
    throw ValidationError("sites[].utility_outage_rate_per_year", "must be >= 0");
  if (!(outage_duration_hours >= 0.0)) throw ValidationError("sites[].outage_duration_hours", "must be >= 0");
  if (!(central_building_area_sqft >= 0.0))
    throw ValidationError("sites[].central_building_area_sqft", "must be >= 0");
  if (!(circulation_fraction >= 0.0)) throw ValidationError("sites[].circulation_fraction", "must be >= 0");
  facility.validate();
}

void EconKnobs::validate() const {
  maintenance.validate();
  if (!(energy_price_per_kwh >= 0.0)) throw ValidationError("econ.energy_price_per_kwh", "must be >= 0");
  if (!(cooling_overhead_conventional >= 0.0))
    throw ValidationError("econ.cooling_overhead_conventional", "must be >= 0");
  if (!(integration_fraction >= 0.0)) throw ValidationError("econ.integration_fraction", "must be >= 0");
  if (!(admin_staff_cost_per_year >= 0.0))
    throw ValidationError("econ.admin_staff_cost_per_year", "must be >= 0");
  if (!(shipping_cost_per_module_usd >= 0.0))
    throw ValidationError("econ.shipping_cost_per_module_usd", "must be >= 0");
  if (!(recycle_cost_per_module_usd >= 0.0))
    throw ValidationError("econ.recycle_cost_per_module_usd", "must be >= 0");
  if (!(base_downtime_hours_per_year >= 0.0))
    throw ValidationError("econ.base_downtime_hours_per_year", "must be >= 0");
  if (!(admin_error_share >= 0.0 && admin_error_share <= 1.0))
    throw ValidationError("econ.admin_error_share", "must lie in [0,1]");
  if (!(admin_error_elimination >= 0.0 && admin_error_elimination <= 1.0))
    throw ValidationError("econ.admin_error_elimination", "must lie in [0,1]");
  if (!(discount_rate >= 0.0)) throw ValidationError("econ.discount_rate", "must be >= 0");
}

void Scenario::validate() const {
  module.validate();
  if (sites.empty()) throw ValidationError("sites", "at least one site is required");
  std::unordered_set<std::string> names;
  for (const auto& site : sites) {
    site.validate();
    if (!names.insert(site.name).second)
      throw ValidationError("sites[].name", "site names must be unique: " + site.name);
  }
  if (!(horizon_years > 0.0)) throw ValidationError("horizon_years", "must be > 0");
  if (replications < 1) throw ValidationError("replications", "must be >= 1");
  demand.validate();
  if (demand.end_time_years < horizon_years)
    throw ValidationError("demand.end_time_years", "demand horizon is shorter than the scenario horizon");
  if (!(overprovision_fraction >= 0.0)) throw ValidationError("overprovision_fraction", "must be >= 0");
  econ.validate();
  if (provisioning) {
    if (!(provisioning->design_w_per_sqft > 0.0))
      throw ValidationError("provisioning.design_w_per_sqft", "must be > 0");
    if (!(provisioning->realized_w_per_sqft >= 0.0))
      throw ValidationError("provisioning.realized_w_per_sqft", "must be >= 0");
  }
  for (const auto& site : sites) {
    if (deployed_module_count(*this, site) > kModuleIdStride)
      throw ValidationError("sites[].module_slots", "too many modules at one site");
  }
}

int64_t deployed_module_count(const Scenario& scenario, const SiteSpec& site) {
  int64_t extra = 0;
  if (scenario.strategy == Strategy::kGeoFailover && scenario.overprovision_fraction > 0.0) {
    const double raw = static_cast<double>(site.module_slots) * scenario.overprovision_fraction;
    extra = static_cast<int64_t>(std::ceil(raw - 1e-9));
    if (extra < 0) extra = 0;
  }
  return site.module_slots + extra;
}

namespace {

// Incremental fleet state shared by trace replay and load-migration
// injection. All capacity arithmetic is integer, so replay order is the only
// thing that matters for determinism.
struct FleetState {
  struct ModState {
    int32_t site = -1;
    int64_t systems = 0;
    bool online = false;
  };

  explicit FleetState(const Scenario& scenario)
      : strategy(scenario.strategy), site_capacity(scenario.sites.size(), 0), down_depth(scenario.sites.size(), 0) {}

  Strategy strategy;
  std::unordered_map<int64_t, ModState> modules;
  std::vector<int64_t> site_capacity;
  std::vector<int> down_depth;
  int64_t serving_capacity = 0;  // online systems at sites currently counted

  bool site_counted(int32_t site) const {
    return strategy == Strategy::kOnsiteGenerators || down_depth[site] == 0;
  }

  void add_capacity(int32_t site, int64_t delta) {
    site_capacity[site] += delta;
    if (site_counted(site)) serving_capacity += delta;
  }

  // Applies one event; returns the site capacity displaced by an outage
  // start (used for load_migrated injection), else -1.
  int64_t apply(const FleetEvent& ev) {
    switch (ev.kind) {
      case EventKind::kModuleDeployed: {
        ModState& m = modules[ev.module_id];
        if (m.online) add_capacity(m.site, -m.systems);
        m.site = ev.site;
        m.systems = std::llround(ev.value);
        m.online = true;
        add_capacity(m.site, m.systems);
        break;
      }
      case EventKind::kSystemFailed: {
        ModState& m = modules[ev.module_id];
        const int64_t surviving = std::llround(ev.value);
        if (m.online) add_capacity(m.site, surviving - m.systems);
        m.systems = surviving;
        break;
      }
      case EventKind::kModuleRecycled:
      case EventKind::kModuleRelocated: {
        ModState& m = modules[ev.module_id];
        if (m.online) add_capacity(m.site, -m.systems);
        m.online = false;
        break;
      }
      case EventKind::kDcOutageStart: {
        const int64_t displaced = site_capacity[ev.site];
        if (strategy == Strategy::kGeoFailover && down_depth[ev.site] == 0)
          serving_capacity -= site_capacity[ev.site];
        ++down_depth[ev.site];
        return displaced;
      }
      case EventKind::kDcOutageEnd: {
        --down_depth[ev.site];
        if (strategy == Strategy::kGeoFailover && down_depth[ev.site] == 0)
          serving_capacity += site_capacity[ev.site];
        break;
      }
      case EventKind::kLoadMigrated:
        break;
    }
    return -1;
  }
};

FleetTrace simulate_replication(const Scenario& scenario, int64_t rep) {
  FleetTrace events;
  const ModuleSpec& module = scenario.module;
  const double horizon = scenario.horizon_years;

  for (size_t s = 0; s < scenario.sites.size(); ++s) {
    const SiteSpec& site = scenario.sites[s];
    const int32_t site_index = static_cast<int32_t>(s);
    const int64_t module_count = deployed_module_count(scenario, site);

    for (int64_t slot = 0; slot < module_count; ++slot) {
      const int64_t id = static_cast<int64_t>(s) * kModuleIdStride + slot;
      double deploy_time = site.deployment_lead_time_years;
      for (int64_t generation = 0; deploy_time < horizon; ++generation) {
        const double window = std::min(module.service_life_years, horizon - deploy_time);
        RngStream rng(scenario.seed, module_stream(rep, site_index, slot, generation));
        const std::vector<double> deaths = sample_failure_times(module, window, rng);

        events.push_back({deploy_time, EventKind::kModuleDeployed, site_index, -1, id,
                          static_cast<double>(module.system_count)});
        int64_t surviving = module.system_count;
        for (double death : deaths) {
          --surviving;
          events.push_back({deploy_time + death, EventKind::kSystemFailed, site_index, -1, id,
                            static_cast<double>(surviving)});
        }
        const double recycle_time = deploy_time + module.service_life_years;
        if (recycle_time > horizon) break;
        events.push_back({recycle_time, EventKind::kModuleRecycled, site_index, -1, id,
                          static_cast<double>(module.system_count - surviving)});
        deploy_time = recycle_time + site.deployment_lead_time_years;
      }
    }

    if (site.utility_outage_rate_per_year > 0.0) {
      RngStream rng(scenario.seed, outage_stream(rep, site_index));
      const double duration_years = site.outage_duration_hours / kHoursPerYear;
      double clock = 0.0;
      while (true) {
        const double start = clock + rng.exponential(site.utility_outage_rate_per_year);
        if (!(start < horizon)) break;
        const double end = std::min(start + duration_years, horizon);
        events.push_back({start, EventKind::kDcOutageStart, site_index, -1, -1, 0.0});
        events.push_back({end, EventKind::kDcOutageEnd, site_index, -1, -1, site.outage_duration_hours});
        clock = start + duration_years;  // next arrival sampled once the site is back up
      }
    }
  }

  std::stable_sort(events.begin(), events.end(), event_less);

  // Under geo_failover, annotate each outage start with the capacity it
  // displaces onto the surviving sites.
  if (scenario.strategy == Strategy::kGeoFailover) {
    FleetTrace annotated;
    annotated.reserve(events.size());
    FleetState state(scenario);
    for (const FleetEvent& ev : events) {
      const int64_t displaced = state.apply(ev);
      annotated.push_back(ev);
      if (ev.kind == EventKind::kDcOutageStart && displaced >= 0) {
        annotated.push_back(
            {ev.time_years, EventKind::kLoadMigrated, ev.site, -1, -1, static_cast<double>(displaced)});
      }
    }
    events = std::move(annotated);
  }
  return events;
}

}  // namespace

ReplicationMetrics replay_replication(const Scenario& scenario, const FleetTrace& trace) {
  const double horizon = scenario.horizon_years;
  const double rate = scenario.econ.discount_rate;
  FleetState state(scenario);
  ReplicationMetrics metrics;

  double demanded_years = 0.0;
  double served_years = 0.0;
  double shortfall_years = 0.0;
  double available_years = 0.0;
  double powered_disc_years = 0.0;  // discounted online system-years, for the energy bill

  // TCO accumulators.
  const double module_price =
      module_capex_usd(scenario.module, scenario.econ.container_condition, scenario.econ.integration_fraction);
  const double container_price = scenario.econ.container_condition == ContainerCondition::kNew
                                     ? scenario.module.container_price_new_usd
                                     : scenario.module.container_price_remanufactured_usd;
  const double systems_price = module_price - container_price;
  double containers_usd = 0.0;
  double systems_usd = 0.0;
  double recycle_usd = 0.0;
  std::unordered_set<int64_t> purchased;

  double cursor = 0.0;
  size_t next_bp = 1;  // demand.breakpoints[0] is at time 0

  auto integrate_to = [&](double target) {
    target = std::min(target, horizon);
    while (cursor < target) {
      double segment_end = target;
      while (next_bp < scenario.demand.breakpoints.size() &&
             scenario.demand.breakpoints[next_bp].first <= cursor)
        ++next_bp;
      if (next_bp < scenario.demand.breakpoints.size())
        segment_end = std::min(segment_end, scenario.demand.breakpoints[next_bp].first);
      const double dt = segment_end - cursor;
      const double demand = scenario.demand.at(cursor);
      const double available = static_cast<double>(state.serving_capacity);
      const double served = std::min(demand, available);
      demanded_years += demand * dt;
      served_years += served * dt;
      shortfall_years += (demand - served) * dt;
      available_years += available * dt;
      powered_disc_years += available * discount_interval_years(cursor, segment_end, rate);
      cursor = segment_end;
    }
  };

  for (const FleetEvent& ev : trace) {
    integrate_to(ev.time_years);
    switch (ev.kind) {
      case EventKind::kModuleDeployed:
        if (purchased.insert(ev.module_id).second) {
          // Initial purchase, ordered at time zero.
          containers_usd += container_price;
          systems_usd += systems_price;
          ++metrics.module_purchases;
        }
        break;
      case EventKind::kSystemFailed:
        ++metrics.system_failures;
        break;
      case EventKind::kModuleRecycled: {
        // One recycle return pays the return shipping and the refresh.
        const double discount = std::exp(-rate * ev.time_years);
        recycle_usd += scenario.econ.recycle_cost_per_module_usd * discount;
        containers_usd += container_price * discount;
        systems_usd += systems_price * discount;
        ++metrics.recycle_count;
        ++metrics.module_purchases;
        break;
      }
      default:
        break;
    }
    state.apply(ev);
  }
  integrate_to(horizon);

  metrics.demanded_system_hours = demanded_years * kHoursPerYear;
  metrics.delivered_system_hours = served_years * kHoursPerYear;
  metrics.shortfall_system_hours = shortfall_years * kHoursPerYear;
  metrics.available_system_hours = available_years * kHoursPerYear;
  metrics.availability =
      metrics.demanded_system_hours > 0.0 ? metrics.delivered_system_hours / metrics.demanded_system_hours : 1.0;

  const double gross_power_factor = (1.0 + scenario.module.cooling_overhead);
  metrics.energy_kwh =
      powered_disc_years * kHoursPerYear * (scenario.module.system.power_draw_w / 1000.0) * gross_power_factor;

  CostBreakdown& tco = metrics.tco;
  for (const SiteSpec& site : scenario.sites) {
    const CostBreakdown facility = facility_capex(site.facility);
    tco.building_usd += facility.building_usd;
    tco.power_equipment_usd += facility.power_equipment_usd;
    tco.other_facility_usd += facility.other_facility_usd;
    if (scenario.strategy == Strategy::kOnsiteGenerators) tco.generators_usd += facility.generators_usd;
  }
  tco.containers_usd = containers_usd;
  tco.systems_usd = systems_usd;
  tco.recycle_usd = recycle_usd;
  tco.energy_usd = metrics.energy_kwh * scenario.econ.energy_price_per_kwh;

  int64_t design_systems = 0;
  for (const SiteSpec& site : scenario.sites)
    design_systems += deployed_module_count(scenario, site) * scenario.module.system_count;
  const double opex_years = discounted_years(horizon, rate);
  tco.field_maintenance_usd = maintenance_cost_usd(scenario.econ.maintenance,
                                                   scenario.module.system.unit_price_usd, design_systems, opex_years);
  tco.admin_staff_usd = scenario.econ.admin_staff_cost_per_year * opex_years;
  tco.set_total_from_components();
  return metrics;
}

namespace {

Aggregate aggregate_of(const std::vector<ReplicationMetrics>& reps, double (*pick)(const ReplicationMetrics&)) {
  Aggregate agg;
  const size_t n = reps.size();
  if (n == 0) return agg;
  double sum = 0.0;
  for (const auto& r : reps) sum += pick(r);
  agg.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (const auto& r : reps) {
      const double d = pick(r) - agg.mean;
      ss += d * d;
    }
    agg.std_error = std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
  }
  return agg;
}

Metrics aggregate_metrics(std::vector<ReplicationMetrics> reps) {
  Metrics metrics;
  metrics.demanded_system_hours =
      aggregate_of(reps, [](const ReplicationMetrics& r) { return r.demanded_system_hours; });
  metrics.delivered_system_hours =
      aggregate_of(reps, [](const ReplicationMetrics& r) { return r.delivered_system_hours; });
  metrics.shortfall_system_hours =
      aggregate_of(reps, [](const ReplicationMetrics& r) { return r.shortfall_system_hours; });
  metrics.available_system_hours =
      aggregate_of(reps, [](const ReplicationMetrics& r) { return r.available_system_hours; });
  metrics.availability = aggregate_of(reps, [](const ReplicationMetrics& r) { return r.availability; });
  metrics.energy_kwh = aggregate_of(reps, [](const ReplicationMetrics& r) { return r.energy_kwh; });
  metrics.tco_total_usd = aggregate_of(reps, [](const ReplicationMetrics& r) { return r.tco.total_usd; });

  const double n = static_cast<double>(reps.size());
  CostBreakdown& mean = metrics.tco_mean;
  for (const auto& r : reps) mean += r.tco;
  if (!reps.empty()) {
    mean.building_usd /= n;
    mean.power_equipment_usd /= n;
    mean.other_facility_usd /= n;
    mean.systems_usd /= n;
    mean.containers_usd /= n;
    mean.generators_usd /= n;
    mean.energy_usd /= n;
    mean.field_maintenance_usd /= n;
    mean.admin_staff_usd /= n;
    mean.recycle_usd /= n;
    mean.total_usd /= n;
  }
  metrics.per_replication = std::move(reps);
  return metrics;
}

}  // namespace

RunResult run(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  const int64_t replication_count = scenario.replications;
  std::vector<ReplicationMetrics> reps(replication_count);
  RunResult result;
  if (options.keep_traces) result.traces.resize(replication_count);

  int threads = options.thread_count > 0 ? options.thread_count
                                         : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<int64_t>(replication_count, 64))));

  std::atomic<int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    try {
      while (true) {
        const int64_t rep = next.fetch_add(1);
        if (rep >= replication_count) break;
        FleetTrace trace = simulate_replication(scenario, rep);
        reps[rep] = replay_replication(scenario, trace);
        if (options.keep_traces) result.traces[rep] = std::move(trace);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.metrics = aggregate_metrics(std::move(reps));
  return result;
}

RedundancyComparison compare_redundancy(const Scenario& scenario, const RunOptions& options) {
  if (scenario.sites.size() < 2)
    throw ValidationError("strategy", "geo_failover is meaningless with fewer than 2 sites");
  Scenario onsite = scenario;
  onsite.strategy = Strategy::kOnsiteGenerators;
  Scenario geo = scenario;
  geo.strategy = Strategy::kGeoFailover;

  RedundancyComparison cmp;
  cmp.onsite = run(onsite, options);
  cmp.geo = run(geo, options);
  cmp.cost_delta_usd = cmp.geo.metrics.tco_total_usd.mean - cmp.onsite.metrics.tco_total_usd.mean;
  cmp.shortfall_delta_hours =
      cmp.geo.metrics.shortfall_system_hours.mean - cmp.onsite.metrics.shortfall_system_hours.mean;
  cmp.generator_capex_usd = cmp.onsite.metrics.tco_mean.generators_usd;
  for (const SiteSpec& site : scenario.sites)
    cmp.overprovision_modules += deployed_module_count(geo, site) - site.module_slots;
  cmp.overprovision_capex_usd =
      static_cast<double>(cmp.overprovision_modules) *
      module_capex_usd(scenario.module, scenario.econ.container_condition, scenario.econ.integration_fraction);
  return cmp;
}

double yard_area_sqft(int64_t module_count, const ModuleSpec& spec, int64_t stack_height,
                      double central_building_area_sqft, double circulation_fraction) {
  if (stack_height < 1) throw DomainError("yard_area: stack_height must be >= 1");
  if (module_count < 0) throw DomainError("yard_area: module_count must be >= 0");
  if (!(central_building_area_sqft >= 0.0)) throw DomainError("yard_area: building area must be >= 0");
  if (!(circulation_fraction >= 0.0)) throw DomainError("yard_area: circulation_fraction must be >= 0");
  const int64_t ground_positions = (module_count + stack_height - 1) / stack_height;
  return static_cast<double>(ground_positions) * module_footprint_sqft(spec) * (1.0 + circulation_fraction) +
         central_building_area_sqft;
}

RelocationPlan relocate(const Scenario& scenario, const FleetPlacement& placement, int32_t site_from,
                        int32_t site_to, const std::vector<int64_t>& module_ids, double cost_per_module_usd,
                        double downtime_hours, double at_time_years) {
  const auto site_count = static_cast<int32_t>(scenario.sites.size());
  if (site_from < 0 || site_from >= site_count || site_to < 0 || site_to >= site_count)
    throw ValidationError("relocate", "site index out of range");
  if (placement.modules_by_site.size() != scenario.sites.size())
    throw ValidationError("relocate", "placement does not match the scenario's sites");
  if (!(cost_per_module_usd >= 0.0)) throw DomainError("relocate: cost_per_module_usd must be >= 0");
  if (!(downtime_hours >= 0.0)) throw DomainError("relocate: downtime_hours must be >= 0");
  if (!(at_time_years >= 0.0)) throw DomainError("relocate: at_time_years must be >= 0");

  const auto& from_modules = placement.modules_by_site[site_from];
  const int64_t free_slots =
      scenario.sites[site_to].module_slots - static_cast<int64_t>(placement.modules_by_site[site_to].size());
  if (static_cast<int64_t>(module_ids.size()) > free_slots)
    throw ValidationError("relocate", "slot overflow at destination site " + scenario.sites[site_to].name);

  RelocationPlan plan;
  const double arrival = at_time_years + downtime_hours / kHoursPerYear;
  for (int64_t id : module_ids) {
    auto it = std::find_if(from_modules.begin(), from_modules.end(),
                           [&](const PlacedModule& p) { return p.module_id == id; });
    if (it == from_modules.end())
      throw ValidationError("relocate", "module " + std::to_string(id) + " is not deployed at the source site");
    plan.events.push_back({at_time_years, EventKind::kModuleRelocated, site_from, site_to, id, downtime_hours});
    plan.events.push_back({arrival, EventKind::kModuleDeployed, site_to, -1, id,
                           static_cast<double>(it->surviving_systems)});
  }
  plan.cost_usd = static_cast<double>(module_ids.size()) * cost_per_module_usd;
  return plan;
}

}  // namespace mdcsim
