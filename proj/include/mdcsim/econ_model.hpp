#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mdcsim/core_model.hpp"

namespace mdcsim {

enum class Architecture { kConventional, kModular };
enum class ContainerCondition { kNew, kRemanufactured };
enum class MaintenanceMode { kFieldService, kNone };

std::string_view to_string(Architecture a);
std::string_view to_string(ContainerCondition c);
std::string_view to_string(MaintenanceMode m);

/// Contracted field service runs about 25% of the system price over a
/// 3-year service life; sealed modules are never serviced (mode none).
struct MaintenancePolicy {
  MaintenanceMode mode = MaintenanceMode::kNone;
  double rate_per_3yr = 0.25;  // fraction of system price per 3 years

  void validate() const;
};

struct GeneratorUnit {
  double rating_mw = 2.5;
  double price_usd = 1.5e6;  // knob; no published anchor
};

/// Conventional facility build parameters. The $10/W default pairs the
/// "$150M facility" and "15 MW facility" anchors; it is an inferred pairing
/// and is flagged as such in reports.
struct FacilityParams {
  double power_capacity_mw = 15.0;
  double cost_per_watt_usd = 10.0;
  CostShares shares;
  GeneratorUnit generator_unit;
  int64_t generator_count = 10;  // typical heavy redundancy: 10+ diesel units

  void validate() const;
};

/// Capex/opex components for one architecture over a horizon. Components are
/// all non-negative in USD and total equals their sum.
struct CostBreakdown {
  // capex
  double building_usd = 0.0;
  double power_equipment_usd = 0.0;
  double other_facility_usd = 0.0;
  double systems_usd = 0.0;
  double containers_usd = 0.0;
  double generators_usd = 0.0;
  // opex
  double energy_usd = 0.0;
  double field_maintenance_usd = 0.0;
  double admin_staff_usd = 0.0;
  double recycle_usd = 0.0;

  double total_usd = 0.0;

  double component_sum() const;
  void set_total_from_components() { total_usd = component_sum(); }
  void validate() const;
  CostBreakdown& operator+=(const CostBreakdown& other);
};

/// Purchase price of one populated module: container (new or remanufactured)
/// plus systems, with the integration fraction applied to the systems
/// portion only.
double module_capex_usd(const ModuleSpec& spec, ContainerCondition condition, double integration_fraction);

/// Field maintenance over `years`, linearly prorated from the per-3-year
/// rate. Mode none costs nothing.
double maintenance_cost_usd(const MaintenancePolicy& policy, double unit_price_usd, int64_t system_count,
                            double years);

/// Facility-only breakdown: building / power equipment / other split by
/// shares of power_capacity * cost_per_watt, generators priced separately.
CostBreakdown facility_capex(const FacilityParams& params);

/// Energy bill: IT power grossed up by the cooling overhead, 8,766 h/yr.
double energy_opex_usd(double mean_it_power_kw, double cooling_overhead, double price_per_kwh, double years);

/// Residual downtime once a share of outages (those caused by hands-on
/// administration) is eliminated: base * (1 - share * elimination).
double downtime_hours_per_year(double base_downtime_hours, double admin_error_share, double elimination);

/// Effective discounted years for a constant flow over [0, years] at a
/// continuously compounded rate; equals `years` when rate is 0.
double discounted_years(double years, double discount_rate);

struct TcoInputs {
  ModuleSpec module;
  int64_t module_count = 1;
  ContainerCondition container_condition = ContainerCondition::kNew;
  double integration_fraction = 0.0;
  std::optional<FacilityParams> facility = FacilityParams{};  // nullopt: no facility build
  MaintenancePolicy maintenance;
  double cooling_overhead = 0.5;  // architecture-appropriate value
  double energy_price_per_kwh = 0.07;
  double admin_staff_cost_per_year = 0.0;
  double recycle_cost_per_module_usd = 0.0;
  double discount_rate = 0.0;
  double horizon_years = 3.0;

  void validate() const;
};

/// Deterministic total cost of ownership for one architecture over the
/// horizon. Both architectures refresh systems every service life
/// (k*life <= horizon); the modular side additionally buys containers and
/// pays one recycle return per refresh cycle, and must use maintenance mode
/// none (conventional must use field_service).
CostBreakdown tco(Architecture architecture, const TcoInputs& inputs);

}  // namespace mdcsim
