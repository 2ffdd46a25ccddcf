#include "mdcsim/econ_model.hpp"

#include <cmath>

namespace mdcsim {

std::string_view to_string(Architecture a) {
  return a == Architecture::kConventional ? "conventional" : "modular";
}

std::string_view to_string(ContainerCondition c) {
  return c == ContainerCondition::kNew ? "new" : "remanufactured";
}

std::string_view to_string(MaintenanceMode m) {
  return m == MaintenanceMode::kFieldService ? "field_service" : "none";
}

void MaintenancePolicy::validate() const {
  if (!(rate_per_3yr >= 0.0)) throw DomainError("maintenance rate_per_3yr must be >= 0");
}

void FacilityParams::validate() const {
  if (!(power_capacity_mw > 0.0)) throw DomainError("facility power_capacity_mw must be > 0");
  if (!(cost_per_watt_usd > 0.0)) throw DomainError("facility cost_per_watt_usd must be > 0");
  if (generator_count < 0) throw DomainError("generator_count must be >= 0");
  if (!(generator_unit.rating_mw > 0.0)) throw DomainError("generator rating_mw must be > 0");
  if (!(generator_unit.price_usd >= 0.0)) throw DomainError("generator price_usd must be >= 0");
}

double CostBreakdown::component_sum() const {
  return building_usd + power_equipment_usd + other_facility_usd + systems_usd + containers_usd +
         generators_usd + energy_usd + field_maintenance_usd + admin_staff_usd + recycle_usd;
}

void CostBreakdown::validate() const {
  const double components[] = {building_usd,   power_equipment_usd, other_facility_usd, systems_usd,
                               containers_usd, generators_usd,      energy_usd,         field_maintenance_usd,
                               admin_staff_usd, recycle_usd};
  for (double c : components)
    if (!(c >= 0.0)) throw DomainError("cost breakdown components must be >= 0");
  const double sum = component_sum();
  const double scale = std::max(std::abs(sum), std::abs(total_usd));
  if (std::abs(total_usd - sum) > 1e-6 * std::max(scale, 1.0))
    throw DomainError("cost breakdown total must equal the component sum");
}

CostBreakdown& CostBreakdown::operator+=(const CostBreakdown& other) {
  building_usd += other.building_usd;
  power_equipment_usd += other.power_equipment_usd;
  other_facility_usd += other.other_facility_usd;
  systems_usd += other.systems_usd;
  containers_usd += other.containers_usd;
  generators_usd += other.generators_usd;
  energy_usd += other.energy_usd;
  field_maintenance_usd += other.field_maintenance_usd;
  admin_staff_usd += other.admin_staff_usd;
  recycle_usd += other.recycle_usd;
  total_usd += other.total_usd;
  return *this;
}

double module_capex_usd(const ModuleSpec& spec, ContainerCondition condition, double integration_fraction) {
  spec.validate();
  if (!(integration_fraction >= 0.0)) throw DomainError("integration_fraction must be >= 0");
  const double container = condition == ContainerCondition::kNew ? spec.container_price_new_usd
                                                                 : spec.container_price_remanufactured_usd;
  const double systems =
      static_cast<double>(spec.system_count) * spec.system.unit_price_usd * (1.0 + integration_fraction);
  return container + systems;
}

double maintenance_cost_usd(const MaintenancePolicy& policy, double unit_price_usd, int64_t system_count,
                            double years) {
  policy.validate();
  if (!(years >= 0.0)) throw DomainError("maintenance years must be >= 0");
  if (policy.mode == MaintenanceMode::kNone) return 0.0;
  return static_cast<double>(system_count) * unit_price_usd * policy.rate_per_3yr * (years / 3.0);
}

CostBreakdown facility_capex(const FacilityParams& params) {
  params.validate();
  const double total_facility = params.power_capacity_mw * 1e6 * params.cost_per_watt_usd;
  CostBreakdown breakdown;
  breakdown.power_equipment_usd = params.shares.power_equipment() * total_facility;
  breakdown.building_usd = params.shares.building() * total_facility;
  // Remainder keeps the three shares summing to the facility total exactly.
  breakdown.other_facility_usd = total_facility - breakdown.power_equipment_usd - breakdown.building_usd;
  breakdown.generators_usd = static_cast<double>(params.generator_count) * params.generator_unit.price_usd;
  breakdown.set_total_from_components();
  return breakdown;
}

double energy_opex_usd(double mean_it_power_kw, double cooling_overhead, double price_per_kwh, double years) {
  if (!(mean_it_power_kw >= 0.0) || !(cooling_overhead >= 0.0) || !(price_per_kwh >= 0.0) || !(years >= 0.0))
    throw DomainError("energy_opex arguments must be >= 0");
  return mean_it_power_kw * (1.0 + cooling_overhead) * kHoursPerYear * years * price_per_kwh;
}

double downtime_hours_per_year(double base_downtime_hours, double admin_error_share, double elimination) {
  if (!(admin_error_share >= 0.0 && admin_error_share <= 1.0))
    throw DomainError("admin_error_share must lie in [0,1]");
  if (!(elimination >= 0.0 && elimination <= 1.0)) throw DomainError("elimination must lie in [0,1]");
  if (!(base_downtime_hours >= 0.0)) throw DomainError("base downtime must be >= 0");
  return base_downtime_hours * (1.0 - admin_error_share * elimination);
}

double discounted_years(double years, double discount_rate) {
  if (!(years >= 0.0)) throw DomainError("years must be >= 0");
  if (!(discount_rate >= 0.0)) throw DomainError("discount_rate must be >= 0");
  if (discount_rate == 0.0) return years;
  return (1.0 - std::exp(-discount_rate * years)) / discount_rate;
}

void TcoInputs::validate() const {
  module.validate();
  if (facility) facility->validate();
  maintenance.validate();
  if (module_count < 0) throw DomainError("module_count must be >= 0");
  if (!(integration_fraction >= 0.0)) throw DomainError("integration_fraction must be >= 0");
  if (!(cooling_overhead >= 0.0)) throw DomainError("cooling_overhead must be >= 0");
  if (!(energy_price_per_kwh >= 0.0)) throw DomainError("energy_price_per_kwh must be >= 0");
  if (!(admin_staff_cost_per_year >= 0.0)) throw DomainError("admin_staff_cost_per_year must be >= 0");
  if (!(recycle_cost_per_module_usd >= 0.0)) throw DomainError("recycle_cost_per_module_usd must be >= 0");
  if (!(discount_rate >= 0.0)) throw DomainError("discount_rate must be >= 0");
  if (!(horizon_years >= 0.0)) throw DomainError("horizon_years must be >= 0");
}

CostBreakdown tco(Architecture architecture, const TcoInputs& in) {
  in.validate();
  if (architecture == Architecture::kModular && in.maintenance.mode != MaintenanceMode::kNone)
    throw ValidationError("maintenance.mode", "modular architecture requires maintenance mode none");
  if (architecture == Architecture::kConventional && in.maintenance.mode != MaintenanceMode::kFieldService)
    throw ValidationError("maintenance.mode", "conventional architecture requires field_service maintenance");

  const double total_systems = static_cast<double>(in.module_count * in.module.system_count);
  const double systems_purchase =
      total_systems * in.module.system.unit_price_usd * (1.0 + in.integration_fraction);
  const double container_price = in.container_condition == ContainerCondition::kNew
                                     ? in.module.container_price_new_usd
                                     : in.module.container_price_remanufactured_usd;

  // Refresh cycle: end-of-life returns at k*life <= horizon; every return
  // pays a reload of the systems (both architectures) and, on the modular
  // side, a container plus one recycle return.
  double refresh_discount_sum = 0.0;
  int64_t refresh_count = 0;
  for (int64_t k = 1; static_cast<double>(k) * in.module.service_life_years <= in.horizon_years; ++k) {
    refresh_discount_sum += std::exp(-in.discount_rate * static_cast<double>(k) * in.module.service_life_years);
    ++refresh_count;
  }

  CostBreakdown breakdown;
  if (in.facility) breakdown = facility_capex(*in.facility);
  breakdown.systems_usd = systems_purchase * (1.0 + refresh_discount_sum);
  if (architecture == Architecture::kModular) {
    breakdown.containers_usd =
        static_cast<double>(in.module_count) * container_price * (1.0 + refresh_discount_sum);
    breakdown.recycle_usd =
        static_cast<double>(in.module_count) * in.recycle_cost_per_module_usd * refresh_discount_sum;
  }

  const double opex_years = discounted_years(in.horizon_years, in.discount_rate);
  const double mean_it_power_kw = total_systems * in.module.system.power_draw_w / 1000.0;
  breakdown.energy_usd =
      energy_opex_usd(mean_it_power_kw, in.cooling_overhead, in.energy_price_per_kwh, opex_years);
  breakdown.field_maintenance_usd =
      maintenance_cost_usd(in.maintenance, in.module.system.unit_price_usd, in.module_count * in.module.system_count,
                           opex_years);
  breakdown.admin_staff_usd = in.admin_staff_cost_per_year * opex_years;
  breakdown.set_total_from_components();
  return breakdown;
}

}  // namespace mdcsim
