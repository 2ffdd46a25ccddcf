#include "mdcsim/core_model.hpp"

#include <cmath>
#include <string>

namespace mdcsim {

std::string_view to_string(Cooling cooling) {
  switch (cooling) {
    case Cooling::kAir:
      return "air";
    case Cooling::kDirectLiquid:
      return "direct_liquid";
  }
  return "?";
}

std::optional<Cooling> cooling_from_string(std::string_view name) {
  if (name == "air") return Cooling::kAir;
  if (name == "direct_liquid") return Cooling::kDirectLiquid;
  return std::nullopt;
}

void SystemSpec::validate() const {
  if (!(unit_price_usd >= 0.0)) throw DomainError("system unit_price_usd must be >= 0");
  if (!(power_draw_w >= 0.0)) throw DomainError("system power_draw_w must be >= 0");
  if (!(annual_failure_prob >= 0.0 && annual_failure_prob < 1.0))
    throw DomainError("annual_failure_prob must lie in [0,1)");
  if (!(weibull_shape > 0.0)) throw DomainError("weibull_shape must be > 0");
}

void ModuleSpec::validate() const {
  if (container_length_ft != 20.0 && container_length_ft != 40.0)
    throw DomainError("container_length_ft must be 20 or 40");
  if (!(container_width_ft > 0.0)) throw DomainError("container_width_ft must be > 0");
  if (system_count < 1) throw DomainError("system_count must be >= 1");
  if (!(container_price_new_usd >= 0.0) || !(container_price_remanufactured_usd >= 0.0))
    throw DomainError("container prices must be >= 0");
  if (!(service_life_years > 0.0)) throw DomainError("service_life_years must be > 0");
  if (!(cooling_overhead >= 0.0)) throw DomainError("cooling_overhead must be >= 0");
  system.validate();
}

void ModuleState::validate(const ModuleSpec& spec) const {
  if (!(age_years >= 0.0)) throw DomainError("module age_years must be >= 0");
  if (failed_count < 0 || failed_count > spec.system_count)
    throw DomainError("failed_count must lie in [0, system_count]");
}

CostShares::CostShares(double power_equipment, double building, double other)
    : power_equipment_(power_equipment), building_(building), other_(other) {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(power_equipment) || !in_unit(building) || !in_unit(other))
    throw DomainError("cost shares must each lie in [0,1]");
  double sum = power_equipment + building + other;
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("cost shares must sum to 1");
}

double capacity_fraction(int64_t system_count, int64_t failed_count) {
  if (system_count < 1) throw DomainError("capacity_fraction: system_count must be >= 1");
  if (failed_count < 0 || failed_count > system_count)
    throw DomainError("capacity_fraction: failed_count must lie in [0, system_count]");
  return static_cast<double>(system_count - failed_count) / static_cast<double>(system_count);
}

double module_footprint_sqft(const ModuleSpec& spec) {
  spec.validate();
  return spec.container_length_ft * spec.container_width_ft;
}

double power_density_w_per_sqft(const ModuleSpec& spec) {
  return static_cast<double>(spec.system_count) * spec.system.power_draw_w / module_footprint_sqft(spec);
}

double areal_system_density_per_sqft(const ModuleSpec& spec) {
  return static_cast<double>(spec.system_count) / module_footprint_sqft(spec);
}

namespace presets {

ModuleSpec paper1000() {
  ModuleSpec spec;
  spec.container_length_ft = 20.0;
  spec.system_count = 1000;
  spec.system = SystemSpec{1500.0, 250.0, 0.05};
  spec.cooling = Cooling::kDirectLiquid;
  spec.cooling_overhead = 0.35;
  return spec;
}

ModuleSpec rackable40() {
  ModuleSpec spec;
  spec.container_length_ft = 40.0;
  spec.system_count = 1152;
  spec.system = SystemSpec{1500.0, 208.3, 0.05};
  spec.cooling = Cooling::kAir;
  spec.cooling_overhead = 0.35;  // ~30% below the 0.5 conventional baseline
  return spec;
}

ModuleSpec sun20() {
  ModuleSpec spec;
  spec.container_length_ft = 20.0;
  spec.system_count = 242;
  spec.system = SystemSpec{1500.0, 250.0, 0.05};
  spec.cooling = Cooling::kDirectLiquid;
  spec.cooling_overhead = 0.35;
  return spec;
}

std::optional<ModuleSpec> by_name(std::string_view name) {
  if (name == "paper1000") return paper1000();
  if (name == "rackable40") return rackable40();
  if (name == "sun20") return sun20();
  return std::nullopt;
}

}  // namespace presets

}  // namespace mdcsim
