#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mdcsim/econ_model.hpp"

using namespace mdcsim;

TEST_CASE("module_capex matches the container price anchors") {
  const ModuleSpec spec = presets::paper1000();  // 1,000 systems at $1,500
  CHECK(module_capex_usd(spec, ContainerCondition::kNew, 0.0) == 1501950.0);
  CHECK(module_capex_usd(spec, ContainerCondition::kRemanufactured, 0.0) == 1501500.0);

  // Zero-value systems leave just the box.
  ModuleSpec bare = spec;
  bare.system.unit_price_usd = 0.0;
  CHECK(module_capex_usd(bare, ContainerCondition::kNew, 0.0) == 1950.0);

  // Integration fraction applies to the systems portion only.
  CHECK(module_capex_usd(spec, ContainerCondition::kNew, 0.1) ==
        doctest::Approx(1950.0 + 1500000.0 * 1.1).epsilon(1e-12));
  CHECK_THROWS_AS(module_capex_usd(spec, ContainerCondition::kNew, -0.1), DomainError);
}

TEST_CASE("maintenance follows the 25%-over-3-years rule, prorated") {
  const MaintenancePolicy field{MaintenanceMode::kFieldService, 0.25};
  const MaintenancePolicy none{MaintenanceMode::kNone, 0.25};
  CHECK(maintenance_cost_usd(field, 3000.0, 1, 3.0) == 750.0);
  CHECK(maintenance_cost_usd(none, 3000.0, 1, 3.0) == 0.0);
  CHECK(maintenance_cost_usd(none, 1e9, 100000, 50.0) == 0.0);
  CHECK(maintenance_cost_usd(field, 2000.0, 1000, 1.5) == doctest::Approx(250000.0).epsilon(1e-12));
  CHECK_THROWS_AS(maintenance_cost_usd(field, 2000.0, 10, -1.0), DomainError);
}

TEST_CASE("maintenance is linear in years, count, and price") {
  const MaintenancePolicy field{MaintenanceMode::kFieldService, 0.25};
  const double base = maintenance_cost_usd(field, 1700.0, 300, 2.0);
  CHECK(maintenance_cost_usd(field, 1700.0, 300, 4.0) == doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(maintenance_cost_usd(field, 1700.0, 600, 2.0) == doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(maintenance_cost_usd(field, 3400.0, 300, 2.0) == doctest::Approx(2.0 * base).epsilon(1e-12));
}

TEST_CASE("facility_capex splits the build by shares") {
  FacilityParams params;  // 15 MW, $10/W, shares 0.40/0.15/0.45, 10 x 2.5 MW generators
  const CostBreakdown breakdown = facility_capex(params);
  CHECK(breakdown.power_equipment_usd == 60e6);
  CHECK(breakdown.building_usd == 22.5e6);
  CHECK(breakdown.power_equipment_usd + breakdown.building_usd + breakdown.other_facility_usd == 150e6);
  CHECK(breakdown.power_equipment_usd / breakdown.building_usd == 40.0 / 15.0);
  CHECK(breakdown.generators_usd == 15e6);  // 10 x $1.5M
  CHECK_NOTHROW(breakdown.validate());

  params.generator_count = 0;
  CHECK(facility_capex(params).generators_usd == 0.0);

  params.generator_count = 10;
  params.generator_unit.price_usd = 1.5e6;
  CHECK(facility_capex(params).generators_usd == 15e6);
}

TEST_CASE("energy_opex grossed up by cooling overhead") {
  CHECK(energy_opex_usd(0.0, 0.5, 0.07, 1.0) == 0.0);
  // 100 kW * 1.5 * 8766 * 0.07 by hand.
  const double air = energy_opex_usd(100.0, 0.5, 0.07, 1.0);
  CHECK(air == doctest::Approx(92043.0).epsilon(1e-12));
  // Direct liquid at 30% lower cooling: overhead 0.35.
  const double liquid = energy_opex_usd(100.0, 0.35, 0.07, 1.0);
  CHECK(liquid == doctest::Approx(82838.70).epsilon(1e-12));
  // 10% total saving == 30% of the cooling portion.
  CHECK((air - liquid) / air == doctest::Approx(0.10).epsilon(1e-12));
  CHECK_THROWS_AS(energy_opex_usd(-1.0, 0.5, 0.07, 1.0), DomainError);
}

TEST_CASE("downtime model") {
  CHECK(downtime_hours_per_year(100.0, 0.5, 1.0) == 50.0);
  CHECK(downtime_hours_per_year(123.4, 0.37, 0.0) == 123.4);
  CHECK(downtime_hours_per_year(87.66, 0.2, 1.0) == doctest::Approx(70.128).epsilon(1e-12));
  CHECK_THROWS_AS(downtime_hours_per_year(10.0, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(downtime_hours_per_year(10.0, 0.5, -0.1), DomainError);

  std::mt19937 gen(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double share = unit(gen), elim = unit(gen), base = 1000.0 * unit(gen);
    const double out = downtime_hours_per_year(base, share, elim);
    CHECK(out <= base);
    if (share * elim == 0.0)
      CHECK(out == base);
    else if (base > 0.0)
      CHECK(out < base);
  }
}

TEST_CASE("discounted_years") {
  CHECK(discounted_years(7.5, 0.0) == 7.5);
  CHECK(discounted_years(10.0, 0.05) == doctest::Approx((1.0 - std::exp(-0.5)) / 0.05).epsilon(1e-12));
  CHECK(discounted_years(0.0, 0.05) == 0.0);
}

namespace {

TcoInputs default_inputs() {
  TcoInputs inputs;
  inputs.module = presets::paper1000();
  inputs.module_count = 1;
  inputs.horizon_years = 3.0;
  inputs.cooling_overhead = 0.5;
  return inputs;
}

}  // namespace

TEST_CASE("tco enforces the architecture/maintenance pairing") {
  TcoInputs inputs = default_inputs();
  inputs.maintenance.mode = MaintenanceMode::kFieldService;
  CHECK_THROWS_AS(tco(Architecture::kModular, inputs), ValidationError);
  inputs.maintenance.mode = MaintenanceMode::kNone;
  CHECK_THROWS_AS(tco(Architecture::kConventional, inputs), ValidationError);
}

TEST_CASE("tco all-zero inputs give an all-zero breakdown") {
  TcoInputs inputs;
  inputs.module = presets::paper1000();
  inputs.module.system.unit_price_usd = 0.0;
  inputs.module.system.power_draw_w = 0.0;
  inputs.module.container_price_new_usd = 0.0;
  inputs.module.container_price_remanufactured_usd = 0.0;
  inputs.module_count = 0;
  inputs.facility = std::nullopt;
  inputs.maintenance.mode = MaintenanceMode::kNone;
  inputs.energy_price_per_kwh = 0.0;
  inputs.horizon_years = 3.0;
  const CostBreakdown breakdown = tco(Architecture::kModular, inputs);
  CHECK(breakdown.total_usd == 0.0);
  CHECK(breakdown.component_sum() == 0.0);
}

TEST_CASE("tco conventional facility shares ratio") {
  TcoInputs inputs = default_inputs();
  inputs.maintenance.mode = MaintenanceMode::kFieldService;
  const CostBreakdown breakdown = tco(Architecture::kConventional, inputs);
  CHECK(breakdown.power_equipment_usd / breakdown.building_usd == 40.0 / 15.0);
  CHECK_NOTHROW(breakdown.validate());
}

TEST_CASE("tco structural difference: only maintenance, containers, recycling move") {
  TcoInputs conventional = default_inputs();
  conventional.maintenance = MaintenancePolicy{MaintenanceMode::kFieldService, 0.25};
  TcoInputs modular = default_inputs();
  modular.maintenance = MaintenancePolicy{MaintenanceMode::kNone, 0.25};
  // Identical systems and energy: same overhead on both sides for this check.
  modular.cooling_overhead = conventional.cooling_overhead;

  const CostBreakdown conv = tco(Architecture::kConventional, conventional);
  const CostBreakdown mod = tco(Architecture::kModular, modular);

  CHECK(mod.field_maintenance_usd == 0.0);
  CHECK(conv.field_maintenance_usd > 0.0);
  CHECK(mod.containers_usd > 0.0);
  CHECK(conv.containers_usd == 0.0);
  CHECK(mod.building_usd == conv.building_usd);
  CHECK(mod.power_equipment_usd == conv.power_equipment_usd);
  CHECK(mod.other_facility_usd == conv.other_facility_usd);
  CHECK(mod.systems_usd == conv.systems_usd);
  CHECK(mod.generators_usd == conv.generators_usd);
  CHECK(mod.energy_usd == conv.energy_usd);
  CHECK(mod.admin_staff_usd == conv.admin_staff_usd);
  CHECK(mod.recycle_usd == conv.recycle_usd);  // default recycle knob is $0
}

TEST_CASE("neither architecture dominates unconditionally") {
  // High maintenance rate: the modular side wins.
  TcoInputs conventional = default_inputs();
  conventional.maintenance = MaintenancePolicy{MaintenanceMode::kFieldService, 0.25};
  TcoInputs modular = default_inputs();
  modular.maintenance = MaintenancePolicy{MaintenanceMode::kNone, 0.25};
  double delta_high_rate =
      tco(Architecture::kModular, modular).total_usd - tco(Architecture::kConventional, conventional).total_usd;
  CHECK(delta_high_rate < 0.0);

  // Maintenance rate at zero with pricey containers: the modular side loses.
  conventional.maintenance.rate_per_3yr = 0.0;
  modular.maintenance.rate_per_3yr = 0.0;
  conventional.module.container_price_new_usd = 250000.0;
  modular.module.container_price_new_usd = 250000.0;
  double delta_zero_rate =
      tco(Architecture::kModular, modular).total_usd - tco(Architecture::kConventional, conventional).total_usd;
  CHECK(delta_zero_rate > 0.0);
}

TEST_CASE("tco refresh cycle repurchases on the service-life schedule") {
  TcoInputs inputs = default_inputs();
  inputs.maintenance.mode = MaintenanceMode::kNone;
  inputs.recycle_cost_per_module_usd = 1000.0;

  inputs.horizon_years = 2.9;  // no return inside the horizon
  CostBreakdown b = tco(Architecture::kModular, inputs);
  CHECK(b.containers_usd == 1950.0);
  CHECK(b.recycle_usd == 0.0);

  inputs.horizon_years = 3.0;  // boundary return pays the refresh
  b = tco(Architecture::kModular, inputs);
  CHECK(b.containers_usd == 2 * 1950.0);
  CHECK(b.recycle_usd == 1000.0);

  inputs.horizon_years = 6.5;  // returns at 3 and 6
  b = tco(Architecture::kModular, inputs);
  CHECK(b.containers_usd == 3 * 1950.0);
  CHECK(b.recycle_usd == 2000.0);
  CHECK(b.systems_usd == doctest::Approx(3 * 1500000.0).epsilon(1e-12));
}

TEST_CASE("breakdown additivity and price homogeneity, fuzzed") {
  std::mt19937 gen(123456);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    TcoInputs inputs;
    inputs.module = presets::paper1000();
    inputs.module.system.unit_price_usd = 5000.0 * unit(gen);
    inputs.module.system.power_draw_w = 400.0 * unit(gen);
    inputs.module.container_price_new_usd = 10000.0 * unit(gen);
    inputs.module.container_price_remanufactured_usd = 8000.0 * unit(gen);
    inputs.module.service_life_years = 0.5 + 4.0 * unit(gen);
    inputs.module_count = static_cast<int64_t>(1 + 20 * unit(gen));
    inputs.container_condition = unit(gen) < 0.5 ? ContainerCondition::kNew : ContainerCondition::kRemanufactured;
    inputs.integration_fraction = 0.3 * unit(gen);
    if (unit(gen) < 0.25) inputs.facility = std::nullopt;
    else {
      FacilityParams facility;
      facility.power_capacity_mw = 0.5 + 30.0 * unit(gen);
      facility.cost_per_watt_usd = 0.5 + 20.0 * unit(gen);
      facility.generator_count = static_cast<int64_t>(20 * unit(gen));
      facility.generator_unit.price_usd = 3e6 * unit(gen);
      inputs.facility = facility;
    }
    const bool modular = unit(gen) < 0.5;
    inputs.maintenance =
        MaintenancePolicy{modular ? MaintenanceMode::kNone : MaintenanceMode::kFieldService, 0.5 * unit(gen)};
    inputs.cooling_overhead = unit(gen);
    inputs.energy_price_per_kwh = 0.2 * unit(gen);
    inputs.admin_staff_cost_per_year = 1e6 * unit(gen);
    inputs.recycle_cost_per_module_usd = 5e4 * unit(gen);
    inputs.discount_rate = unit(gen) < 0.5 ? 0.0 : 0.1 * unit(gen);
    inputs.horizon_years = 0.5 + 10.0 * unit(gen);
    const Architecture arch = modular ? Architecture::kModular : Architecture::kConventional;

    const CostBreakdown base = tco(arch, inputs);
    CHECK_NOTHROW(base.validate());
    CHECK(std::abs(base.total_usd - base.component_sum()) <=
          1e-6 * std::max(1.0, std::abs(base.total_usd)));

    const double k = 0.1 + 9.9 * unit(gen);
    TcoInputs scaled = inputs;
    scaled.module.system.unit_price_usd *= k;
    scaled.module.container_price_new_usd *= k;
    scaled.module.container_price_remanufactured_usd *= k;
    if (scaled.facility) {
      scaled.facility->cost_per_watt_usd *= k;
      scaled.facility->generator_unit.price_usd *= k;
    }
    scaled.energy_price_per_kwh *= k;
    scaled.admin_staff_cost_per_year *= k;
    scaled.recycle_cost_per_module_usd *= k;
    const CostBreakdown scaled_breakdown = tco(arch, scaled);

    auto scales = [&](double before, double after) {
      const double expect = before * k;
      return std::abs(after - expect) <= 1e-9 * std::max(1.0, std::abs(expect));
    };
    CHECK(scales(base.building_usd, scaled_breakdown.building_usd));
    CHECK(scales(base.power_equipment_usd, scaled_breakdown.power_equipment_usd));
    CHECK(scales(base.other_facility_usd, scaled_breakdown.other_facility_usd));
    CHECK(scales(base.systems_usd, scaled_breakdown.systems_usd));
    CHECK(scales(base.containers_usd, scaled_breakdown.containers_usd));
    CHECK(scales(base.generators_usd, scaled_breakdown.generators_usd));
    CHECK(scales(base.energy_usd, scaled_breakdown.energy_usd));
    CHECK(scales(base.field_maintenance_usd, scaled_breakdown.field_maintenance_usd));
    CHECK(scales(base.admin_staff_usd, scaled_breakdown.admin_staff_usd));
    CHECK(scales(base.recycle_usd, scaled_breakdown.recycle_usd));
    CHECK(scales(base.total_usd, scaled_breakdown.total_usd));
  }
}

TEST_CASE("cost breakdown validation") {
  CostBreakdown breakdown;
  breakdown.systems_usd = 10.0;
  breakdown.energy_usd = 5.0;
  breakdown.total_usd = 15.0;
  CHECK_NOTHROW(breakdown.validate());
  breakdown.total_usd = 16.0;
  CHECK_THROWS_AS(breakdown.validate(), DomainError);
  breakdown.total_usd = 15.0;
  breakdown.energy_usd = -5.0;
  CHECK_THROWS_AS(breakdown.validate(), DomainError);
}
