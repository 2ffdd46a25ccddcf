#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mdcsim/power_floor.hpp"

using namespace mdcsim;

TEST_CASE("provisioning mismatch fractions") {
  const ProvisioningOutcome even = provisioning_mismatch(100.0, 100.0);
  CHECK(even.stranded_power_fraction == 0.0);
  CHECK(even.unusable_floor_fraction == 0.0);

  const ProvisioningOutcome hot = provisioning_mismatch(200.0, 100.0);
  CHECK(hot.stranded_power_fraction == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hot.unusable_floor_fraction == 0.0);

  const ProvisioningOutcome cold = provisioning_mismatch(100.0, 200.0);
  CHECK(cold.unusable_floor_fraction == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cold.stranded_power_fraction == 0.0);

  CHECK_THROWS_AS(provisioning_mismatch(0.0, 100.0), DomainError);
  CHECK_THROWS_AS(provisioning_mismatch(-10.0, 100.0), DomainError);
  CHECK_THROWS_AS(provisioning_mismatch(100.0, -1.0), DomainError);
}

TEST_CASE("mismatch is continuous and exactly zero on the diagonal") {
  std::mt19937 gen(31337);
  std::uniform_real_distribution<double> density(1.0, 1000.0);
  for (int i = 0; i < 300; ++i) {
    const double d = density(gen);
    const ProvisioningOutcome diag = provisioning_mismatch(d, d);
    CHECK(diag.stranded_power_fraction == 0.0);
    CHECK(diag.unusable_floor_fraction == 0.0);

    const double eps = 1e-9 * d;
    const ProvisioningOutcome below = provisioning_mismatch(d, d - eps);
    const ProvisioningOutcome above = provisioning_mismatch(d, d + eps);
    CHECK(below.stranded_power_fraction < 1e-8);
    CHECK(above.unusable_floor_fraction < 1e-8);
    // At most one side of the mismatch is ever nonzero.
    CHECK(below.unusable_floor_fraction == 0.0);
    CHECK(above.stranded_power_fraction == 0.0);
  }
}

TEST_CASE("mismatch costs burn the matching facility component") {
  const CostBreakdown facility = facility_capex(FacilityParams{});  // $150M at 0.40/0.15/0.45

  ProvisioningOutcome zero;
  zero = mismatch_cost(zero, facility);
  CHECK(zero.stranded_cost_usd == 0.0);
  CHECK(zero.wasted_floor_cost_usd == 0.0);

  ProvisioningOutcome hot;
  hot.stranded_power_fraction = 0.5;
  hot = mismatch_cost(hot, facility);
  CHECK(hot.stranded_cost_usd == doctest::Approx(30e6).epsilon(1e-12));  // 0.5 * 0.40 * 150M

  ProvisioningOutcome cold;
  cold.unusable_floor_fraction = 0.5;
  cold = mismatch_cost(cold, facility);
  CHECK(cold.wasted_floor_cost_usd == doctest::Approx(11.25e6).epsilon(1e-12));  // 0.5 * 0.15 * 150M
}

TEST_CASE("asymmetry: stranded power always costs more than wasted floor") {
  const CostBreakdown facility = facility_capex(FacilityParams{});
  for (int i = 1; i <= 9; ++i) {
    const double m = 0.1 * i;
    ProvisioningOutcome stranded;
    stranded.stranded_power_fraction = m;
    stranded = mismatch_cost(stranded, facility);
    ProvisioningOutcome floor;
    floor.unusable_floor_fraction = m;
    floor = mismatch_cost(floor, facility);
    // Exact rational identity 0.40/0.15 = 8/3; doubles land within 2 ulp.
    const double ratio = stranded.stranded_cost_usd / floor.wasted_floor_cost_usd;
    CHECK(std::abs(ratio - 8.0 / 3.0) <= 1e-14 * (8.0 / 3.0));
    CHECK(stranded.stranded_cost_usd > floor.wasted_floor_cost_usd);
  }

  // Any facility with power share above building share has the same sign.
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> unit(0.05, 0.6);
  for (int i = 0; i < 100; ++i) {
    double pe = unit(gen), building = unit(gen);
    if (pe == building) continue;
    if (pe < building) std::swap(pe, building);
    const double other = 1.0 - pe - building;
    if (other < 0.0 || other > 1.0) continue;
    FacilityParams params;
    params.shares = CostShares(pe, building, other);
    const CostBreakdown breakdown = facility_capex(params);
    ProvisioningOutcome stranded;
    stranded.stranded_power_fraction = 0.3;
    ProvisioningOutcome floor;
    floor.unusable_floor_fraction = 0.3;
    CHECK(mismatch_cost(stranded, breakdown).stranded_cost_usd >
          mismatch_cost(floor, breakdown).wasted_floor_cost_usd);
  }
}

TEST_CASE("air-cooled floor utilization") {
  CHECK(air_cooled_floor_utilization(1.0) == 0.5);  // CRACs consume as much floor as the systems
  CHECK(air_cooled_floor_utilization(0.0) == 1.0);
  CHECK(air_cooled_floor_utilization(3.0) == 0.25);
  CHECK(air_cooled_floor_utilization(1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(air_cooled_floor_utilization(-0.5), DomainError);

  double previous = 2.0;
  for (double ratio = 0.0; ratio <= 10.0; ratio += 0.25) {
    const double utilization = air_cooled_floor_utilization(ratio);
    CHECK(utilization > 0.0);
    CHECK(utilization <= 1.0);
    CHECK(utilization < previous);
    previous = utilization;
  }
}

TEST_CASE("density reference points") {
  CHECK(density::kTypicalWPerSqft == 100.0);
  CHECK(density::kHighRangeLowWPerSqft == 350.0);
  CHECK(density::kHighRangeHighWPerSqft == 600.0);
  CHECK(density::kRackableWPerSqft == 750.0);
  CHECK(density::kOakRidgeRackKw == 35.0);
  CHECK(density::kOakRidgeAirflowCfm == 222000.0);
  CHECK(density::kOakRidgeDuctSideFt == 6.0);
}
