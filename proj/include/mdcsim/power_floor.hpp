#pragma once

#include "mdcsim/econ_model.hpp"

namespace mdcsim {

/// Result of committing a facility to one power density and landing at
/// another. Exactly one side of the mismatch can be nonzero: provision too
/// hot and power equipment sits stranded; provision too cold and floor space
/// goes unusable. Stranded power is the expensive mistake.
struct ProvisioningOutcome {
  double stranded_power_fraction = 0.0;
  double unusable_floor_fraction = 0.0;
  double stranded_cost_usd = 0.0;
  double wasted_floor_cost_usd = 0.0;
};

/// Mismatch fractions for a facility designed at one W/sqft and populated at
/// another. Zero on the diagonal.
ProvisioningOutcome provisioning_mismatch(double design_w_per_sqft, double realized_w_per_sqft);

/// Price the mismatch against a facility breakdown: stranded power burns the
/// power-equipment component, wasted floor burns the building component.
ProvisioningOutcome mismatch_cost(ProvisioningOutcome outcome, const CostBreakdown& facility);

/// Fraction of floor that computing equipment can productively occupy when
/// CRAC units take crac_space_ratio sqft per sqft of systems (plus optional
/// walkway overhead). Direct-liquid modules bypass this entirely: their
/// container footprint counts in full.
double air_cooled_floor_utilization(double crac_space_ratio, double walkway_space_ratio = 0.0);

namespace density {

// Published data-center power density reference points, W/sqft.
inline constexpr double kTypicalWPerSqft = 100.0;
inline constexpr double kHighRangeLowWPerSqft = 350.0;
inline constexpr double kHighRangeHighWPerSqft = 600.0;
inline constexpr double kRackableWPerSqft = 750.0;

// Oak Ridge National Lab air-cooling study reference points: 35 kW racks
// need ~222,000 CFM through a 6-foot duct, and the CRACs end up consuming
// as much floor as the systems. Documentation constants only; no airflow
// computation is attempted here.
inline constexpr double kOakRidgeRackKw = 35.0;
inline constexpr double kOakRidgeAirflowCfm = 222000.0;
inline constexpr double kOakRidgeDuctSideFt = 6.0;

}  // namespace density

}  // namespace mdcsim
