#include "mdcsim/power_floor.hpp"

namespace mdcsim {

ProvisioningOutcome provisioning_mismatch(double design_w_per_sqft, double realized_w_per_sqft) {
  if (!(design_w_per_sqft > 0.0)) throw DomainError("provisioning_mismatch: design density must be > 0");
  if (!(realized_w_per_sqft >= 0.0)) throw DomainError("provisioning_mismatch: realized density must be >= 0");
  ProvisioningOutcome outcome;
  if (realized_w_per_sqft <= design_w_per_sqft) {
    outcome.stranded_power_fraction = 1.0 - realized_w_per_sqft / design_w_per_sqft;
  } else {
    outcome.unusable_floor_fraction = 1.0 - design_w_per_sqft / realized_w_per_sqft;
  }
  return outcome;
}

ProvisioningOutcome mismatch_cost(ProvisioningOutcome outcome, const CostBreakdown& facility) {
  outcome.stranded_cost_usd = outcome.stranded_power_fraction * facility.power_equipment_usd;
  outcome.wasted_floor_cost_usd = outcome.unusable_floor_fraction * facility.building_usd;
  return outcome;
}

double air_cooled_floor_utilization(double crac_space_ratio, double walkway_space_ratio) {
  if (!(crac_space_ratio >= 0.0)) throw DomainError("crac_space_ratio must be >= 0");
  if (!(walkway_space_ratio >= 0.0)) throw DomainError("walkway_space_ratio must be >= 0");
  return 1.0 / (1.0 + crac_space_ratio + walkway_space_ratio);
}

}  // namespace mdcsim
