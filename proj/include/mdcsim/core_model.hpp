#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mdcsim/errors.hpp"

namespace mdcsim {

// One simulation year everywhere in the tool: 365.25 days.
inline constexpr double kHoursPerYear = 8766.0;

enum class Cooling { kAir, kDirectLiquid };

std::string_view to_string(Cooling cooling);
std::optional<Cooling> cooling_from_string(std::string_view name);

/// One commodity server. Internet-scale fleets build on boxes in the
/// $1,000-$3,000 range; the annual failure probability is the knob the whole
/// degradation model hangs on (5%/yr default).
///
/// weibull_shape bends the lifetime law away from memoryless (1.0): > 1
/// wears out, < 1 front-loads infant mortality. The one-year failure
/// probability stays pinned to annual_failure_prob either way.
struct SystemSpec {
  double unit_price_usd = 1500.0;
  double power_draw_w = 250.0;
  double annual_failure_prob = 0.05;
  double weibull_shape = 1.0;

  void validate() const;
};

/// Static design of one container macro-module: an ISO box (20 or 40 ft)
/// fully populated with identical systems, never serviced in the field, and
/// returned to the supplier for recycling at end of life.
struct ModuleSpec {
  double container_length_ft = 20.0;  // ISO 668: 20 or 40
  double container_width_ft = 8.0;
  int64_t system_count = 1000;
  SystemSpec system;
  // ISO containers sell new around $1,950; remanufactured units around $1,500.
  double container_price_new_usd = 1950.0;
  double container_price_remanufactured_usd = 1500.0;
  Cooling cooling = Cooling::kDirectLiquid;
  double service_life_years = 3.0;  // typical 3, sometimes stretched to 5
  double cooling_overhead = 0.35;   // cooling watts drawn per IT watt

  void validate() const;
};

/// Evolving state of one deployed module: it only ages and loses systems.
struct ModuleState {
  double age_years = 0.0;
  int64_t failed_count = 0;

  void validate(const ModuleSpec& spec) const;
};

/// How conventional facility capex splits across power equipment, the
/// building shell, and everything else. Power distribution and equipment
/// exceed 40% of a typical build; the building itself is just over 15%.
class CostShares {
 public:
  CostShares() : CostShares(0.40, 0.15, 0.45) {}
  CostShares(double power_equipment, double building, double other);

  double power_equipment() const { return power_equipment_; }
  double building() const { return building_; }
  double other() const { return other_; }

 private:
  double power_equipment_;
  double building_;
  double other_;
};

/// Surviving fraction of a module's design capacity: (count - failed) / count.
/// A 1,000-system module with 50 dead systems still runs at 95%.
double capacity_fraction(int64_t system_count, int64_t failed_count);

/// Ground footprint of the container, sqft.
double module_footprint_sqft(const ModuleSpec& spec);

/// IT watts per square foot of container footprint (cooling excluded).
double power_density_w_per_sqft(const ModuleSpec& spec);

/// Installed systems per square foot of container footprint.
double areal_system_density_per_sqft(const ModuleSpec& spec);

namespace presets {

// Reference 20-ft module with 1,000 systems, direct liquid cooling.
ModuleSpec paper1000();

// Rackable Systems 40-ft high-boy: 1,152 systems; the 208.3 W per-system
// draw calibrates the preset to their ~750 W/sqft figure. Air-to-water
// cooled with airflow/water control giving cooling savings approaching 30%.
ModuleSpec rackable40();

// Sun Microsystems Black Box prototype: 20-ft container, 242 systems.
ModuleSpec sun20();

// Lookup by the names scenario files use: "paper1000", "rackable40", "sun20".
std::optional<ModuleSpec> by_name(std::string_view name);

}  // namespace presets

}  // namespace mdcsim
