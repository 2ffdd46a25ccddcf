#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "mdcsim/core_model.hpp"

namespace mdcsim {

// splitmix64 finalizer; the basis for all stream-id mixing.
uint64_t mix64(uint64_t z);

// Order-sensitive combiner for deriving substream identifiers.
uint64_t combine64(uint64_t h, uint64_t v);

/// Seedable, platform-independent random stream. Identical (seed, stream)
/// pairs produce identical sample sequences everywhere: the engine is
/// std::mt19937_64 (bit-exact per the standard) seeded with
/// combine64(seed, stream), uniforms take the top 53 bits, and exponentials
/// use the inverse transform -ln(U)/rate with U in (0,1]. No std::random
/// distribution objects are involved, since those are not portable.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  // Uniform double in [0,1) with 53 random bits.
  double uniform01();

  // Exponential with the given rate. Always consumes exactly one uniform,
  // even for rate <= 0 (returns +inf), so substream alignment survives
  // parameter sweeps that share uniforms across rows.
  double exponential(double rate_per_year);

  static std::string_view generator_id();

 private:
  uint64_t seed_;
  uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Capacity of one module over one service life as a right-continuous step
/// function of time. Starts at 1.0 and only decreases.
struct TrajectoryPoint {
  double time_years;
  double capacity;
};

struct CapacityTrajectory {
  std::vector<TrajectoryPoint> points;  // first point is (0, 1.0)
  double horizon_years = 0.0;

  void validate() const;
};

/// Exponential hazard rate equivalent to an annual failure probability:
/// lambda = -ln(1 - p).
double failure_rate_per_year(double annual_failure_prob);

/// Expected surviving fraction after t years of unserviced operation under
/// independent exponential lifetimes: (1 - p)^t.
double expected_capacity(double annual_failure_prob, double t_years);

/// Sorted failure times (years since deployment) within the window, sampled
/// by inverse transform from exactly system_count uniforms.
std::vector<double> sample_failure_times(const ModuleSpec& spec, double window_years, RngStream& rng);

/// Sample one module's capacity trajectory over [0, horizon]. The module is
/// never serviced: each system death drops capacity by 1/system_count.
/// Requires horizon <= spec.service_life_years (recycling is the fleet
/// engine's business).
CapacityTrajectory simulate_module(const ModuleSpec& spec, double horizon_years, RngStream& rng);

/// Step-function value at time t (right-continuous); t must lie in
/// [0, horizon].
double capacity_at(const CapacityTrajectory& trajectory, double t_years);

/// design_capacity * integral of capacity over the trajectory, in
/// system-hours (8,766 h/yr).
double delivered_capacity_hours(const CapacityTrajectory& trajectory, int64_t design_capacity);

}  // namespace mdcsim
