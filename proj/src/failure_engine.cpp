#include "mdcsim/failure_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdcsim {

uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t combine64(uint64_t h, uint64_t v) { return mix64(h ^ (mix64(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2))); }

RngStream::RngStream(uint64_t seed, uint64_t stream)
    : seed_(seed), stream_(stream), engine_(combine64(mix64(seed), stream)) {}

double RngStream::uniform01() {
  // Top 53 bits of the engine output, scaled to [0,1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double rate_per_year) {
  const double u = 1.0 - uniform01();  // (0,1]
  if (rate_per_year <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(u) / rate_per_year;
}

std::string_view RngStream::generator_id() {
  return "mt19937_64(combine64(seed,stream)); 53-bit uniforms; inverse-transform exponentials";
}

void CapacityTrajectory::validate() const {
  if (points.empty()) throw DomainError("trajectory must have at least one point");
  if (points.front().time_years != 0.0 || points.front().capacity != 1.0)
    throw DomainError("trajectory must start at (0, 1.0)");
  if (!(horizon_years >= points.back().time_years))
    throw DomainError("trajectory horizon must cover all breakpoints");
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!(p.capacity >= 0.0 && p.capacity <= 1.0)) throw DomainError("trajectory capacity outside [0,1]");
    if (i > 0) {
      if (!(p.time_years > points[i - 1].time_years)) throw DomainError("trajectory times must strictly increase");
      if (p.capacity > points[i - 1].capacity) throw DomainError("trajectory capacity must not increase");
    }
  }
}

double failure_rate_per_year(double annual_failure_prob) {
  if (!(annual_failure_prob >= 0.0 && annual_failure_prob < 1.0))
    throw DomainError("failure_rate: annual_failure_prob must lie in [0,1)");
  return -std::log1p(-annual_failure_prob);
}

double expected_capacity(double annual_failure_prob, double t_years) {
  if (!(t_years >= 0.0)) throw DomainError("expected_capacity: t must be >= 0");
  if (!(annual_failure_prob >= 0.0 && annual_failure_prob < 1.0))
    throw DomainError("expected_capacity: annual_failure_prob must lie in [0,1)");
  return std::pow(1.0 - annual_failure_prob, t_years);
}

std::vector<double> sample_failure_times(const ModuleSpec& spec, double window_years, RngStream& rng) {
  if (!(window_years >= 0.0)) throw DomainError("sample_failure_times: window must be >= 0");
  const double rate = failure_rate_per_year(spec.system.annual_failure_prob);
  const double shape = spec.system.weibull_shape;
  std::vector<double> deaths;
  for (int64_t i = 0; i < spec.system_count; ++i) {
    // One uniform per system regardless of rate, to keep streams aligned
    // under common-random-number sweeps.
    double life = rng.exponential(rate);
    // Weibull via the calibrated inverse transform ((-ln U)/rate)^(1/k):
    // the one-year failure probability is unchanged, and shape 1 is the
    // exponential path bit for bit.
    if (shape != 1.0 && std::isfinite(life)) life = std::pow(life, 1.0 / shape);
    if (life <= window_years) deaths.push_back(life);
  }
  std::sort(deaths.begin(), deaths.end());
  return deaths;
}

CapacityTrajectory simulate_module(const ModuleSpec& spec, double horizon_years, RngStream& rng) {
  spec.validate();
  if (!(horizon_years >= 0.0)) throw DomainError("simulate_module: horizon must be >= 0");
  if (horizon_years > spec.service_life_years)
    throw DomainError("simulate_module: horizon exceeds the module service life");

  const std::vector<double> deaths = sample_failure_times(spec, horizon_years, rng);

  CapacityTrajectory trajectory;
  trajectory.horizon_years = horizon_years;
  trajectory.points.push_back({0.0, 1.0});
  int64_t failed = 0;
  const double n = static_cast<double>(spec.system_count);
  for (size_t i = 0; i < deaths.size(); ++i) {
    ++failed;
    // Coalesce deaths landing on the same instant into one breakpoint.
    if (i + 1 < deaths.size() && deaths[i + 1] == deaths[i]) continue;
    const double capacity = static_cast<double>(spec.system_count - failed) / n;
    if (deaths[i] == 0.0) {
      trajectory.points.front().capacity = 1.0;  // keep the (0,1.0) anchor; drop lands after it
      trajectory.points.push_back({std::nextafter(0.0, 1.0), capacity});
    } else {
      trajectory.points.push_back({deaths[i], capacity});
    }
  }
  return trajectory;
}

double capacity_at(const CapacityTrajectory& trajectory, double t_years) {
  if (!(t_years >= 0.0) || t_years > trajectory.horizon_years)
    throw DomainError("capacity_at: t outside the trajectory domain");
  // Last breakpoint with time <= t.
  auto it = std::upper_bound(trajectory.points.begin(), trajectory.points.end(), t_years,
                             [](double t, const TrajectoryPoint& p) { return t < p.time_years; });
  return std::prev(it)->capacity;
}

double delivered_capacity_hours(const CapacityTrajectory& trajectory, int64_t design_capacity) {
  trajectory.validate();
  double integral_years = 0.0;
  for (size_t i = 0; i < trajectory.points.size(); ++i) {
    const double t0 = trajectory.points[i].time_years;
    const double t1 = (i + 1 < trajectory.points.size()) ? trajectory.points[i + 1].time_years : trajectory.horizon_years;
    integral_years += trajectory.points[i].capacity * (t1 - t0);
  }
  return static_cast<double>(design_capacity) * integral_years * kHoursPerYear;
}

}  // namespace mdcsim
