#ifndef HEVFLEX_FUEL_MAP_HPP
#define HEVFLEX_FUEL_MAP_HPP

#include <string>
#include <vector>

namespace hevflex {

// Fuel-rate lookup along the optimal engine operating line. The map is a
// sampled table over engine speed with piecewise-linear interpolation;
// queries beyond the last sample are a domain error.
class FuelMap {
 public:
  // Energy-balance surrogate: rate(w) = w * Te_opt(w) / (eff * lhv) + idle,
  // sampled densely over [0, max_speed]. lhv is in J/g, idle in g/s.
  static FuelMap surrogate(double max_speed = 450.0, double efficiency = 0.34,
                           double lhv_j_per_g = 43000.0, double idle_g_per_s = 0.0);

  // CSV with header "omega_e,fuel_rate" (rad/s, g/s), strictly increasing
  // speeds. The last row defines the maximum engine speed.
  static FuelMap from_csv(const std::string& path);

  static FuelMap from_samples(std::vector<double> speeds, std::vector<double> rates);

  // Fuel rate in g/s at engine speed w (rad/s). Linear between samples.
  double rate(double omega_e) const;

  double max_speed() const { return speeds_.back(); }
  std::size_t sample_count() const { return speeds_.size(); }
  const std::vector<double>& speeds() const { return speeds_; }
  const std::vector<double>& rates() const { return rates_; }

 private:
  FuelMap() = default;
  std::vector<double> speeds_;  // rad/s, strictly increasing, starts at 0
  std::vector<double> rates_;   // g/s, nonnegative
};

}  // namespace hevflex

#endif
