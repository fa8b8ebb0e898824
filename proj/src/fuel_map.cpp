#include "hevflex/fuel_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hevflex/errors.hpp"
#include "hevflex/powertrain.hpp"

namespace hevflex {

FuelMap FuelMap::from_samples(std::vector<double> speeds, std::vector<double> rates) {
  if (speeds.size() != rates.size() || speeds.size() < 2)
    throw ConfigError("fuel map needs at least two (speed, rate) samples");
  if (speeds.front() != 0.0)
    throw ConfigError("fuel map must start at omega_e = 0");
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (!std::isfinite(speeds[i]) || !std::isfinite(rates[i]) || rates[i] < 0.0)
      throw ConfigError("fuel map samples must be finite and nonnegative");
    if (i > 0 && !(speeds[i] > speeds[i - 1]))
      throw ConfigError("fuel map speeds must be strictly increasing");
  }
  FuelMap m;
  m.speeds_ = std::move(speeds);
  m.rates_ = std::move(rates);
  return m;
}

FuelMap FuelMap::surrogate(double max_speed, double efficiency, double lhv_j_per_g,
                           double idle_g_per_s) {
  if (!(max_speed > 0.0) || !(efficiency > 0.0) || !(lhv_j_per_g > 0.0) ||
      idle_g_per_s < 0.0)
    throw ConfigError("invalid fuel map surrogate constants");
  // 1 rad/s sampling keeps interpolation error negligible against the
  // smooth closed form.
  const int n = static_cast<int>(std::ceil(max_speed)) + 1;
  std::vector<double> w(n), r(n);
  for (int i = 0; i < n; ++i) {
    w[i] = (i == n - 1) ? max_speed : static_cast<double>(i);
    const double te = optimal_engine_torque(w[i], max_speed);
    r[i] = w[i] * te / (efficiency * lhv_j_per_g) + idle_g_per_s;
  }
  return from_samples(std::move(w), std::move(r));
}

FuelMap FuelMap::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fuel map file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty fuel map file: " + path);
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "omega_e,fuel_rate")
    throw IoError("fuel map header must be 'omega_e,fuel_rate', got '" + line + "'");
  std::vector<double> w, r;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    double a, b;
    char comma;
    if (!(ss >> a >> comma >> b) || comma != ',')
      throw IoError("fuel map parse error at line " + std::to_string(lineno));
    w.push_back(a);
    r.push_back(b);
  }
  try {
    return from_samples(std::move(w), std::move(r));
  } catch (const ConfigError& e) {
    throw IoError(std::string("invalid fuel map '") + path + "': " + e.what());
  }
}

double FuelMap::rate(double omega_e) const {
  if (!(omega_e >= 0.0) || omega_e > speeds_.back())
    throw std::domain_error("engine speed outside fuel map range");
  auto it = std::upper_bound(speeds_.begin(), speeds_.end(), omega_e);
  if (it == speeds_.end()) return rates_.back();  // exactly at max speed
  const std::size_t hi = static_cast<std::size_t>(it - speeds_.begin());
  if (hi == 0) return rates_.front();
  const std::size_t lo = hi - 1;
  const double t = (omega_e - speeds_[lo]) / (speeds_[hi] - speeds_[lo]);
  return rates_[lo] + t * (rates_[hi] - rates_[lo]);
}

}  // namespace hevflex
