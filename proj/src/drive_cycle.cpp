#include "hevflex/drive_cycle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hevflex/errors.hpp"
#include "hevflex/flex_dynamics.hpp"

namespace hevflex {

DemandTrace DemandTrace::from_velocity(std::vector<double> velocity, double dt,
                                       const VehicleParams& vehicle) {
  if (velocity.size() < 2) throw ConfigError("drive cycle needs >= 2 samples");
  if (!(dt > 0.0)) throw ConfigError("drive cycle dt must be positive");
  for (double s : velocity)
    if (!std::isfinite(s) || s < 0.0)
      throw ConfigError("drive cycle speeds must be finite and nonnegative");
  DemandTrace tr;
  tr.dt = dt;
  tr.v = std::move(velocity);
  const std::size_t n = tr.v.size();
  tr.a.resize(n);
  tr.a.front() = (tr.v[1] - tr.v[0]) / dt;
  tr.a.back() = (tr.v[n - 1] - tr.v[n - 2]) / dt;
  for (std::size_t k = 1; k + 1 < n; ++k)
    tr.a[k] = (tr.v[k + 1] - tr.v[k - 1]) / (2.0 * dt);
  tr.torque_d.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    tr.torque_d[k] = demanded_torque(tr.v[k], tr.a[k], vehicle);
  return tr;
}

void DemandTrace::validate(double tol) const {
  if (v.size() < 2 || v.size() != a.size() || v.size() != torque_d.size())
    throw ConfigError("demand trace sequences have inconsistent lengths");
  if (!(dt > 0.0)) throw ConfigError("demand trace dt must be positive");
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(v[k] >= 0.0)) throw ConfigError("demand trace velocity must be >= 0");
    double fd;
    if (k == 0)
      fd = (v[1] - v[0]) / dt;
    else if (k == n - 1)
      fd = (v[n - 1] - v[n - 2]) / dt;
    else
      fd = (v[k + 1] - v[k - 1]) / (2.0 * dt);
    if (std::abs(fd - a[k]) > tol)
      throw ConfigError("demand trace acceleration inconsistent with velocity at k=" +
                        std::to_string(k));
  }
}

DemandTrace load_cycle_csv(const std::string& path, const VehicleParams& vehicle,
                           double spacing_tol) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cycle file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty cycle file: " + path);
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "t,v")
    throw IoError("cycle header must be 't,v', got '" + line + "'");
  std::vector<double> t, v;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    double a, b;
    char comma;
    if (!(ss >> a >> comma >> b) || comma != ',')
      throw IoError("cycle parse error at line " + std::to_string(lineno) + " of " + path);
    t.push_back(a);
    v.push_back(b);
  }
  if (t.size() < 2) throw IoError("cycle file needs >= 2 samples: " + path);
  const double dt = t[1] - t[0];
  if (!(dt > 0.0)) throw IoError("cycle time must be strictly increasing: " + path);
  for (std::size_t k = 1; k < t.size(); ++k)
    if (std::abs(t[k] - t[k - 1] - dt) > spacing_tol)
      throw IoError("cycle spacing not uniform at row " + std::to_string(k + 1) +
                    " of " + path);
  try {
    return DemandTrace::from_velocity(std::move(v), dt, vehicle);
  } catch (const ConfigError& e) {
    throw IoError(std::string("invalid cycle '") + path + "': " + e.what());
  }
}

void save_cycle_csv(const std::string& path, const DemandTrace& trace) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write cycle file: " + path);
  out << "t,v\n";
  char buf[64];
  for (std::size_t k = 0; k < trace.v.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", trace.dt * static_cast<double>(k),
                  trace.v[k]);
    out << buf;
  }
  if (!out) throw IoError("failed writing cycle file: " + path);
}

}  // namespace hevflex
