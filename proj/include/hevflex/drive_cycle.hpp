#ifndef HEVFLEX_DRIVE_CYCLE_HPP
#define HEVFLEX_DRIVE_CYCLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hevflex/params.hpp"

namespace hevflex {

struct HorizonConfig {
  double dt = 1.0;  // s
  int steps = 1;    // N
  double final_time() const { return dt * steps; }
};

// Upper-level demand over a uniformly sampled horizon: velocity v(k),
// acceleration a(k) and driveline torque demand torque_d(k) for k = 0..N.
struct DemandTrace {
  double dt = 1.0;
  std::vector<double> v;         // m/s
  std::vector<double> a;         // m/s^2
  std::vector<double> torque_d;  // N*m

  int steps() const { return static_cast<int>(v.size()) - 1; }

  // Builds the trace from velocity samples: acceleration by central finite
  // differences (one-sided at the ends), torque by inverse longitudinal
  // dynamics.
  static DemandTrace from_velocity(std::vector<double> velocity, double dt,
                                   const VehicleParams& vehicle);

  // Checks length consistency, v >= 0 and that `a` matches the finite
  // difference of v to the given tolerance.
  void validate(double tol = 1e-9) const;
};

// Drive-cycle CSV with header "t,v" (s, m/s). Spacing must be uniform to
// within spacing_tol seconds.
DemandTrace load_cycle_csv(const std::string& path, const VehicleParams& vehicle,
                           double spacing_tol = 1e-6);

void save_cycle_csv(const std::string& path, const DemandTrace& trace);

}  // namespace hevflex

#endif
