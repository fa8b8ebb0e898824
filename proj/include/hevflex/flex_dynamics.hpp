#ifndef HEVFLEX_FLEX_DYNAMICS_HPP
#define HEVFLEX_FLEX_DYNAMICS_HPP

#include <utility>

#include "hevflex/drive_cycle.hpp"
#include "hevflex/fuel_map.hpp"
#include "hevflex/params.hpp"
#include "hevflex/powertrain.hpp"

namespace hevflex {

// Deviation state X = [dx, dv, soc]: position/velocity offsets from the
// upper-level plan plus battery state of charge.
struct DeviationState {
  double dx = 0.0;   // m
  double dv = 0.0;   // m/s
  double soc = 0.0;  // fraction
};

// Reduced control input U = [omega_e, dtd].
struct ControlInput {
  double omega_e = 0.0;  // rad/s
  double dtd = 0.0;      // N*m, torque-demand flexibility
};

// Closed box constraint on the deviation state.
struct StateBox {
  double dx_min = -3.5, dx_max = 3.5;
  double dv_min = -2.5, dv_max = 2.5;
  double soc_min = 0.50, soc_max = 0.70;

  bool contains(const DeviationState& x) const {
    return x.dx >= dx_min && x.dx <= dx_max && x.dv >= dv_min &&
           x.dv <= dv_max && x.soc >= soc_min && x.soc <= soc_max;
  }
  void validate() const;
};

// Everything the one-step transition needs besides the trace.
struct ModelParams {
  VehicleParams vehicle;
  PowertrainParams powertrain;
  BatteryParams battery;
  FuelMap fuel_map = FuelMap::surrogate();
};

// Driveline torque demand (N*m) implied by the cycle kinematics.
double demanded_torque(double v, double a, const VehicleParams& vehicle);

// Time derivatives (d(dx)/dt, d(dv)/dt) of the deviation channels.
std::pair<double, double> deviation_derivative(const DeviationState& x,
                                               double dtd, double v,
                                               const VehicleParams& vehicle);

enum class StepStatus {
  ok,
  infeasible_power,  // battery cannot deliver the implied power
  negative_speed,    // v(k) + dv < 0; evaluated with clamped speed, rejected
  out_of_box,        // successor leaves the state box
};

struct StepResult {
  StepStatus status = StepStatus::ok;
  DeviationState next;
  double p_batt = 0.0;     // W
  double p_engine = 0.0;   // W
  double fuel_rate = 0.0;  // g/s
};

// One explicit-Euler transition X(k+1) = X(k) + dt*F(X(k), U(k)).
// Feasibility violations are reported in the status; an engine speed
// outside the fuel map range throws std::domain_error.
StepResult try_step(const DeviationState& x, const ControlInput& u, int k,
                    const DemandTrace& trace, const ModelParams& model,
                    const StateBox& box);

// Throwing wrapper: InfeasibleTransitionError for power/speed violations,
// OutOfBoxError when the successor leaves the box.
DeviationState step(const DeviationState& x, const ControlInput& u, int k,
                    const DemandTrace& trace, const ModelParams& model,
                    const StateBox& box);

}  // namespace hevflex

#endif
