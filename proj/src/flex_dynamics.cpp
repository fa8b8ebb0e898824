#include "hevflex/flex_dynamics.hpp"

#include <cmath>
#include <string>

#include "hevflex/errors.hpp"

namespace hevflex {

void StateBox::validate() const {
  if (!(dx_min < dx_max) || !(dv_min < dv_max) || !(soc_min < soc_max))
    throw ConfigError("state box bounds must satisfy min < max per dimension");
  if (soc_min < 0.0 || soc_max > 1.0)
    throw ConfigError("soc box must lie within [0, 1]");
}

double demanded_torque(double v, double a, const VehicleParams& p) {
  const double f_drag = 0.5 * p.air_density * p.drag_coeff * p.frontal_area * v * v;
  const double f_roll = p.rolling_coeff * p.mass * p.gravity;
  return p.wheel_radius * (p.mass * a + f_drag + f_roll);
}

std::pair<double, double> deviation_derivative(const DeviationState& x, double dtd,
                                               double v, const VehicleParams& p) {
  const double drag =
      -0.5 * p.air_density * p.drag_coeff * p.frontal_area * x.dv * (2.0 * v + x.dv);
  const double ddv = (drag + dtd / p.wheel_radius) / p.mass;
  return {x.dv, ddv};
}

StepResult try_step(const DeviationState& x, const ControlInput& u, int k,
                    const DemandTrace& trace, const ModelParams& model,
                    const StateBox& box) {
  StepResult res;
  const double v_plan = trace.v[static_cast<std::size_t>(k)];
  const double td_plan = trace.torque_d[static_cast<std::size_t>(k)];

  const double v_actual = v_plan + x.dv;
  const bool speed_clamped = v_actual < 0.0;
  const double v_eval = speed_clamped ? 0.0 : v_actual;

  const OperatingPoint op = operating_point(v_eval, u.omega_e, td_plan + u.dtd,
                                            model.vehicle, model.powertrain,
                                            model.fuel_map.max_speed());
  res.p_batt = op.power_batt;
  res.p_engine = op.power_e;
  res.fuel_rate = model.fuel_map.rate(u.omega_e);

  const double disc = model.battery.voltage * model.battery.voltage -
                      4.0 * model.battery.resistance * res.p_batt;
  if (disc < 0.0) {
    res.status = StepStatus::infeasible_power;
    return res;
  }
  const double soc_dot = -(model.battery.voltage - std::sqrt(disc)) /
                         (2.0 * model.battery.resistance * model.battery.capacity);
  const auto [dx_dot, dv_dot] = deviation_derivative(x, u.dtd, v_plan, model.vehicle);

  res.next.dx = x.dx + trace.dt * dx_dot;
  res.next.dv = x.dv + trace.dt * dv_dot;
  res.next.soc = x.soc + trace.dt * soc_dot;

  if (speed_clamped) {
    res.status = StepStatus::negative_speed;
    return res;
  }
  if (!box.contains(res.next)) {
    res.status = StepStatus::out_of_box;
    return res;
  }
  return res;
}

DeviationState step(const DeviationState& x, const ControlInput& u, int k,
                    const DemandTrace& trace, const ModelParams& model,
                    const StateBox& box) {
  const StepResult res = try_step(x, u, k, trace, model, box);
  switch (res.status) {
    case StepStatus::ok:
      return res.next;
    case StepStatus::infeasible_power:
      throw InfeasibleTransitionError(
          "step k=" + std::to_string(k) + ": battery power " +
          std::to_string(res.p_batt) + " W is not deliverable");
    case StepStatus::negative_speed:
      throw InfeasibleTransitionError("step k=" + std::to_string(k) +
                                      ": driveline speed would go negative");
    case StepStatus::out_of_box:
      throw OutOfBoxError("step k=" + std::to_string(k) +
                          ": successor state leaves the state box");
  }
  throw Error("unreachable");
}

}  // namespace hevflex
