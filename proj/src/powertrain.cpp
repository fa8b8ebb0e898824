#include "hevflex/powertrain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hevflex/errors.hpp"

namespace hevflex {

double optimal_engine_torque(double omega_e, double omega_e_max) {
  if (!(omega_e >= 0.0) || omega_e > omega_e_max)
    throw std::domain_error("engine speed " + std::to_string(omega_e) +
                            " outside [0, " + std::to_string(omega_e_max) + "]");
  return 60.0 * std::atan(omega_e / 70.0) - 0.00018 * omega_e * omega_e +
         0.14 * omega_e;
}

OperatingPoint operating_point(double v, double omega_e, double torque_d,
                               const VehicleParams& vehicle,
                               const PowertrainParams& pt, double omega_e_max) {
  if (!(v >= 0.0)) throw std::domain_error("vehicle speed must be nonnegative");
  OperatingPoint op;
  const double ratio_sum = pt.sun_radius + pt.ring_radius;
  op.omega_e = omega_e;
  op.omega_d = v / vehicle.wheel_radius;
  op.omega_m = pt.coupler_ratio * op.omega_d;
  op.omega_r = op.omega_m;
  // Planetary speed constraint solved for the generator shaft.
  op.omega_g = (ratio_sum * omega_e - pt.ring_radius * op.omega_r) / pt.sun_radius;
  op.torque_e = optimal_engine_torque(omega_e, omega_e_max);
  op.torque_g = -(pt.sun_radius / ratio_sum) * op.torque_e;
  op.torque_r = (pt.ring_radius / ratio_sum) * op.torque_e;
  op.torque_m = torque_d / pt.coupler_ratio - op.torque_r;
  op.power_e = op.torque_e * omega_e;
  op.power_m = op.torque_m * op.omega_m;
  op.power_g = op.torque_g * op.omega_g;
  op.k_m = (op.power_m > 0.0) ? -1 : 1;
  op.k_g = (op.power_g > 0.0) ? -1 : 1;
  op.power_batt = battery_power(op, pt);
  return op;
}

double battery_power(const OperatingPoint& op, const PowertrainParams& pt) {
  const double em = (op.k_m < 0) ? 1.0 / pt.motor_eff : pt.motor_eff;
  const double eg = (op.k_g < 0) ? 1.0 / pt.gen_eff : pt.gen_eff;
  return em * op.power_m + eg * op.power_g;
}

double max_battery_power(const BatteryParams& batt) {
  return batt.voltage * batt.voltage / (4.0 * batt.resistance);
}

double soc_derivative(double p_batt, const BatteryParams& batt) {
  const double disc =
      batt.voltage * batt.voltage - 4.0 * batt.resistance * p_batt;
  if (disc < 0.0)
    throw InfeasiblePowerError("battery power " + std::to_string(p_batt) +
                               " W exceeds deliverable maximum " +
                               std::to_string(max_battery_power(batt)) + " W");
  return -(batt.voltage - std::sqrt(disc)) /
         (2.0 * batt.resistance * batt.capacity);
}

double fuel_rate(double omega_e, const FuelMap& map) { return map.rate(omega_e); }

}  // namespace hevflex
