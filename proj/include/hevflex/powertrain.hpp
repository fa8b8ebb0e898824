#ifndef HEVFLEX_POWERTRAIN_HPP
#define HEVFLEX_POWERTRAIN_HPP

#include "hevflex/fuel_map.hpp"
#include "hevflex/params.hpp"

namespace hevflex {

// Complete kinematic/torque solution of the power-split gear train for one
// instant. Speeds in rad/s, torques in N*m, powers in W. Sign exponents
// k_m/k_g are -1 when the machine produces motion power, +1 otherwise.
struct OperatingPoint {
  double omega_e = 0, omega_r = 0, omega_g = 0, omega_m = 0, omega_d = 0;
  double torque_e = 0, torque_r = 0, torque_g = 0, torque_m = 0;
  double power_m = 0, power_g = 0, power_batt = 0, power_e = 0;
  int k_m = 1, k_g = 1;
};

// Optimal-line engine torque (N*m) at engine speed omega_e (rad/s).
// Throws std::domain_error outside [0, omega_e_max].
double optimal_engine_torque(double omega_e, double omega_e_max = 450.0);

// Solves the gear-train algebra for vehicle speed v (m/s), engine speed
// omega_e and driveline torque demand torque_d. Engine torque is taken on
// the optimal line.
OperatingPoint operating_point(double v, double omega_e, double torque_d,
                               const VehicleParams& vehicle,
                               const PowertrainParams& pt,
                               double omega_e_max = 450.0);

// Electrical power balance at the inverter; positive = discharging.
double battery_power(const OperatingPoint& op, const PowertrainParams& pt);

// d(SoC)/dt (1/s) for battery power p_batt (W). Throws InfeasiblePowerError
// when p_batt exceeds the deliverable maximum.
double soc_derivative(double p_batt, const BatteryParams& batt);

// Largest deliverable battery power V^2/(4R) in W.
double max_battery_power(const BatteryParams& batt);

// Fuel rate (g/s) on the optimal line. Throws std::domain_error outside
// [0, map.max_speed()].
double fuel_rate(double omega_e, const FuelMap& map);

}  // namespace hevflex

#endif
