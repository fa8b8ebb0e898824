#ifndef HEVFLEX_PARAMS_HPP
#define HEVFLEX_PARAMS_HPP

#include <string>

#include "hevflex/errors.hpp"

namespace hevflex {

// Longitudinal vehicle parameters. Defaults are the mid-size power-split
// hybrid used throughout the test suite.
struct VehicleParams {
  double mass = 1350.0;          // kg
  double wheel_radius = 0.28;    // m
  double frontal_area = 2.2;     // m^2
  double air_density = 1.225;    // kg/m^3
  double drag_coeff = 0.3;       // -
  double rolling_coeff = 0.007;  // -
  double gravity = 9.81;         // m/s^2

  void validate() const;
};

// Planetary gear set plus coupler and electric-machine efficiencies.
struct PowertrainParams {
  double ring_radius = 0.078;  // m
  double sun_radius = 0.030;   // m
  double coupler_ratio = 3.9;  // -
  double motor_eff = 0.9;      // (0,1]
  double gen_eff = 0.9;        // (0,1]

  void validate() const;
};

// Equivalent-circuit battery.
struct BatteryParams {
  double voltage = 202.0;      // V, open circuit
  double resistance = 0.45;    // ohm, internal
  double capacity = 23400.0;   // A*s

  void validate() const;
};

inline void VehicleParams::validate() const {
  auto pos = [](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
  };
  pos(mass, "mass");
  pos(wheel_radius, "wheel_radius");
  pos(frontal_area, "frontal_area");
  pos(air_density, "air_density");
  pos(drag_coeff, "drag_coeff");
  pos(rolling_coeff, "rolling_coeff");
  pos(gravity, "gravity");
  if (!(rolling_coeff < 1.0)) throw ConfigError("rolling_coeff must be < 1");
  if (!(drag_coeff < 2.0)) throw ConfigError("drag_coeff must be < 2");
}

inline void PowertrainParams::validate() const {
  if (!(sun_radius > 0.0) || !(ring_radius > sun_radius))
    throw ConfigError("need ring_radius > sun_radius > 0");
  if (!(coupler_ratio > 0.0)) throw ConfigError("coupler_ratio must be positive");
  if (!(motor_eff > 0.0 && motor_eff <= 1.0))
    throw ConfigError("motor_eff must be in (0,1]");
  if (!(gen_eff > 0.0 && gen_eff <= 1.0))
    throw ConfigError("gen_eff must be in (0,1]");
}

inline void BatteryParams::validate() const {
  if (!(voltage > 0.0)) throw ConfigError("battery voltage must be positive");
  if (!(resistance > 0.0)) throw ConfigError("battery resistance must be positive");
  if (!(capacity > 0.0)) throw ConfigError("battery capacity must be positive");
}

}  // namespace hevflex

#endif
