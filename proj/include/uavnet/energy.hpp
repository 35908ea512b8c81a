#pragma once

#include <cmath>
#include <stdexcept>

#include "uavnet/numerics.hpp"

namespace uavnet {

/// Rotary-wing aerodynamic constants feeding the propulsion power curve.
/// All SI; defaults live in the "paper-table-1" config profile.
struct RotorParams {
    double blade_profile_power_P0;   // W
    double induced_power_Pi;         // W
    double tip_speed_Utip;           // m/s
    double mean_induced_velocity_v0; // m/s
    double fuselage_drag_ratio_d0;   // -
    double air_density_rho;          // kg/m^3
    double rotor_solidity_s;         // -
    double rotor_disc_area_A;        // m^2
};

struct PowerBreakdown {
    double blade_profile; // W
    double induced;       // W
    double parasite;      // W
    double total;         // W, sum of the three
};

/// Forward-flight propulsion power at cruise speed v:
///   P0 (1 + 3 v^2 / Utip^2)  +  Pi v0 / v  +  (1/2) d0 rho s A v^3.
/// The induced term diverges at v = 0; hover power is a separate constant.
inline PowerBreakdown propulsion_power(double v, const RotorParams& rotor) {
    if (!(v > 0.0))
        throw std::domain_error("propulsion_power: cruise speed must be > 0");
    PowerBreakdown out;
    out.blade_profile = rotor.blade_profile_power_P0 *
                        (1.0 + 3.0 * v * v / (rotor.tip_speed_Utip * rotor.tip_speed_Utip));
    out.induced = rotor.induced_power_Pi * rotor.mean_induced_velocity_v0 / v;
    out.parasite = 0.5 * rotor.fuselage_drag_ratio_d0 * rotor.air_density_rho *
                   rotor.rotor_solidity_s * rotor.rotor_disc_area_A * v * v * v;
    out.total = out.blade_profile + out.induced + out.parasite;
    return out;
}

/// Energy (J) to fly `distance` meters at speed v: time * propulsion power.
inline double travel_energy(double distance, double v, const RotorParams& rotor) {
    if (distance < 0.0)
        throw std::domain_error("travel_energy: distance must be >= 0");
    return distance / v * propulsion_power(v, rotor).total;
}

/// Search bracket for the energy-optimal cruise speed; covers all plausible
/// rotary-wing speeds.
inline constexpr double kCruiseSpeedLo = 1.0;  // m/s
inline constexpr double kCruiseSpeedHi = 60.0; // m/s

/// Cruise speed minimizing energy per meter traveled, i.e. argmin P_m(v)/v.
/// Independent of the distance flown.
inline double optimal_velocity(const RotorParams& rotor) {
    auto energy_per_meter = [&rotor](double v) {
        return propulsion_power(v, rotor).total / v;
    };
    return minimize_scalar(energy_per_meter, kCruiseSpeedLo, kCruiseSpeedHi, 1e-7)
        .first;
}

}  // namespace uavnet
