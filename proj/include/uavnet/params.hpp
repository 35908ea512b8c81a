#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "uavnet/energy.hpp"

namespace uavnet {

/// A physical parameter violates its invariant. The message names the field.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Battery, hover and travel power budget. All SI after ingestion;
/// cruise_velocity_V is stored resolved (the "optimal" sentinel is replaced
/// by the energy-optimal speed when the config is normalized).
struct EnergyParams {
    double battery_capacity_Bmax;  // J
    double hover_service_power_Ps; // W, propulsion + communication while serving
    double charging_time_Tch;      // s
    double cruise_velocity_V;      // m/s
    RotorParams rotor;
};

struct NetworkParams {
    double station_density_lambda_c; // charging stations per m^2
    double tbs_density_lambda_T;     // terrestrial BSs per m^2
    double uav_altitude_h;           // m
    double cluster_radius_rc;        // m, hotspot disk radius
};

/// Air-to-ground and terrestrial channel constants. eta_* are linear
/// attenuation factors (mean excess loss already applied); snr_threshold_beta
/// is linear. Nakagami shapes are integers so the gamma tail reduces to a
/// finite sum.
struct ChannelParams {
    double uav_tx_power_rho_u; // W
    double tbs_tx_power_rho_t; // W
    double alpha_los;          // path-loss exponent, LoS air-to-ground
    double alpha_nlos;         // path-loss exponent, NLoS air-to-ground
    double alpha_tbs;          // path-loss exponent, terrestrial
    double eta_los;            // linear mean excess-loss factor, LoS
    double eta_nlos;           // linear mean excess-loss factor, NLoS
    int nakagami_m_los;
    int nakagami_m_nlos;
    double env_a;              // environment constant a (LoS model)
    double env_b;              // environment constant b (LoS model)
    double noise_power_sigma2; // W
    double snr_threshold_beta; // linear
};

struct SystemParams {
    EnergyParams energy;
    NetworkParams network;
    ChannelParams channel;
};

namespace detail {
inline void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw validation_error(std::string(field) + " must be a positive finite number");
}
}  // namespace detail

inline void validate(const RotorParams& r) {
    detail::require_positive(r.blade_profile_power_P0, "energy.rotor.blade_profile_power_P0");
    detail::require_positive(r.induced_power_Pi, "energy.rotor.induced_power_Pi");
    detail::require_positive(r.tip_speed_Utip, "energy.rotor.tip_speed_Utip");
    detail::require_positive(r.mean_induced_velocity_v0, "energy.rotor.mean_induced_velocity_v0");
    detail::require_positive(r.fuselage_drag_ratio_d0, "energy.rotor.fuselage_drag_ratio_d0");
    detail::require_positive(r.air_density_rho, "energy.rotor.air_density_rho");
    detail::require_positive(r.rotor_solidity_s, "energy.rotor.rotor_solidity_s");
    detail::require_positive(r.rotor_disc_area_A, "energy.rotor.rotor_disc_area_A");
    if (!(r.tip_speed_Utip > r.mean_induced_velocity_v0))
        throw validation_error(
            "energy.rotor.tip_speed_Utip must exceed mean_induced_velocity_v0");
}

inline void validate(const EnergyParams& e) {
    detail::require_positive(e.battery_capacity_Bmax, "energy.battery_capacity_Bmax");
    detail::require_positive(e.hover_service_power_Ps, "energy.hover_service_power_Ps");
    if (!(e.charging_time_Tch >= 0.0) || !std::isfinite(e.charging_time_Tch))
        throw validation_error("energy.charging_time_Tch must be >= 0");
    detail::require_positive(e.cruise_velocity_V, "energy.cruise_velocity_V");
    validate(e.rotor);
}

inline void validate(const NetworkParams& n) {
    detail::require_positive(n.station_density_lambda_c, "network.station_density_lambda_c");
    detail::require_positive(n.tbs_density_lambda_T, "network.tbs_density_lambda_T");
    detail::require_positive(n.uav_altitude_h, "network.uav_altitude_h");
    detail::require_positive(n.cluster_radius_rc, "network.cluster_radius_rc");
}

inline void validate(const ChannelParams& c) {
    detail::require_positive(c.uav_tx_power_rho_u, "channel.uav_tx_power_rho_u");
    detail::require_positive(c.tbs_tx_power_rho_t, "channel.tbs_tx_power_rho_t");
    if (!(c.alpha_los >= 2.0)) throw validation_error("channel.alpha_los must be >= 2");
    if (!(c.alpha_nlos >= 2.0)) throw validation_error("channel.alpha_nlos must be >= 2");
    if (!(c.alpha_tbs >= 2.0)) throw validation_error("channel.alpha_tbs must be >= 2");
    detail::require_positive(c.eta_los, "channel.eta_los");
    detail::require_positive(c.eta_nlos, "channel.eta_nlos");
    if (c.nakagami_m_los < 1)
        throw validation_error("channel.nakagami_m_los must be an integer >= 1");
    if (c.nakagami_m_nlos < 1)
        throw validation_error("channel.nakagami_m_nlos must be an integer >= 1");
    detail::require_positive(c.env_a, "channel.env_a");
    detail::require_positive(c.env_b, "channel.env_b");
    detail::require_positive(c.noise_power_sigma2, "channel.noise_power_sigma2");
    detail::require_positive(c.snr_threshold_beta, "channel.snr_threshold_beta");
}

/// Propulsion power drawn while traveling at the resolved cruise speed.
inline double travel_power(const EnergyParams& e) {
    return propulsion_power(e.cruise_velocity_V, e.rotor).total;
}

/// Farthest station the UAV can round-trip on one charge: V Bmax / (2 Pm).
/// Beyond this radius no service time is left.
inline double max_travel_radius(const SystemParams& p) {
    return p.energy.cruise_velocity_V * p.energy.battery_capacity_Bmax /
           (2.0 * travel_power(p.energy));
}

/// Availability when the station is at the hotspot itself:
/// Bmax / (Bmax + Ps Tch). Upper bound over all station distances.
inline double max_availability(const EnergyParams& e) {
    return e.battery_capacity_Bmax /
           (e.hover_service_power_Ps * e.charging_time_Tch + e.battery_capacity_Bmax);
}

inline void validate(const SystemParams& p) {
    validate(p.energy);
    validate(p.network);
    validate(p.channel);
    const double range = max_travel_radius(p);
    if (!(range > 0.0) || !std::isfinite(range))
        throw validation_error("derived max travel radius must be positive and finite");
}

}  // namespace uavnet
