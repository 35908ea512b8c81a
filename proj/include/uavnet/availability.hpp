#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavnet/numerics.hpp"
#include "uavnet/params.hpp"

namespace uavnet {

/// One service cycle conditioned on the nearest-station distance: how long
/// the UAV serves, travels and charges, and the resulting availability
/// fraction T_se / (T_se + T_ch + T_tra).
struct AvailabilityBudget {
    double service_time_Tse;  // s
    double travel_time_Ttra;  // s, round trip to the station
    double charging_time_Tch; // s
    double availability;      // in [0, 1]
};

/// Availability conditioned on nearest-station distance rs. Zero when the
/// battery cannot cover the round trip (rs beyond max_travel_radius).
inline AvailabilityBudget availability_given_rs(double rs, const SystemParams& p) {
    if (rs < 0.0)
        throw std::domain_error("availability_given_rs: rs must be >= 0");
    const double v = p.energy.cruise_velocity_V;
    const double pm = travel_power(p.energy);
    const double ps = p.energy.hover_service_power_Ps;
    AvailabilityBudget out;
    out.travel_time_Ttra = 2.0 * rs / v;
    out.charging_time_Tch = p.energy.charging_time_Tch;
    const double service_energy = p.energy.battery_capacity_Bmax - 2.0 * pm * rs / v;
    if (service_energy <= 0.0) {
        out.service_time_Tse = 0.0;
        out.availability = 0.0;
        return out;
    }
    out.service_time_Tse = service_energy / ps;
    out.availability = out.service_time_Tse /
                       (out.service_time_Tse + out.charging_time_Tch + out.travel_time_Ttra);
    return out;
}

/// Station distance at which the conditional availability equals exactly x:
///   C(x) = V (Bmax (x-1) + Ps Tch x) / (2 (Pm (x-1) - Ps x)).
/// Decreasing in x; C(0) is the maximum travel radius and C at the upper
/// domain bound Bmax / (Ps Tch + Bmax) is zero.
inline double critical_radius(double x, const SystemParams& p) {
    const double bmax = p.energy.battery_capacity_Bmax;
    const double ps = p.energy.hover_service_power_Ps;
    const double tch = p.energy.charging_time_Tch;
    const double upper = max_availability(p.energy);
    if (x < 0.0 || x > upper)
        throw std::domain_error("critical_radius: x outside [0, Bmax/(Ps Tch + Bmax)]");
    const double v = p.energy.cruise_velocity_V;
    const double pm = travel_power(p.energy);
    return v * (bmax * (x - 1.0) + ps * tch * x) / (2.0 * (pm * (x - 1.0) - ps * x));
}

/// CDF of the conditional availability over the station point process:
/// exp(-lambda_c pi C(x)^2) on the natural domain, extended by 0 below and
/// 1 above so it is a complete right-continuous distribution function.
inline double availability_cdf(double x, const SystemParams& p) {
    if (x < 0.0) return 0.0;
    const double upper = max_availability(p.energy);
    if (x >= upper) return 1.0;
    const double c = critical_radius(x, p);
    return std::exp(-p.network.station_density_lambda_c * std::numbers::pi * c * c);
}

/// Unconditional availability: integral of 1 - CDF over the availability
/// domain [0, Bmax/(Ps Tch + Bmax)].
inline double availability(const SystemParams& p) {
    const double upper = max_availability(p.energy);
    return integrate([&p](double x) { return 1.0 - availability_cdf(x, p); },
                     0.0, upper)
        .value;
}

namespace detail {

/// Cross-check route kept internal: the same expectation taken directly over
/// the Rayleigh nearest-station distance density 2 pi lambda r exp(-lambda pi r^2).
inline double availability_by_rs_expectation(const SystemParams& p) {
    const double lam = p.network.station_density_lambda_c;
    const double rmax = max_travel_radius(p);
    return integrate(
               [&](double r) {
                   return availability_given_rs(r, p).availability * 2.0 *
                          std::numbers::pi * lam * r *
                          std::exp(-lam * std::numbers::pi * r * r);
               },
               0.0, rmax)
        .value;
}

}  // namespace detail

}  // namespace uavnet
