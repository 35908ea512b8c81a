#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "uavnet/availability.hpp"
#include "uavnet/coverage.hpp"
#include "uavnet/params.hpp"
#include "uavnet/rng.hpp"

namespace uavnet {

struct McConfig {
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    double confidence_level = 0.99;
    std::size_t horizon_cycles = 16;  // timeline oracle only
};

inline void validate(const McConfig& mc) {
    if (mc.trials < 1) throw validation_error("mc.trials must be >= 1");
    if (!(mc.confidence_level > 0.0 && mc.confidence_level < 1.0))
        throw validation_error("mc.confidence_level must be in (0, 1)");
    if (mc.horizon_cycles < 1) throw validation_error("mc.horizon_cycles must be >= 1");
}

struct McEstimate {
    double mean = 0.0;
    double ci_half_width = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

namespace detail {

/// Standard normal quantile: Acklam's rational approximation polished with
/// one Halley step against erfc, accurate to ~1e-15.
inline double normal_quantile(double prob) {
    if (!(prob > 0.0 && prob < 1.0))
        throw std::domain_error("normal_quantile: prob must be in (0, 1)");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (prob < plow) {
        const double q = std::sqrt(-2.0 * std::log(prob));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (prob <= 1.0 - plow) {
        const double q = prob - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - prob));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - prob;
    const double u = err * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

/// Two-sided z multiplier for a given confidence level.
inline double ci_z_value(double confidence_level) {
    return normal_quantile(0.5 * (1.0 + confidence_level));
}

/// Welford running mean/variance; numerically stable in fixed trial order.
struct RunningStats {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

inline McEstimate to_estimate(const RunningStats& s, const McConfig& mc) {
    const double z = ci_z_value(mc.confidence_level);
    return {s.mean, z * std::sqrt(s.variance() / static_cast<double>(s.n)), s.n,
            mc.seed};
}

}  // namespace detail

/// Distance from a fixed point to the nearest point of a PPP with density
/// lambda (per m^2): Rayleigh, sampled by inverse transform.
inline double sample_nearest_station_distance(SplitMix64& rng, double lambda) {
    return std::sqrt(-std::log(rng.uniform01()) / (std::numbers::pi * lambda));
}

/// Deterministic battery timeline: serve at the hotspot until only the
/// station-reserve energy remains, fly out, recharge, fly back. Returns the
/// served fraction of elapsed time over whole cycles; it reproduces the
/// closed-form conditional availability exactly.
inline double timeline_availability(double rs, const SystemParams& p,
                                    std::size_t horizon_cycles) {
    if (rs < 0.0) throw std::domain_error("timeline_availability: rs must be >= 0");
    if (horizon_cycles < 1)
        throw std::domain_error("timeline_availability: need at least one cycle");
    const double v = p.energy.cruise_velocity_V;
    const double reserve = travel_power(p.energy) * rs / v;  // J to reach the station
    const double bmax = p.energy.battery_capacity_Bmax;
    if (2.0 * reserve >= bmax) return 0.0;  // cannot both return and serve
    double served = 0.0, elapsed = 0.0;
    for (std::size_t c = 0; c < horizon_cycles; ++c) {
        double battery = bmax - reserve;  // arrive at the hotspot after the inbound leg
        const double serve_t = (battery - reserve) / p.energy.hover_service_power_Ps;
        served += serve_t;
        elapsed += serve_t;
        elapsed += rs / v;                    // outbound leg
        elapsed += p.energy.charging_time_Tch;  // recharge or swap
        elapsed += rs / v;                    // inbound leg
    }
    return served / elapsed;
}

/// Mean conditional availability over sampled nearest-station distances.
inline McEstimate estimate_availability(const SystemParams& p, const McConfig& mc) {
    validate(mc);
    detail::RunningStats stats;
    for (std::size_t i = 0; i < mc.trials; ++i) {
        SplitMix64 rng = trial_stream(mc.seed, i);
        const double rs =
            sample_nearest_station_distance(rng, p.network.station_density_lambda_c);
        stats.add(availability_given_rs(rs, p).availability);
    }
    return detail::to_estimate(stats, mc);
}

namespace detail {

struct CoverageTrial {
    bool uav_covered;
    bool tbs_covered;
    bool uav_available;
};

/// One coverage trial at a fixed nearest-station distance: the availability
/// decision is Bernoulli with the conditional availability, the UAV link
/// samples user position, LoS state and gamma fading, and the TBS link
/// samples the nearest-TBS distance and exponential fading.
inline CoverageTrial coverage_trial_at(SplitMix64& rng, const SystemParams& p,
                                       double rs) {
    CoverageTrial t;
    t.uav_available = rng.bernoulli(availability_given_rs(rs, p).availability);

    const double h = p.network.uav_altitude_h;
    const double rc = p.network.cluster_radius_rc;
    const double ru = std::sqrt(h * h + rc * rc * rng.uniform01_halfopen());
    const bool los = rng.bernoulli(los_probability(ru, p.network, p.channel));
    const int shape = los ? p.channel.nakagami_m_los : p.channel.nakagami_m_nlos;
    const double threshold = los ? snr_gamma_threshold_los(ru, p.channel)
                                 : snr_gamma_threshold_nlos(ru, p.channel);
    t.uav_covered = rng.gamma_unit_mean(shape) >= threshold;

    const double rt =
        sample_nearest_station_distance(rng, p.network.tbs_density_lambda_T);
    t.tbs_covered = rng.exponential() >= snr_exp_threshold_tbs(rt, p.channel);
    return t;
}

}  // namespace detail

struct CoverageEstimates {
    McEstimate total;     // own-cluster UAV when available, else nearest TBS
    McEstimate uav_tier;  // association forced to the UAV
    McEstimate tbs_tier;  // association forced to the nearest TBS
};

/// Full sampling of the spatial model, fading and the availability decision.
inline CoverageEstimates estimate_coverage(const SystemParams& p, const McConfig& mc) {
    validate(mc);
    detail::RunningStats total, uav, tbs;
    for (std::size_t i = 0; i < mc.trials; ++i) {
        SplitMix64 rng = trial_stream(mc.seed, i);
        const double rs =
            sample_nearest_station_distance(rng, p.network.station_density_lambda_c);
        const detail::CoverageTrial t = detail::coverage_trial_at(rng, p, rs);
        uav.add(t.uav_covered ? 1.0 : 0.0);
        tbs.add(t.tbs_covered ? 1.0 : 0.0);
        total.add((t.uav_available ? t.uav_covered : t.tbs_covered) ? 1.0 : 0.0);
    }
    return {detail::to_estimate(total, mc), detail::to_estimate(uav, mc),
            detail::to_estimate(tbs, mc)};
}

}  // namespace uavnet
