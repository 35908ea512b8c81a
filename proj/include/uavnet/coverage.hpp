#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavnet/availability.hpp"
#include "uavnet/numerics.hpp"
#include "uavnet/params.hpp"

namespace uavnet {

/// Probability of a line-of-sight air-to-ground link at 3-D user-UAV
/// distance r3d (the in-cluster support is [h, sqrt(h^2 + rc^2)]):
///   1 / (1 + a exp(-b (elevation_deg - a))).
/// Directly below the UAV the elevation is 90 degrees.
inline double los_probability(double r3d, const NetworkParams& net,
                              const ChannelParams& ch) {
    const double h = net.uav_altitude_h;
    if (r3d < h)
        throw std::domain_error("los_probability: r3d must be >= uav_altitude_h");
    const double horizontal = std::sqrt(std::max(r3d * r3d - h * h, 0.0));
    const double elevation_deg = std::atan2(h, horizontal) * 180.0 / std::numbers::pi;
    return 1.0 / (1.0 + ch.env_a * std::exp(-ch.env_b * (elevation_deg - ch.env_a)));
}

inline double nlos_probability(double r3d, const NetworkParams& net,
                               const ChannelParams& ch) {
    return 1.0 - los_probability(r3d, net, ch);
}

/// Tail P(G >= g) of a unit-mean gamma fading gain with integer shape m
/// (Nakagami-m power gain): exp(-m g) * sum_{k<m} (m g)^k / k!.
inline double gamma_ccdf(int m, double g) {
    if (m < 1) throw std::domain_error("gamma_ccdf: shape must be an integer >= 1");
    if (g < 0.0) throw std::domain_error("gamma_ccdf: g must be >= 0");
    if (g == 0.0) return 1.0;
    const double x = static_cast<double>(m) * g;
    if (x <= 700.0) {
        double term = std::exp(-x), sum = term;
        for (int k = 1; k < m; ++k) {
            term *= x / k;
            sum += term;
        }
        return sum;
    }
    // exp(-x) underflows; sum the terms in log space instead
    double sum = 0.0;
    const double lx = std::log(x);
    for (int k = 0; k < m; ++k) sum += std::exp(-x + k * lx - std::lgamma(k + 1.0));
    return sum;
}

/// Fading-gain thresholds equivalent to SNR >= beta at distance r.
inline double snr_gamma_threshold_los(double r, const ChannelParams& ch) {
    return ch.snr_threshold_beta * ch.noise_power_sigma2 * std::pow(r, ch.alpha_los) /
           (ch.eta_los * ch.uav_tx_power_rho_u);
}
inline double snr_gamma_threshold_nlos(double r, const ChannelParams& ch) {
    return ch.snr_threshold_beta * ch.noise_power_sigma2 * std::pow(r, ch.alpha_nlos) /
           (ch.eta_nlos * ch.uav_tx_power_rho_u);
}
inline double snr_exp_threshold_tbs(double r, const ChannelParams& ch) {
    return ch.snr_threshold_beta * ch.noise_power_sigma2 * std::pow(r, ch.alpha_tbs) /
           ch.tbs_tx_power_rho_t;
}

struct UavCoverage {
    double total;     // los_part + nlos_part
    double los_part;
    double nlos_part;
};

/// Coverage probability of the UAV link for a user uniform in the hotspot
/// disk: LoS and NLoS contributions averaged over the 3-D distance density
/// 2r / rc^2 on [h, sqrt(h^2 + rc^2)].
inline UavCoverage coverage_uav(const SystemParams& p) {
    const double h = p.network.uav_altitude_h;
    const double rc = p.network.cluster_radius_rc;
    const double upper = std::sqrt(h * h + rc * rc);
    const double inv_rc2 = 1.0 / (rc * rc);
    const ChannelParams& ch = p.channel;
    const NetworkParams& net = p.network;

    UavCoverage out;
    out.los_part = integrate(
                       [&](double r) {
                           return los_probability(r, net, ch) *
                                  gamma_ccdf(ch.nakagami_m_los,
                                             snr_gamma_threshold_los(r, ch)) *
                                  2.0 * r * inv_rc2;
                       },
                       h, upper)
                       .value;
    out.nlos_part = integrate(
                        [&](double r) {
                            return nlos_probability(r, net, ch) *
                                   gamma_ccdf(ch.nakagami_m_nlos,
                                              snr_gamma_threshold_nlos(r, ch)) *
                                   2.0 * r * inv_rc2;
                        },
                        h, upper)
                        .value;
    out.total = out.los_part + out.nlos_part;
    return out;
}

/// Coverage probability of the nearest terrestrial BS under Rayleigh fading:
/// integral of 2 pi r lambda_T exp(-pi lambda_T r^2) exp(-g(r)) over r >= 0.
inline double coverage_tbs(const SystemParams& p) {
    const double lam = p.network.tbs_density_lambda_T;
    const ChannelParams& ch = p.channel;
    return integrate_semi_infinite(
               [&](double r) {
                   return 2.0 * std::numbers::pi * r * lam *
                          std::exp(-std::numbers::pi * lam * r * r) *
                          std::exp(-snr_exp_threshold_tbs(r, ch));
               },
               0.0)
        .value;
}

/// Analytic UAV-tier and TBS-tier coverage, computed once and reused by the
/// conditional-coverage evaluations below.
struct TierCoverage {
    double uav;
    double tbs;
};

inline TierCoverage tier_coverage(const SystemParams& p) {
    return {coverage_uav(p).total, coverage_tbs(p)};
}

struct CoverageBreakdown {
    double p_cov_uav;
    double p_cov_uav_los_part;
    double p_cov_uav_nlos_part;
    double p_cov_tbs;
    double availability;
    double p_cov_total;  // availability-weighted mixture of the two tiers
};

inline CoverageBreakdown total_coverage(const SystemParams& p) {
    const UavCoverage uav = coverage_uav(p);
    const double tbs = coverage_tbs(p);
    const double pa = availability(p);
    return {uav.total, uav.los_part, uav.nlos_part, tbs, pa,
            pa * uav.total + (1.0 - pa) * tbs};
}

/// Coverage conditioned on the nearest-station distance rs.
inline double conditional_coverage(double rs, const SystemParams& p,
                                   const TierCoverage& tiers) {
    const double a = availability_given_rs(rs, p).availability;
    return a * tiers.uav + (1.0 - a) * tiers.tbs;
}

inline double conditional_coverage(double rs, const SystemParams& p) {
    return conditional_coverage(rs, p, tier_coverage(p));
}

/// Largest achievable conditional coverage (station at the hotspot center).
inline double max_conditional_coverage(const SystemParams& p,
                                       const TierCoverage& tiers) {
    return max_availability(p.energy) * (tiers.uav - tiers.tbs) + tiers.tbs;
}

inline double max_conditional_coverage(const SystemParams& p) {
    return max_conditional_coverage(p, tier_coverage(p));
}

namespace detail {
// The two tiers coincide: the conditional coverage is a point mass and its
// distribution functions are a step. Guarded by an absolute threshold rather
// than dividing by uav - tbs.
inline constexpr double kDegenerateTierGap = 1e-14;
}  // namespace detail

/// P(conditional coverage > theta) over the station point process. Equals 1
/// below the TBS-only floor and 0 above the maximum achievable value.
inline double conditional_coverage_ccdf(double theta, const SystemParams& p,
                                        const TierCoverage& tiers) {
    const double gap = tiers.uav - tiers.tbs;
    if (std::abs(gap) <= detail::kDegenerateTierGap)
        return theta < tiers.tbs ? 1.0 : 0.0;
    const double x = (theta - tiers.tbs) / gap;
    if (gap > 0.0) return 1.0 - availability_cdf(x, p);
    return availability_cdf(x, p);
}

inline double conditional_coverage_ccdf(double theta, const SystemParams& p) {
    return conditional_coverage_ccdf(theta, p, tier_coverage(p));
}

/// Companion CDF accessor, P(conditional coverage <= theta).
inline double conditional_coverage_cdf(double theta, const SystemParams& p,
                                       const TierCoverage& tiers) {
    return 1.0 - conditional_coverage_ccdf(theta, p, tiers);
}

inline double conditional_coverage_cdf(double theta, const SystemParams& p) {
    return conditional_coverage_cdf(theta, p, tier_coverage(p));
}

}  // namespace uavnet
