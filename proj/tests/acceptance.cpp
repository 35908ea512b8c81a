// Acceptance suite: one pass/fail line per criterion, exit code counts the
// failures. Each criterion pins its tolerance in code; oracle computations
// (closed forms, bisection inversion, empirical CDFs) live here and stay
// independent of the implementation paths they check.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "uavnet/uavnet.hpp"

using namespace uavnet;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome& out;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            out.pass = false;
            if (!out.detail.empty()) out.detail += "; ";
            out.detail += what;
        }
    }
    void note(const std::string& what) {
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += what;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

SystemParams params_with(const RawConfig& overrides) {
    RawConfig raw = overrides;
    return normalize_params(raw);
}

// --- criterion 1: energy model near the quoted operating point --------------
Outcome criterion1() {
    Outcome out;
    Check c{out};
    const RotorParams rotor = default_params().energy.rotor;
    const double vopt = optimal_velocity(rotor);
    const double pm = propulsion_power(vopt, rotor).total;
    c.require(vopt >= 18.0 && vopt <= 18.7, "V_opt " + fmt(vopt) + " outside [18.0, 18.7]");
    c.require(pm >= 157.0 && pm <= 167.0, "P_m " + fmt(pm) + " outside [157, 167] W");
    c.note("V_opt=" + fmt(vopt) + " m/s, P_m=" + fmt(pm) + " W");
    return out;
}

// --- criterion 2: peak availability at zero station distance ---------------
Outcome criterion2() {
    Outcome out;
    Check c{out};
    const double a = availability_given_rs(0.0, default_params()).availability;
    c.require(std::abs(a - 0.85721) <= 1e-5,
              "P(a|0) = " + fmt(a) + " not within 1e-5 of 0.85721");
    c.note("P(a|0)=" + fmt(a));
    return out;
}

// --- criterion 3: CDF-integral route vs direct expectation -----------------
Outcome criterion3() {
    Outcome out;
    Check c{out};
    for (const char* lambda_km2 : {"1e-4", "1e-3", "1e-2", "1e-1", "1"}) {
        const SystemParams p =
            params_with({{"network.station_density_lambda_c", lambda_km2}});
        const double via_cdf = availability(p);
        const double via_rs = detail::availability_by_rs_expectation(p);
        c.require(std::abs(via_cdf - via_rs) <= 1e-8,
                  std::string("lambda_c=") + lambda_km2 + " km^-2: routes differ by " +
                      fmt(std::abs(via_cdf - via_rs)));
    }
    return out;
}

// --- criterion 4: analytic vs Monte Carlo at one million trials -------------
Outcome criterion4() {
    Outcome out;
    Check c{out};
    const SystemParams p = default_params();
    McConfig mc;
    mc.trials = 1000000;
    mc.seed = 20260809;
    mc.confidence_level = 0.99;

    const McEstimate avail = estimate_availability(p, mc);
    const double pa = availability(p);
    c.require(std::abs(avail.mean - pa) <= avail.ci_half_width,
              "availability outside its CI (gap " + fmt(std::abs(avail.mean - pa)) + ")");
    c.require(std::abs(avail.mean - pa) < 5e-3, "availability gap >= 5e-3");

    const CoverageEstimates cov = estimate_coverage(p, mc);
    const TierCoverage tiers = tier_coverage(p);
    const double total = pa * tiers.uav + (1.0 - pa) * tiers.tbs;
    auto check_pair = [&c](const char* name, const McEstimate& est, double analytic) {
        c.require(std::abs(est.mean - analytic) <= est.ci_half_width,
                  std::string(name) + " outside its CI (gap " +
                      fmt(std::abs(est.mean - analytic)) + ", ci " +
                      fmt(est.ci_half_width) + ")");
        c.require(std::abs(est.mean - analytic) < 5e-3,
                  std::string(name) + " gap >= 5e-3");
    };
    check_pair("coverage_total", cov.total, total);
    check_pair("coverage_uav", cov.uav_tier, tiers.uav);
    check_pair("coverage_tbs", cov.tbs_tier, tiers.tbs);
    c.note("availability gap " + fmt(std::abs(avail.mean - pa)) + ", total gap " +
           fmt(std::abs(cov.total.mean - total)));
    return out;
}

// --- criterion 5: TBS coverage against the erfc closed form ----------------
Outcome criterion5() {
    Outcome out;
    Check c{out};
    const SystemParams p = default_params();
    const double a = std::numbers::pi * p.network.tbs_density_lambda_T;
    const double b = p.channel.snr_threshold_beta * p.channel.noise_power_sigma2 /
                     p.channel.tbs_tx_power_rho_t;
    const double oracle = a * std::exp(a * a / (4.0 * b)) *
                          std::sqrt(std::numbers::pi / b) / 2.0 *
                          std::erfc(a / (2.0 * std::sqrt(b)));
    const double value = coverage_tbs(p);
    c.require(std::abs(value - oracle) <= 1e-6,
              "quadrature " + fmt(value) + " vs closed form " + fmt(oracle));
    c.require(std::abs(oracle - 0.235203668627) <= 1e-9, "oracle drifted from its pin");
    c.note("P_cov_T=" + fmt(value));
    return out;
}

// --- criterion 6: critical radius round trip -------------------------------
Outcome criterion6() {
    Outcome out;
    Check c{out};
    const SystemParams p = default_params();
    const double upper = max_availability(p.energy);
    std::vector<double> grid;
    for (double x = 0.05; x <= 0.85 * upper; x += 0.05) grid.push_back(x);
    grid.push_back(0.85 * upper);
    for (double x : grid) {
        const double back = availability_given_rs(critical_radius(x, p), p).availability;
        c.require(std::abs(back - x) <= 1e-10,
                  "x=" + fmt(x) + " round trip off by " + fmt(std::abs(back - x)));
    }
    return out;
}

// --- criterion 7: CCDF against the empirical distribution ------------------
Outcome criterion7() {
    Outcome out;
    Check c{out};
    const SystemParams p = default_params();
    const TierCoverage tiers = tier_coverage(p);
    const std::size_t n = 1000000;
    std::vector<double> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SplitMix64 rng = trial_stream(424242, i);
        const double rs =
            sample_nearest_station_distance(rng, p.network.station_density_lambda_c);
        samples.push_back(conditional_coverage(rs, p, tiers));
    }
    std::sort(samples.begin(), samples.end());

    const double lo = tiers.tbs;
    const double hi = max_conditional_coverage(p, tiers);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double theta = lo + (hi - lo) * i / 49.0;
        const double analytic = conditional_coverage_ccdf(theta, p, tiers);
        const auto first_above = std::upper_bound(samples.begin(), samples.end(), theta);
        const double empirical =
            static_cast<double>(samples.end() - first_above) / static_cast<double>(n);
        worst = std::max(worst, std::abs(analytic - empirical));
    }
    c.require(worst <= 2e-3, "sup-norm " + fmt(worst) + " above 2e-3");
    c.note("sup-norm " + fmt(worst));
    return out;
}

// --- criterion 8: coverage trade-off between density and charging time ------
Outcome criterion8() {
    Outcome out;
    Check c{out};
    auto pcov = [](const char* lambda_km2, const char* tch_min) {
        const SystemParams p =
            params_with({{"network.station_density_lambda_c", lambda_km2},
                         {"energy.charging_time_Tch", tch_min}});
        return total_coverage(p).p_cov_total;
    };
    const double slow_dense = pcov("1", "40");
    const double fast_sparse = pcov("1e-2", "5");
    c.require(std::abs(slow_dense - fast_sparse) <= 0.03,
              "P_cov(1 km^-2, 40 min)=" + fmt(slow_dense) +
                  " vs P_cov(0.01 km^-2, 5 min)=" + fmt(fast_sparse) + ", gap " +
                  fmt(std::abs(slow_dense - fast_sparse)) + " > 0.03");

    for (const char* tch : {"5", "40"}) {
        double prev = -1.0;
        for (int i = 0; i < 12; ++i) {
            char lambda[40];
            std::snprintf(lambda, sizeof lambda, "%.17g",
                          1e-3 * std::pow(1e4, i / 11.0));
            const double v = pcov(lambda, tch);
            c.require(v >= prev - 1e-12,
                      std::string("curve Tch=") + tch + " min not monotone at point " +
                          std::to_string(i));
            prev = v;
        }
    }
    return out;
}

// --- criterion 9: CCDF support endpoint falls with charging time ------------
Outcome criterion9() {
    Outcome out;
    Check c{out};
    const SystemParams fast = params_with({{"energy.charging_time_Tch", "5"}});
    const SystemParams slow = params_with({{"energy.charging_time_Tch", "40"}});
    const TierCoverage tiers_fast = tier_coverage(fast);
    const TierCoverage tiers_slow = tier_coverage(slow);
    const double top_fast = max_conditional_coverage(fast, tiers_fast);
    const double top_slow = max_conditional_coverage(slow, tiers_slow);
    c.require(top_fast - top_slow > 0.1,
              "support maxima " + fmt(top_fast) + " vs " + fmt(top_slow) +
                  " differ by less than 0.1");
    c.note("support max " + fmt(top_fast) + " (5 min) vs " + fmt(top_slow) + " (40 min)");

    auto non_increasing = [&c](const SystemParams& p, const TierCoverage& tiers,
                               const char* tag) {
        const double lo = tiers.tbs;
        const double hi = max_conditional_coverage(p, tiers);
        double prev = 1.1;
        for (int i = 0; i <= 50; ++i) {
            const double theta = lo + (hi - lo) * i / 50.0;
            const double v = conditional_coverage_ccdf(theta, p, tiers);
            c.require(v <= prev + 1e-15, std::string("CCDF not non-increasing (") + tag + ")");
            prev = v;
        }
    };
    non_increasing(fast, tiers_fast, "5 min");
    non_increasing(slow, tiers_slow, "40 min");
    return out;
}

// --- criterion 10: property suites ------------------------------------------
Outcome criterion10() {
    Outcome out;
    Check c{out};
    const SystemParams base = default_params();
    const double rmax = max_travel_radius(base);

    // availability monotone in rs, Bmax, Tch on a 10x10x10 grid
    for (int bi = 0; bi < 10 && out.pass; ++bi) {
        SystemParams p = base;
        p.energy.battery_capacity_Bmax = 319680.0 * (0.5 + 0.15 * bi);
        for (int ti = 0; ti < 10; ++ti) {
            p.energy.charging_time_Tch = 60.0 + 300.0 * ti;
            double prev = 2.0;
            for (int ri = 0; ri < 10; ++ri) {
                const double a =
                    availability_given_rs(rmax * 1.4 * ri / 9.0, p).availability;
                c.require(a <= prev + 1e-15, "availability not non-increasing in rs");
                prev = a;
            }
        }
    }
    for (int ri = 0; ri < 10 && out.pass; ++ri) {
        const double rs = rmax * 0.8 * ri / 9.0;
        double prev_b = -1.0, prev_t = 2.0;
        for (int k = 0; k < 10; ++k) {
            SystemParams pb = base;
            pb.energy.battery_capacity_Bmax = 319680.0 * (0.5 + 0.15 * k);
            const double ab = availability_given_rs(rs, pb).availability;
            c.require(ab >= prev_b - 1e-15, "availability not non-decreasing in Bmax");
            prev_b = ab;
            SystemParams pt = base;
            pt.energy.charging_time_Tch = 60.0 + 300.0 * k;
            const double at = availability_given_rs(rs, pt).availability;
            c.require(at <= prev_t + 1e-15, "availability not non-increasing in Tch");
            prev_t = at;
        }
    }

    // coverage monotone in threshold, noise and transmit power
    double prev_u = 2.0, prev_t2 = 2.0;
    for (const char* beta : {"10", "20", "30"}) {
        const SystemParams p = params_with({{"channel.snr_threshold_beta", beta}});
        const double u = coverage_uav(p).total, t = coverage_tbs(p);
        c.require(u <= prev_u + 1e-12 && t <= prev_t2 + 1e-12,
                  "coverage not non-increasing in beta");
        prev_u = u;
        prev_t2 = t;
    }
    prev_u = 2.0;
    prev_t2 = 2.0;
    for (const char* s2 : {"1e-10", "1e-9", "1e-8"}) {
        const SystemParams p = params_with({{"channel.noise_power_sigma2", s2}});
        const double u = coverage_uav(p).total, t = coverage_tbs(p);
        c.require(u <= prev_u + 1e-12 && t <= prev_t2 + 1e-12,
                  "coverage not non-increasing in noise");
        prev_u = u;
        prev_t2 = t;
    }
    prev_u = -1.0;
    for (const char* w : {"0.05", "0.1", "0.2"}) {
        const SystemParams p = params_with({{"channel.uav_tx_power_rho_u", w}});
        c.require(coverage_uav(p).total >= prev_u - 1e-12,
                  "UAV coverage not non-decreasing in its power");
        prev_u = coverage_uav(p).total;
    }
    prev_t2 = -1.0;
    for (const char* w : {"5", "10", "20"}) {
        const SystemParams p = params_with({{"channel.tbs_tx_power_rho_t", w}});
        c.require(coverage_tbs(p) >= prev_t2 - 1e-12,
                  "TBS coverage not non-decreasing in its power");
        prev_t2 = coverage_tbs(p);
    }

    // gamma series identity vs numerically integrated incomplete gamma
    for (int m : {1, 2, 3, 5}) {
        const double lg = std::lgamma(static_cast<double>(m));
        for (int i = 0; i < 20; ++i) {
            const double g = 0.01 * std::pow(2000.0, i / 19.0);
            const double x = m * g;
            const double integral =
                integrate_semi_infinite(
                    [m, lg](double t) { return std::exp((m - 1) * std::log(t) - t - lg); },
                    x, 1e-12, 1e-16)
                    .value;
            c.require(std::abs(gamma_ccdf(m, g) - integral) < 1e-10,
                      "gamma series vs integral at m=" + std::to_string(m) +
                          ", g=" + fmt(g));
        }
    }

    // LoS + NLoS = 1 across the support
    const double lo = base.network.uav_altitude_h;
    const double hi = std::sqrt(lo * lo + base.network.cluster_radius_rc *
                                              base.network.cluster_radius_rc);
    for (int i = 0; i <= 30; ++i) {
        const double r = lo + (hi - lo) * i / 30.0;
        c.require(los_probability(r, base.network, base.channel) +
                          nlos_probability(r, base.network, base.channel) ==
                      1.0,
                  "P_L + P_N != 1 at r=" + fmt(r));
    }

    // byte-level determinism under a fixed seed
    McConfig mc;
    mc.trials = 50000;
    mc.seed = 8086;
    auto render = [&]() {
        const McEstimate a = estimate_availability(base, mc);
        const CoverageEstimates cov = estimate_coverage(base, mc);
        char buf[256];
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g %.17g", a.mean,
                      a.ci_half_width, cov.total.mean, cov.uav_tier.mean,
                      cov.tbs_tier.mean, cov.total.ci_half_width);
        return std::string(buf);
    };
    c.require(render() == render(), "seeded runs are not byte-identical");
    return out;
}

struct Criterion {
    int id;
    const char* title;
    double time_limit_s;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "energy model at the quoted operating point", 1.0, criterion1},
        {2, "peak availability at rs=0", 1.0, criterion2},
        {3, "availability: CDF route vs direct expectation", 5.0, criterion3},
        {4, "analytic vs Monte Carlo at 1e6 trials", 120.0, criterion4},
        {5, "TBS coverage vs erfc closed form", 5.0, criterion5},
        {6, "critical radius round trip", 1.0, criterion6},
        {7, "conditional-coverage CCDF vs empirical CDF", 60.0, criterion7},
        {8, "density/charging-time trade-off curves", 60.0, criterion8},
        {9, "CCDF support endpoint vs charging time", 30.0, criterion9},
        {10, "property suites", 60.0, criterion10},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out = cr.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (secs > cr.time_limit_s) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ");
            out.detail += "runtime " + fmt(secs) + "s exceeds " + fmt(cr.time_limit_s) + "s";
        }
        std::printf("[%s] criterion %2d: %s%s%s  (%.2fs)\n", out.pass ? "PASS" : "FAIL",
                    cr.id, cr.title, out.detail.empty() ? "" : " -- ",
                    out.detail.c_str(), secs);
        if (!out.pass) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
