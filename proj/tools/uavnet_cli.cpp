// Command-line front end: config ingestion, analytic evaluations, Monte Carlo
// cross-checks and the figure-style parameter sweeps, all emitted as
// deterministic tables or CSV.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavnet/uavnet.hpp"

namespace {

uavnet::RawConfig load_config(const std::string& arg) {
    if (arg == "paper-table-1") return uavnet::builtin_profile(arg);
    std::ifstream in(arg);
    if (!in)
        throw uavnet::config_error("cannot open config file '" + arg +
                                   "' (and it is not a built-in profile)");
    std::ostringstream buf;
    buf << in.rdbuf();
    return uavnet::parse_config(buf.str());
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw uavnet::config_error("cannot open output file '" + path + "'");
    out << content;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

struct CommonOpts {
    std::string config = "paper-table-1";
    std::string out;
};

void add_config_opt(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config,
                    "config file or built-in profile name (default paper-table-1)");
}

void add_mc_opts(CLI::App* cmd, uavnet::McConfig& mc) {
    cmd->add_option("--trials", mc.trials, "Monte Carlo trials per estimate");
    cmd->add_option("--seed", mc.seed, "RNG seed; the only source of randomness");
    cmd->add_option("--confidence", mc.confidence_level,
                    "confidence level for the reported intervals");
}

int run_vopt(const CommonOpts& opts) {
    const uavnet::SystemParams p = uavnet::normalize_params(load_config(opts.config));
    const uavnet::RotorParams& rotor = p.energy.rotor;
    const double vopt = uavnet::optimal_velocity(rotor);
    const uavnet::PowerBreakdown pb = uavnet::propulsion_power(vopt, rotor);
    std::printf("V_opt           %s m/s\n", fmt(vopt).c_str());
    std::printf("P_m(V_opt)      %s W\n", fmt(pb.total).c_str());
    std::printf("  blade profile %s W\n", fmt(pb.blade_profile).c_str());
    std::printf("  induced       %s W\n", fmt(pb.induced).c_str());
    std::printf("  parasite      %s W\n", fmt(pb.parasite).c_str());
    if (!opts.out.empty()) {
        std::string csv = "quantity,value\n";
        csv += "v_opt," + fmt(vopt) + "\n";
        csv += "p_m_total," + fmt(pb.total) + "\n";
        csv += "p_m_blade_profile," + fmt(pb.blade_profile) + "\n";
        csv += "p_m_induced," + fmt(pb.induced) + "\n";
        csv += "p_m_parasite," + fmt(pb.parasite) + "\n";
        write_file(opts.out, csv);
    }
    return 0;
}

int run_avail(const CommonOpts& opts, const std::string& quantiles) {
    const uavnet::SystemParams p = uavnet::normalize_params(load_config(opts.config));
    std::printf("availability     %s\n", fmt(uavnet::availability(p)).c_str());
    std::printf("max availability %s\n",
                fmt(uavnet::max_availability(p.energy)).c_str());
    std::printf("max travel radius %s m\n", fmt(uavnet::max_travel_radius(p)).c_str());

    std::vector<double> xs;
    if (!quantiles.empty()) {
        xs = uavnet::parse_value_list(quantiles);
    } else if (!opts.out.empty()) {
        const double upper = uavnet::max_availability(p.energy);
        for (int i = 0; i <= 20; ++i) xs.push_back(upper * i / 20.0);
    }
    if (!xs.empty()) {
        std::string csv = "x,cdf\n";
        for (double x : xs) {
            const double f = uavnet::availability_cdf(x, p);
            std::printf("  F(%s) = %s\n", fmt(x).c_str(), fmt(f).c_str());
            csv += fmt(x) + "," + fmt(f) + "\n";
        }
        if (!opts.out.empty()) write_file(opts.out, csv);
    }
    return 0;
}

int run_coverage(const CommonOpts& opts) {
    const uavnet::SystemParams p = uavnet::normalize_params(load_config(opts.config));
    const uavnet::CoverageBreakdown cov = uavnet::total_coverage(p);
    std::printf("p_cov_total      %s\n", fmt(cov.p_cov_total).c_str());
    std::printf("availability     %s\n", fmt(cov.availability).c_str());
    std::printf("p_cov_uav        %s\n", fmt(cov.p_cov_uav).c_str());
    std::printf("  los part       %s\n", fmt(cov.p_cov_uav_los_part).c_str());
    std::printf("  nlos part      %s\n", fmt(cov.p_cov_uav_nlos_part).c_str());
    std::printf("p_cov_tbs        %s\n", fmt(cov.p_cov_tbs).c_str());
    return 0;
}

int run_ccdf(const CommonOpts& opts, std::size_t points) {
    const uavnet::SystemParams p = uavnet::normalize_params(load_config(opts.config));
    const uavnet::TierCoverage tiers = uavnet::tier_coverage(p);
    const double top = uavnet::max_conditional_coverage(p, tiers);
    const double lo = std::min(tiers.tbs, top);
    const double hi = std::max(tiers.tbs, top);
    std::string csv = "theta,ccdf\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double theta =
            points == 1 ? lo
                        : lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(points - 1);
        csv += fmt(theta) + "," +
               fmt(uavnet::conditional_coverage_ccdf(theta, p, tiers)) + "\n";
    }
    emit(opts.out, csv);
    return 0;
}

int run_montecarlo(const CommonOpts& opts, const uavnet::McConfig& mc) {
    const uavnet::SystemParams p = uavnet::normalize_params(load_config(opts.config));
    const uavnet::McEstimate avail = uavnet::estimate_availability(p, mc);
    const uavnet::CoverageEstimates cov = uavnet::estimate_coverage(p, mc);
    const double pa = uavnet::availability(p);
    const uavnet::TierCoverage tiers = uavnet::tier_coverage(p);
    const double total = pa * tiers.uav + (1.0 - pa) * tiers.tbs;

    std::string csv = "quantity,estimate,ci_half_width,analytic\n";
    auto row = [&](const char* name, const uavnet::McEstimate& e, double analytic) {
        std::printf("%-15s %-14s +/- %-12s analytic %s\n", name, fmt(e.mean).c_str(),
                    fmt(e.ci_half_width).c_str(), fmt(analytic).c_str());
        csv += std::string(name) + "," + fmt(e.mean) + "," + fmt(e.ci_half_width) +
               "," + fmt(analytic) + "\n";
    };
    std::printf("trials %zu  seed %llu  confidence %s\n", mc.trials,
                static_cast<unsigned long long>(mc.seed),
                fmt(mc.confidence_level).c_str());
    row("availability", avail, pa);
    row("coverage_total", cov.total, total);
    row("coverage_uav", cov.uav_tier, tiers.uav);
    row("coverage_tbs", cov.tbs_tier, tiers.tbs);
    if (!opts.out.empty()) write_file(opts.out, csv);
    return 0;
}

int run_sweep_cmd(const CommonOpts& opts, const std::string& param,
                  const std::string& values, const std::string& outputs,
                  bool mc_check, const uavnet::McConfig& mc) {
    uavnet::SweepSpec spec;
    spec.parameter_path = param;
    spec.values = uavnet::parse_value_list(values);
    std::size_t pos = 0;
    while (pos <= outputs.size()) {
        size_t next = outputs.find(',', pos);
        if (next == std::string::npos) next = outputs.size();
        spec.outputs.push_back(uavnet::parse_sweep_output(outputs.substr(pos, next - pos)));
        pos = next + 1;
    }
    spec.mc_check = mc_check;
    const uavnet::SweepResult result =
        uavnet::run_sweep(spec, load_config(opts.config), mc);
    emit(opts.out, uavnet::to_csv(result));
    return 0;
}

// Coverage-vs-station-density sweeps behind the two standard comparison
// figures: (a) charging time 5 vs 40 minutes, (b) battery 88.8 vs 177.6 Wh.
int run_fig2(const CommonOpts& opts, const std::string& out_a, const std::string& out_b,
             std::size_t points, bool mc_check, const uavnet::McConfig& mc) {
    const std::string grid = "1e-3:1e1:log:" + std::to_string(points);
    uavnet::SweepSpec spec;
    spec.parameter_path = "network.station_density_lambda_c";
    spec.values = uavnet::parse_value_list(grid);
    spec.outputs = {uavnet::SweepOutput::coverage_total};
    spec.mc_check = mc_check;

    auto curve = [&](const char* key, const char* value) {
        uavnet::RawConfig base = load_config(opts.config);
        base[key] = value;
        return uavnet::run_sweep(spec, base, mc);
    };
    auto merge = [&](const uavnet::SweepResult& a, const uavnet::SweepResult& b,
                     const char* tag_a, const char* tag_b) {
        uavnet::SweepResult merged;
        merged.columns.push_back("lambda_c_km2");
        for (std::size_t c = 1; c < a.columns.size(); ++c)
            merged.columns.push_back(a.columns[c] + "_" + tag_a);
        for (std::size_t c = 1; c < b.columns.size(); ++c)
            merged.columns.push_back(b.columns[c] + "_" + tag_b);
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
            std::vector<double> row = a.rows[r];
            row.insert(row.end(), b.rows[r].begin() + 1, b.rows[r].end());
            merged.rows.push_back(std::move(row));
        }
        return merged;
    };

    write_file(out_a, uavnet::to_csv(merge(curve("energy.charging_time_Tch", "5"),
                                           curve("energy.charging_time_Tch", "40"),
                                           "tch5min", "tch40min")));
    write_file(out_b, uavnet::to_csv(merge(curve("energy.battery_capacity_Bmax", "88.8"),
                                           curve("energy.battery_capacity_Bmax", "177.6"),
                                           "bmax88.8wh", "bmax177.6wh")));
    std::printf("wrote %s and %s (%zu points each)\n", out_a.c_str(), out_b.c_str(),
                static_cast<std::size_t>(points));
    return 0;
}

// Conditional-coverage CCDF curves for the same parameter pairs.
int run_fig3(const CommonOpts& opts, const std::string& out_a, const std::string& out_b,
             std::size_t points) {
    auto curves = [&](const char* key, const char* va, const char* vb,
                      const char* tag_a, const char* tag_b, const std::string& path) {
        uavnet::RawConfig base_a = load_config(opts.config);
        base_a[key] = va;
        uavnet::RawConfig base_b = load_config(opts.config);
        base_b[key] = vb;
        const uavnet::SystemParams pa = uavnet::normalize_params(base_a);
        const uavnet::SystemParams pb = uavnet::normalize_params(base_b);
        const uavnet::TierCoverage ta = uavnet::tier_coverage(pa);
        const uavnet::TierCoverage tb = uavnet::tier_coverage(pb);
        const double top_a = uavnet::max_conditional_coverage(pa, ta);
        const double top_b = uavnet::max_conditional_coverage(pb, tb);
        const double lo = std::min({ta.tbs, tb.tbs, top_a, top_b});
        const double hi = std::max({ta.tbs, tb.tbs, top_a, top_b});
        std::string csv = std::string("theta,ccdf_") + tag_a + ",ccdf_" + tag_b + "\n";
        for (std::size_t i = 0; i < points; ++i) {
            const double theta =
                points == 1 ? lo
                            : lo + (hi - lo) * static_cast<double>(i) /
                                       static_cast<double>(points - 1);
            csv += fmt(theta) + "," +
                   fmt(uavnet::conditional_coverage_ccdf(theta, pa, ta)) + "," +
                   fmt(uavnet::conditional_coverage_ccdf(theta, pb, tb)) + "\n";
        }
        write_file(path, csv);
    };
    curves("energy.charging_time_Tch", "5", "40", "tch5min", "tch40min", out_a);
    curves("energy.battery_capacity_Bmax", "88.8", "177.6", "bmax88.8wh",
           "bmax177.6wh", out_b);
    std::printf("wrote %s and %s (%zu points each)\n", out_a.c_str(), out_b.c_str(),
                static_cast<std::size_t>(points));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Availability and coverage of a UAV-assisted cellular network "
                 "with battery-limited drones and random charging stations"};
    app.require_subcommand(1);

    CommonOpts vopt_opts;
    CLI::App* vopt = app.add_subcommand("vopt", "energy-optimal cruise speed and power");
    add_config_opt(vopt, vopt_opts);
    vopt->add_option("--csv", vopt_opts.out, "also write the table as CSV");

    CommonOpts avail_opts;
    std::string quantiles;
    CLI::App* avail = app.add_subcommand("avail", "availability probability and its CDF");
    add_config_opt(avail, avail_opts);
    avail->add_option("--quantiles", quantiles, "comma list of x values to tabulate F(x)");
    avail->add_option("--csv", avail_opts.out, "write (x, F(x)) rows as CSV");

    CommonOpts cov_opts;
    CLI::App* coverage = app.add_subcommand("coverage", "tier and total coverage");
    add_config_opt(coverage, cov_opts);

    CommonOpts ccdf_opts;
    std::size_t ccdf_points = 101;
    CLI::App* ccdf = app.add_subcommand("ccdf", "conditional-coverage CCDF rows");
    add_config_opt(ccdf, ccdf_opts);
    ccdf->add_option("--points", ccdf_points, "grid size over the support");
    ccdf->add_option("--out", ccdf_opts.out, "CSV path (stdout if omitted)");

    CommonOpts mc_opts;
    uavnet::McConfig mc;
    CLI::App* montecarlo =
        app.add_subcommand("montecarlo", "simulation estimates with confidence intervals");
    add_config_opt(montecarlo, mc_opts);
    add_mc_opts(montecarlo, mc);
    montecarlo->add_option("--csv", mc_opts.out, "also write the table as CSV");

    CommonOpts sweep_opts;
    std::string sweep_param, sweep_values;
    std::string sweep_outputs = "availability,coverage_total";
    bool sweep_mc = false;
    uavnet::McConfig sweep_mc_cfg;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate outputs over a parameter grid");
    add_config_opt(sweep, sweep_opts);
    sweep->add_option("--param", sweep_param, "dotted config key to sweep")->required();
    sweep->add_option("--values", sweep_values,
                      "lo:hi:log:N, lo:hi:lin:N or comma list (external units)")
        ->required();
    sweep->add_option("--outputs", sweep_outputs, "comma list of outputs");
    sweep->add_flag("--mc-check", sweep_mc, "append Monte Carlo columns");
    add_mc_opts(sweep, sweep_mc_cfg);
    sweep->add_option("--out", sweep_opts.out, "CSV path (stdout if omitted)");

    CommonOpts fig2_opts;
    std::string fig2_a = "fig2a.csv", fig2_b = "fig2b.csv";
    std::size_t fig2_points = 25;
    bool fig2_mc = false;
    uavnet::McConfig fig2_mc_cfg;
    fig2_mc_cfg.trials = 100000;
    CLI::App* fig2 = app.add_subcommand(
        "reproduce-fig2", "coverage vs station density for two charging times "
                          "and two battery sizes");
    add_config_opt(fig2, fig2_opts);
    fig2->add_option("--out-a", fig2_a, "CSV for the charging-time comparison");
    fig2->add_option("--out-b", fig2_b, "CSV for the battery-size comparison");
    fig2->add_option("--points", fig2_points, "grid size over station density");
    fig2->add_flag("--mc-check", fig2_mc, "append Monte Carlo columns");
    add_mc_opts(fig2, fig2_mc_cfg);

    CommonOpts fig3_opts;
    std::string fig3_a = "fig3a.csv", fig3_b = "fig3b.csv";
    std::size_t fig3_points = 201;
    CLI::App* fig3 = app.add_subcommand(
        "reproduce-fig3", "conditional-coverage CCDF for two charging times "
                          "and two battery sizes");
    add_config_opt(fig3, fig3_opts);
    fig3->add_option("--out-a", fig3_a, "CSV for the charging-time comparison");
    fig3->add_option("--out-b", fig3_b, "CSV for the battery-size comparison");
    fig3->add_option("--points", fig3_points, "theta grid size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n(run with --help for usage)\n";
        return 2;
    }

    try {
        if (vopt->parsed()) return run_vopt(vopt_opts);
        if (avail->parsed()) return run_avail(avail_opts, quantiles);
        if (coverage->parsed()) return run_coverage(cov_opts);
        if (ccdf->parsed()) return run_ccdf(ccdf_opts, ccdf_points);
        if (montecarlo->parsed()) return run_montecarlo(mc_opts, mc);
        if (sweep->parsed())
            return run_sweep_cmd(sweep_opts, sweep_param, sweep_values, sweep_outputs,
                                 sweep_mc, sweep_mc_cfg);
        if (fig2->parsed())
            return run_fig2(fig2_opts, fig2_a, fig2_b, fig2_points, fig2_mc, fig2_mc_cfg);
        if (fig3->parsed()) return run_fig3(fig3_opts, fig3_a, fig3_b, fig3_points);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
