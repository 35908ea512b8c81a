#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "uavnet/availability.hpp"
#include "uavnet/config.hpp"
#include "uavnet/coverage.hpp"
#include "uavnet/montecarlo.hpp"

namespace uavnet {

enum class SweepOutput {
    availability,
    coverage_total,
    coverage_uav,
    coverage_tbs,
    ccdf_max,  // right endpoint of the conditional-coverage CCDF support
};

inline const char* to_string(SweepOutput o) {
    switch (o) {
        case SweepOutput::availability: return "availability";
        case SweepOutput::coverage_total: return "coverage_total";
        case SweepOutput::coverage_uav: return "coverage_uav";
        case SweepOutput::coverage_tbs: return "coverage_tbs";
        case SweepOutput::ccdf_max: return "ccdf";
    }
    return "?";
}

inline SweepOutput parse_sweep_output(const std::string& name) {
    if (name == "availability") return SweepOutput::availability;
    if (name == "coverage_total") return SweepOutput::coverage_total;
    if (name == "coverage_uav") return SweepOutput::coverage_uav;
    if (name == "coverage_tbs") return SweepOutput::coverage_tbs;
    if (name == "ccdf") return SweepOutput::ccdf_max;
    throw config_error("unknown sweep output '" + name +
                       "' (expected availability, coverage_total, coverage_uav, "
                       "coverage_tbs or ccdf)");
}

struct SweepSpec {
    std::string parameter_path;       // dotted config key
    std::vector<double> values;       // external units
    std::vector<SweepOutput> outputs;
    bool mc_check = false;
};

struct SweepResult {
    std::vector<std::string> columns;  // first column is the swept key
    std::vector<std::vector<double>> rows;
};

/// Accepts `lo:hi:log:N`, `lo:hi:lin:N` or an explicit comma list.
inline std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
            size_t next = text.find(':', pos);
            parts.push_back(text.substr(pos, next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (parts.size() != 4)
            throw config_error("value range must be lo:hi:log:N or lo:hi:lin:N, got '" +
                               text + "'");
        const double lo = detail::parse_number(parts[0], "values.lo");
        const double hi = detail::parse_number(parts[1], "values.hi");
        const double n = detail::parse_number(parts[3], "values.N");
        if (!(n >= 1.0) || n != std::floor(n))
            throw config_error("value range count must be a positive integer");
        const auto count = static_cast<std::size_t>(n);
        if (parts[2] == "log") {
            if (!(lo > 0.0 && hi > 0.0))
                throw config_error("log range endpoints must be positive");
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(count == 1 ? lo
                                         : lo * std::pow(hi / lo,
                                                         static_cast<double>(i) /
                                                             static_cast<double>(count - 1)));
        } else if (parts[2] == "lin") {
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(count == 1 ? lo
                                         : lo + (hi - lo) * static_cast<double>(i) /
                                                    static_cast<double>(count - 1));
        } else {
            throw config_error("value range mode must be 'log' or 'lin', got '" +
                               parts[2] + "'");
        }
        return out;
    }
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(detail::parse_number(text.substr(pos, next - pos), "values"));
        pos = next + 1;
    }
    return out;
}

namespace detail {

inline std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace detail

/// Evaluates the requested outputs at each swept value. The override is
/// applied to the raw (external-unit) document and re-normalized per row, so
/// unit conversions and the velocity resolution happen exactly as they would
/// from a config file. MC columns share the sweep seed across rows (common
/// random numbers), keeping curves smooth and the CSV reproducible.
inline SweepResult run_sweep(const SweepSpec& spec, const RawConfig& base,
                             const McConfig& mc) {
    if (spec.values.empty()) throw config_error("sweep needs a non-empty value list");
    if (spec.outputs.empty()) throw config_error("sweep needs a non-empty output set");
    const ConfigKey* key = find_config_key(spec.parameter_path);
    if (!key)
        throw config_error("sweep parameter '" + spec.parameter_path +
                           "' is not a config key");

    SweepResult result;
    result.columns.push_back(spec.parameter_path);
    for (SweepOutput o : spec.outputs) {
        result.columns.emplace_back(to_string(o));
        if (spec.mc_check && o != SweepOutput::ccdf_max) {
            result.columns.push_back(std::string(to_string(o)) + "_mc");
            result.columns.push_back(std::string(to_string(o)) + "_ci");
        }
    }

    for (double value : spec.values) {
        RawConfig raw = base;
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        raw[spec.parameter_path] = buf;
        const SystemParams params = normalize_params(raw);

        std::optional<TierCoverage> tiers;
        std::optional<double> pa;
        auto tiers_of = [&]() -> const TierCoverage& {
            if (!tiers) tiers = tier_coverage(params);
            return *tiers;
        };
        auto pa_of = [&]() {
            if (!pa) pa = availability(params);
            return *pa;
        };
        std::optional<McEstimate> mc_avail;
        std::optional<CoverageEstimates> mc_cov;

        std::vector<double> row;
        row.push_back(value);
        for (SweepOutput o : spec.outputs) {
            switch (o) {
                case SweepOutput::availability: row.push_back(pa_of()); break;
                case SweepOutput::coverage_total:
                    row.push_back(pa_of() * tiers_of().uav +
                                  (1.0 - pa_of()) * tiers_of().tbs);
                    break;
                case SweepOutput::coverage_uav: row.push_back(tiers_of().uav); break;
                case SweepOutput::coverage_tbs: row.push_back(tiers_of().tbs); break;
                case SweepOutput::ccdf_max:
                    row.push_back(max_conditional_coverage(params, tiers_of()));
                    break;
            }
            if (spec.mc_check && o != SweepOutput::ccdf_max) {
                McEstimate est;
                if (o == SweepOutput::availability) {
                    if (!mc_avail) mc_avail = estimate_availability(params, mc);
                    est = *mc_avail;
                } else {
                    if (!mc_cov) mc_cov = estimate_coverage(params, mc);
                    est = o == SweepOutput::coverage_total ? mc_cov->total
                          : o == SweepOutput::coverage_uav ? mc_cov->uav_tier
                                                           : mc_cov->tbs_tier;
                }
                row.push_back(est.mean);
                row.push_back(est.ci_half_width);
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

inline std::string to_csv(const SweepResult& result) {
    std::string out;
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        if (i) out += ',';
        out += result.columns[i];
    }
    out += '\n';
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += detail::format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace uavnet
