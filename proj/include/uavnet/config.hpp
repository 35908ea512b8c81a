#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uavnet/params.hpp"

namespace uavnet {

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Flat key=value document, keys in dotted-path form. Values are kept as
/// text until normalization so external units can be converted exactly once.
using RawConfig = std::map<std::string, std::string>;

namespace detail {

inline double conv_identity(double x) { return x; }
inline double conv_wh_to_joules(double x) { return x * 3600.0; }
inline double conv_minutes_to_seconds(double x) { return x * 60.0; }
inline double conv_per_km2_to_per_m2(double x) { return x * 1e-6; }
inline double conv_db_to_linear(double x) { return std::pow(10.0, x / 10.0); }
// Excess losses are quoted as positive dB values; the
// stored linear factor attenuates the received power.
inline double conv_db_loss_to_linear(double x) { return std::pow(10.0, -x / 10.0); }

}  // namespace detail

struct ConfigKey {
    const char* key;
    const char* external_unit;  // unit expected in config files
    const char* default_value;  // built-in profile value, external units
    double (*to_si)(double);
    void (*set)(SystemParams&, double);
    double (*get)(const SystemParams&);
    bool integer = false;
    bool allows_optimal = false;  // cruise velocity sentinel
};

/// Every accepted config key with its external unit and default.
inline const std::array<ConfigKey, 29>& config_schema() {
    using detail::conv_db_loss_to_linear;
    using detail::conv_db_to_linear;
    using detail::conv_identity;
    using detail::conv_minutes_to_seconds;
    using detail::conv_per_km2_to_per_m2;
    using detail::conv_wh_to_joules;
    static const std::array<ConfigKey, 29> schema = {{
        {"energy.battery_capacity_Bmax", "W*h", "88.8", conv_wh_to_joules,
         [](SystemParams& p, double v) { p.energy.battery_capacity_Bmax = v; },
         [](const SystemParams& p) { return p.energy.battery_capacity_Bmax; }},
        {"energy.hover_service_power_Ps", "W", "177.5", conv_identity,
         [](SystemParams& p, double v) { p.energy.hover_service_power_Ps = v; },
         [](const SystemParams& p) { return p.energy.hover_service_power_Ps; }},
        {"energy.charging_time_Tch", "min", "5", conv_minutes_to_seconds,
         [](SystemParams& p, double v) { p.energy.charging_time_Tch = v; },
         [](const SystemParams& p) { return p.energy.charging_time_Tch; }},
        {"energy.cruise_velocity_V", "m/s or \"optimal\"", "optimal", conv_identity,
         [](SystemParams& p, double v) { p.energy.cruise_velocity_V = v; },
         [](const SystemParams& p) { return p.energy.cruise_velocity_V; },
         false, true},
        {"energy.rotor.blade_profile_power_P0", "W", "79.86", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.blade_profile_power_P0 = v; },
         [](const SystemParams& p) { return p.energy.rotor.blade_profile_power_P0; }},
        {"energy.rotor.induced_power_Pi", "W", "88.63", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.induced_power_Pi = v; },
         [](const SystemParams& p) { return p.energy.rotor.induced_power_Pi; }},
        {"energy.rotor.tip_speed_Utip", "m/s", "120", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.tip_speed_Utip = v; },
         [](const SystemParams& p) { return p.energy.rotor.tip_speed_Utip; }},
        {"energy.rotor.mean_induced_velocity_v0", "m/s", "4.03", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.mean_induced_velocity_v0 = v; },
         [](const SystemParams& p) { return p.energy.rotor.mean_induced_velocity_v0; }},
        {"energy.rotor.fuselage_drag_ratio_d0", "-", "0.6", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.fuselage_drag_ratio_d0 = v; },
         [](const SystemParams& p) { return p.energy.rotor.fuselage_drag_ratio_d0; }},
        {"energy.rotor.air_density_rho", "kg/m^3", "1.225", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.air_density_rho = v; },
         [](const SystemParams& p) { return p.energy.rotor.air_density_rho; }},
        {"energy.rotor.rotor_solidity_s", "-", "0.05", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.rotor_solidity_s = v; },
         [](const SystemParams& p) { return p.energy.rotor.rotor_solidity_s; }},
        {"energy.rotor.rotor_disc_area_A", "m^2", "0.503", conv_identity,
         [](SystemParams& p, double v) { p.energy.rotor.rotor_disc_area_A = v; },
         [](const SystemParams& p) { return p.energy.rotor.rotor_disc_area_A; }},
        {"network.station_density_lambda_c", "km^-2", "1e-2", conv_per_km2_to_per_m2,
         [](SystemParams& p, double v) { p.network.station_density_lambda_c = v; },
         [](const SystemParams& p) { return p.network.station_density_lambda_c; }},
        {"network.tbs_density_lambda_T", "km^-2", "10", conv_per_km2_to_per_m2,
         [](SystemParams& p, double v) { p.network.tbs_density_lambda_T = v; },
         [](const SystemParams& p) { return p.network.tbs_density_lambda_T; }},
        {"network.uav_altitude_h", "m", "60", conv_identity,
         [](SystemParams& p, double v) { p.network.uav_altitude_h = v; },
         [](const SystemParams& p) { return p.network.uav_altitude_h; }},
        {"network.cluster_radius_rc", "m", "100", conv_identity,
         [](SystemParams& p, double v) { p.network.cluster_radius_rc = v; },
         [](const SystemParams& p) { return p.network.cluster_radius_rc; }},
        {"channel.uav_tx_power_rho_u", "W", "0.1", conv_identity,
         [](SystemParams& p, double v) { p.channel.uav_tx_power_rho_u = v; },
         [](const SystemParams& p) { return p.channel.uav_tx_power_rho_u; }},
        {"channel.tbs_tx_power_rho_t", "W", "10", conv_identity,
         [](SystemParams& p, double v) { p.channel.tbs_tx_power_rho_t = v; },
         [](const SystemParams& p) { return p.channel.tbs_tx_power_rho_t; }},
        {"channel.alpha_los", "-", "2.1", conv_identity,
         [](SystemParams& p, double v) { p.channel.alpha_los = v; },
         [](const SystemParams& p) { return p.channel.alpha_los; }},
        {"channel.alpha_nlos", "-", "4", conv_identity,
         [](SystemParams& p, double v) { p.channel.alpha_nlos = v; },
         [](const SystemParams& p) { return p.channel.alpha_nlos; }},
        {"channel.alpha_tbs", "-", "4", conv_identity,
         [](SystemParams& p, double v) { p.channel.alpha_tbs = v; },
         [](const SystemParams& p) { return p.channel.alpha_tbs; }},
        {"channel.eta_los", "dB excess loss", "0", conv_db_loss_to_linear,
         [](SystemParams& p, double v) { p.channel.eta_los = v; },
         [](const SystemParams& p) { return p.channel.eta_los; }},
        {"channel.eta_nlos", "dB excess loss", "20", conv_db_loss_to_linear,
         [](SystemParams& p, double v) { p.channel.eta_nlos = v; },
         [](const SystemParams& p) { return p.channel.eta_nlos; }},
        {"channel.nakagami_m_los", "-", "3", conv_identity,
         [](SystemParams& p, double v) { p.channel.nakagami_m_los = static_cast<int>(v); },
         [](const SystemParams& p) { return static_cast<double>(p.channel.nakagami_m_los); },
         true},
        {"channel.nakagami_m_nlos", "-", "1", conv_identity,
         [](SystemParams& p, double v) { p.channel.nakagami_m_nlos = static_cast<int>(v); },
         [](const SystemParams& p) { return static_cast<double>(p.channel.nakagami_m_nlos); },
         true},
        {"channel.env_a", "-", "25.27", conv_identity,
         [](SystemParams& p, double v) { p.channel.env_a = v; },
         [](const SystemParams& p) { return p.channel.env_a; }},
        {"channel.env_b", "-", "0.5", conv_identity,
         [](SystemParams& p, double v) { p.channel.env_b = v; },
         [](const SystemParams& p) { return p.channel.env_b; }},
        {"channel.noise_power_sigma2", "W", "1e-9", conv_identity,
         [](SystemParams& p, double v) { p.channel.noise_power_sigma2 = v; },
         [](const SystemParams& p) { return p.channel.noise_power_sigma2; }},
        {"channel.snr_threshold_beta", "dB", "20", conv_db_to_linear,
         [](SystemParams& p, double v) { p.channel.snr_threshold_beta = v; },
         [](const SystemParams& p) { return p.channel.snr_threshold_beta; }},
    }};
    return schema;
}

inline const ConfigKey* find_config_key(std::string_view key) {
    for (const ConfigKey& k : config_schema())
        if (key == k.key) return &k;
    return nullptr;
}

namespace detail {

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline double parse_number(const std::string& text, const std::string& key) {
    const std::string t = trim(text);
    double out = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last)
        throw config_error("config key '" + key + "': cannot parse numeric value '" + text + "'");
    return out;
}

}  // namespace detail

/// Parses a flat key=value (or key: value) document. '#' starts a comment.
/// Duplicate keys are rejected.
inline RawConfig parse_config(std::string_view text) {
    RawConfig out;
    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        size_t sep = stripped.find_first_of("=:");
        if (sep == std::string::npos)
            throw config_error("line " + std::to_string(line_no) +
                               ": expected 'key = value', got '" + stripped + "'");
        std::string key = detail::trim(std::string_view(stripped).substr(0, sep));
        std::string value = detail::trim(std::string_view(stripped).substr(sep + 1));
        if (key.empty() || value.empty())
            throw config_error("line " + std::to_string(line_no) +
                               ": empty key or value in '" + stripped + "'");
        if (!out.emplace(key, value).second)
            throw config_error("duplicate config key '" + key + "'");
    }
    return out;
}

/// The verbatim simulation-parameter profile shipped with the library,
/// in external units.
inline RawConfig builtin_profile(const std::string& name) {
    if (name != "paper-table-1")
        throw config_error("unknown built-in profile '" + name +
                           "' (available: paper-table-1)");
    RawConfig out;
    for (const ConfigKey& k : config_schema()) out[k.key] = k.default_value;
    return out;
}

/// Converts a raw document into validated SI parameters. Unknown keys are a
/// hard error; absent keys take their built-in defaults. A document carrying
/// `units = si` is taken as already normalized (velocity resolved) and passes
/// through unconverted, which makes normalization idempotent on SI input.
inline SystemParams normalize_params(const RawConfig& raw) {
    bool si_input = false;
    if (auto it = raw.find("units"); it != raw.end()) {
        if (it->second == "si")
            si_input = true;
        else if (it->second != "external")
            throw config_error("config key 'units' must be 'external' or 'si'");
    }
    for (const auto& [key, value] : raw) {
        if (key == "units") continue;
        if (!find_config_key(key))
            throw config_error("unknown config key '" + key + "'");
    }

    SystemParams params{};
    bool resolve_velocity = false;
    for (const ConfigKey& k : config_schema()) {
        auto it = raw.find(k.key);
        const bool from_user = it != raw.end();
        const std::string& text = from_user ? it->second : k.default_value;
        if (k.allows_optimal && text == "optimal") {
            resolve_velocity = true;
            k.set(params, 1.0);  // placeholder until the rotor is in place
            continue;
        }
        const double external = detail::parse_number(text, k.key);
        if (k.integer && external != std::floor(external))
            throw validation_error("config key '" + std::string(k.key) +
                                   "' must be an integer, got " + text);
        const bool convert = !(from_user && si_input);
        k.set(params, convert ? k.to_si(external) : external);
    }

    if (resolve_velocity) {
        validate(params.energy.rotor);
        params.energy.cruise_velocity_V = optimal_velocity(params.energy.rotor);
    }
    validate(params);
    return params;
}

/// Built-in profile defaults with the cruise velocity resolved to its optimum.
inline const SystemParams& default_params() {
    static const SystemParams params = normalize_params(builtin_profile("paper-table-1"));
    return params;
}

/// Emits an SI-units document that normalize_params maps back to bitwise
/// identical parameters.
inline std::string serialize_params(const SystemParams& params) {
    std::string out = "units = si\n";
    char buf[64];
    for (const ConfigKey& k : config_schema()) {
        if (k.integer)
            std::snprintf(buf, sizeof buf, "%d", static_cast<int>(k.get(params)));
        else
            std::snprintf(buf, sizeof buf, "%.17g", k.get(params));
        out += k.key;
        out += " = ";
        out += buf;
        out += '\n';
    }
    return out;
}

}  // namespace uavnet
