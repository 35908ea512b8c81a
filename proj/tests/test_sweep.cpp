#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "uavnet/sweep.hpp"

using namespace uavnet;
using Catch::Approx;

TEST_CASE("value list parsing") {
    CHECK(parse_value_list("1:100:log:3") == std::vector<double>{1.0, 10.0, 100.0});
    CHECK(parse_value_list("0:10:lin:5") ==
          std::vector<double>{0.0, 2.5, 5.0, 7.5, 10.0});
    CHECK(parse_value_list("1,2.5,4") == std::vector<double>{1.0, 2.5, 4.0});
    CHECK(parse_value_list("7") == std::vector<double>{7.0});

    CHECK_THROWS_AS(parse_value_list("1:10:geom:4"), config_error);
    CHECK_THROWS_AS(parse_value_list("1:10:log"), config_error);
    CHECK_THROWS_AS(parse_value_list("1:10:log:0"), config_error);
    CHECK_THROWS_AS(parse_value_list("-1:10:log:4"), config_error);
    CHECK_THROWS_AS(parse_value_list("1,two,3"), config_error);
}

TEST_CASE("sweep rows follow the input order and apply the override") {
    SweepSpec spec;
    spec.parameter_path = "network.station_density_lambda_c";
    spec.values = {1e-3, 1e-2, 1e-1, 1.0};  // stations per km^2
    spec.outputs = {SweepOutput::availability, SweepOutput::coverage_total};
    const RawConfig base = builtin_profile("paper-table-1");
    McConfig mc;
    const SweepResult result = run_sweep(spec, base, mc);

    REQUIRE(result.rows.size() == 4);
    REQUIRE(result.columns ==
            std::vector<std::string>{"network.station_density_lambda_c",
                                     "availability", "coverage_total"});
    for (std::size_t i = 0; i < 4; ++i) CHECK(result.rows[i][0] == spec.values[i]);

    // availability grows with station density
    for (std::size_t i = 1; i < 4; ++i) CHECK(result.rows[i][1] > result.rows[i - 1][1]);

    // row matches a direct evaluation with the same override
    RawConfig direct = base;
    direct["network.station_density_lambda_c"] = "0.10000000000000001";
    CHECK(result.rows[2][1] == Approx(availability(normalize_params(direct))).epsilon(1e-14));
}

TEST_CASE("sweep validates its spec before computing") {
    const RawConfig base = builtin_profile("paper-table-1");
    McConfig mc;
    SweepSpec spec;
    spec.parameter_path = "network.not_a_key";
    spec.values = {1.0};
    spec.outputs = {SweepOutput::availability};
    CHECK_THROWS_AS(run_sweep(spec, base, mc), config_error);

    spec.parameter_path = "network.station_density_lambda_c";
    spec.outputs = {};
    CHECK_THROWS_AS(run_sweep(spec, base, mc), config_error);

    spec.outputs = {SweepOutput::availability};
    spec.values = {};
    CHECK_THROWS_AS(run_sweep(spec, base, mc), config_error);
}

TEST_CASE("sweep output names round trip") {
    for (const char* name :
         {"availability", "coverage_total", "coverage_uav", "coverage_tbs", "ccdf"}) {
        CHECK(std::string(to_string(parse_sweep_output(name))) == name);
    }
    CHECK_THROWS_AS(parse_sweep_output("coverage"), config_error);
}

TEST_CASE("ccdf sweep column reports the support maximum") {
    SweepSpec spec;
    spec.parameter_path = "energy.charging_time_Tch";
    spec.values = {5.0, 40.0};  // minutes
    spec.outputs = {SweepOutput::ccdf_max};
    const SweepResult result = run_sweep(spec, builtin_profile("paper-table-1"), McConfig{});
    REQUIRE(result.columns == std::vector<std::string>{"energy.charging_time_Tch", "ccdf"});

    RawConfig direct = builtin_profile("paper-table-1");
    direct["energy.charging_time_Tch"] = "5";
    CHECK(result.rows[0][1] ==
          Approx(max_conditional_coverage(normalize_params(direct))).epsilon(1e-12));
    CHECK(result.rows[0][1] > result.rows[1][1]);  // longer charging lowers the peak
}

TEST_CASE("mc columns appear on request and the CSV is deterministic") {
    SweepSpec spec;
    spec.parameter_path = "network.station_density_lambda_c";
    spec.values = {1e-2, 1e-1};
    spec.outputs = {SweepOutput::availability};
    spec.mc_check = true;
    McConfig mc;
    mc.trials = 20000;
    mc.seed = 99;
    const RawConfig base = builtin_profile("paper-table-1");

    const SweepResult a = run_sweep(spec, base, mc);
    REQUIRE(a.columns == std::vector<std::string>{"network.station_density_lambda_c",
                                                  "availability", "availability_mc",
                                                  "availability_ci"});
    for (const auto& row : a.rows) {
        CHECK(std::abs(row[1] - row[2]) < 0.05);
        CHECK(row[3] > 0.0);
    }

    const SweepResult b = run_sweep(spec, base, mc);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_csv(a).substr(0, to_csv(a).find('\n')) ==
          "network.station_density_lambda_c,availability,availability_mc,availability_ci");
}
