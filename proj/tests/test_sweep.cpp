#include <doctest.h>

#include <map>
#include <sstream>

#include "helpers.hpp"
#include "netcrit/sweep.hpp"
#include "netcrit/validate.hpp"

using namespace netcrit;
using namespace netcrit::testing;

namespace {

std::vector<double> column_tau(const SweepTable& table, const std::string& model) {
    std::vector<double> taus;
    for (const ResultRow& row : table.rows)
        if (row.model == model) taus.push_back(row.tau);
    return taus;
}

std::string csv_text(const SweepTable& table) {
    std::ostringstream out;
    write_csv(table, out);
    return out.str();
}

}  // namespace

TEST_CASE("fig4 preset: tau grows with n") {
    const SweepTable table = run_preset("fig4");
    CHECK(table.rows.size() == 30);
    CHECK(strictly_increasing(column_tau(table, "cycle")));
}

TEST_CASE("fig5 preset: tau falls with r, steepest at the first step") {
    const SweepTable table = run_preset("fig5");
    const std::vector<double> taus = column_tau(table, "cycle");
    REQUIRE(taus.size() == 149);
    CHECK(strictly_decreasing(taus));
    const double first_drop = taus[0] - taus[1];
    for (std::size_t i = 1; i + 1 < taus.size(); ++i) CHECK(taus[i] - taus[i + 1] < first_drop);
}

TEST_CASE("fig7 preset mirrors the cycle trend on the 300x300 torus") {
    CHECK(strictly_decreasing(column_tau(run_preset("fig7"), "torus")));
}

TEST_CASE("fig9/fig10 presets: higher q helps, higher p hurts") {
    const SweepTable low = run_preset("fig9");    // p = q = 0.2
    const SweepTable high = run_preset("fig10");  // p = q = 0.7
    const auto random_low = column_tau(low, "random-ring");
    const auto random_high = column_tau(high, "random-ring");
    const auto failure_low = column_tau(low, "failure-ring");
    const auto failure_high = column_tau(high, "failure-ring");
    REQUIRE(random_low.size() == random_high.size());
    for (std::size_t i = 0; i < random_low.size(); ++i) {
        CHECK(random_high[i] < random_low[i]);
        CHECK(failure_high[i] > failure_low[i]);
    }
}

TEST_CASE("fig11 preset: tau grows with eps at every n") {
    const SweepTable table = run_preset("fig11");
    std::map<std::string, std::vector<double>> by_n;
    for (const ResultRow& row : table.rows) by_n[row.params[0]].push_back(row.tau);
    REQUIRE(by_n.size() == 9);
    for (const auto& [n, taus] : by_n) {
        REQUIRE(taus.size() == 5);
        CHECK(strictly_increasing(taus));
    }
}

TEST_CASE("fig6 stride controls the surface grid") {
    SweepOptions options;
    options.stride = 100;
    const SweepTable table = run_preset("fig6", options);
    CHECK(table.rows.size() == 9);  // k in {10, 110, 210} squared
}

TEST_CASE("custom sweep with oracle column") {
    CustomSweep sweep;
    sweep.model = "cycle";
    sweep.sweep_param = "n";
    for (int n = 4; n <= 16; ++n) sweep.values.push_back(n);
    sweep.r = 1;
    sweep.options.include_oracle = true;
    const SweepTable table = run_custom(sweep);
    REQUIRE(table.rows.size() == 13);
    for (const ResultRow& row : table.rows) {
        REQUIRE(row.oracle_tau.has_value());
        REQUIRE(row.rel_err.has_value());
        CHECK(*row.rel_err < 1e-9);
    }
}

TEST_CASE("oracle column is dropped above the cap") {
    CustomSweep sweep;
    sweep.model = "cycle";
    sweep.sweep_param = "n";
    sweep.values = {8, 64};
    sweep.options.include_oracle = true;
    sweep.options.oracle_cap = 32;
    const SweepTable table = run_custom(sweep);
    CHECK(table.rows[0].oracle_tau.has_value());
    CHECK_FALSE(table.rows[1].oracle_tau.has_value());
    CHECK_FALSE(table.rows[1].rel_err.has_value());
}

TEST_CASE("CSV output is deterministic and shaped as documented") {
    CustomSweep sweep;
    sweep.model = "asym-ring";
    sweep.sweep_param = "eps";
    sweep.values = {0.0, 0.5, 1.0};
    sweep.n = 12;
    const SweepTable table = run_custom(sweep);
    const std::string text = csv_text(table);
    CHECK(text == csv_text(run_custom(sweep)));
    CHECK(text.find("# netcrit sweep custom") == 0);
    CHECK(text.find("model,n,eps,tau\n") != std::string::npos);
    CHECK(text.find("asym-ring,12,0.5,") != std::string::npos);
    CHECK(text.find('\r') == std::string::npos);

    SUBCASE("oracle columns extend the header") {
        CustomSweep with_oracle = sweep;
        with_oracle.options.include_oracle = true;
        CHECK(csv_text(run_custom(with_oracle)).find("model,n,eps,tau,oracle_tau,rel_err\n") !=
              std::string::npos);
    }
}

TEST_CASE("unknown presets and parameters are rejected") {
    CHECK_THROWS_AS(run_preset("fig12"), SpecError);
    CustomSweep sweep;
    sweep.model = "cycle";
    sweep.sweep_param = "volume";
    sweep.values = {1.0};
    CHECK_THROWS_AS(run_custom(sweep), SpecError);
    sweep.sweep_param = "n";
    sweep.values.clear();
    CHECK_THROWS_AS(run_custom(sweep), SpecError);
}

TEST_CASE("validation scopes pass under the standard gates") {
    for (const ValidationOutcome& outcome : run_validation("all", 24)) {
        INFO(outcome.scope << " worst " << outcome.worst_case);
        CHECK(outcome.ok());
        CHECK(outcome.max_rel_err < 1e-9);
        CHECK(outcome.points > 0);
    }
    CHECK_THROWS_AS(run_validation("everything", 16), SpecError);
}
