#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qwalk;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const std::string base =
    "topology = cycle\n"
    "n = 51\n"
    "turns = 2\n"
    "coin.xi = 0\n"
    "coin.theta = 45\n"
    "coin.zeta = 0\n";

}  // namespace

TEST_CASE("minimal config fills the defaults", "[config]") {
    auto cfg = validate_config(base);
    CHECK(cfg.run.kind == topology_kind::cycle);
    CHECK(cfg.run.n == 51);
    CHECK(cfg.run.turns == 2.0);
    CHECK_FALSE(cfg.run.steps.has_value());
    CHECK(cfg.run.coin.theta_deg == 45.0);
    REQUIRE(cfg.run.gate.has_value());
    CHECK(cfg.run.gate->alpha_deg == 0.0);
    CHECK(cfg.run.gate->beta_deg == 0.0);
    CHECK(cfg.run.initial.theta0_deg == 90.0);
    CHECK(cfg.run.initial.phi0_deg == 0.0);
    CHECK(cfg.run.noise_type == noise_kind::none);
    CHECK(cfg.run.noise.omega == 1.0);
    CHECK(cfg.coherence_bins == 5);
    CHECK_FALSE(cfg.reference_run);
    CHECK(cfg.axes.empty());
    CHECK(cfg.sweep_cap == 10000);
}

TEST_CASE("comments, blank lines and carriage returns are ignored", "[config]") {
    std::string text =
        "# leading comment\r\n"
        "\n"
        "topology = cycle   # trailing comment\r\n"
        "n=5\r\n"
        "  steps =  4  \n"
        "coin.xi=0\ncoin.theta=45\ncoin.zeta=0";
    auto cfg = validate_config(text);
    CHECK(cfg.run.n == 5);
    CHECK(cfg.run.steps == 4);
}

TEST_CASE("malformed lines are reported with their number", "[config]") {
    CHECK_THROWS_WITH(validate_config("topology cycle\n"), ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(validate_config("topology = cycle\n= 5\n"),
                      ContainsSubstring("line 2"));
}

TEST_CASE("duplicate and unknown keys are rejected", "[config]") {
    CHECK_THROWS_WITH(validate_config(base + "n = 7\n"), ContainsSubstring("more than once"));
    CHECK_THROWS_WITH(validate_config(base + "coin.gamma = 1\n"),
                      ContainsSubstring("unknown key"));
}

TEST_CASE("topology and coin are required", "[config]") {
    CHECK_THROWS_WITH(validate_config("n = 5\nsteps = 1\ncoin.xi=0\ncoin.theta=0\ncoin.zeta=0\n"),
                      ContainsSubstring("topology"));
    CHECK_THROWS_WITH(validate_config("topology = cycle\nn=5\nsteps=1\ncoin.xi=0\ncoin.theta=0\n"),
                      ContainsSubstring("coin.zeta"));
    CHECK_THROWS_WITH(validate_config("topology = cycle\nsteps = 1\ncoin.xi=0\ncoin.theta=0\ncoin.zeta=0\n"),
                      ContainsSubstring("'n'"));
    CHECK_THROWS_WITH(validate_config("topology = ring\n"), ContainsSubstring("line or cycle"));
}

TEST_CASE("the line topology owns no cycle keys", "[config]") {
    CHECK_THROWS_WITH(
        validate_config("topology = line\nn = 5\nsteps = 2\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
        ContainsSubstring("only valid for topology=cycle"));
    CHECK_THROWS_AS(
        validate_config("topology = line\nturns = 2\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
        validation_error);
}

TEST_CASE("gate angles come as a pair", "[config]") {
    CHECK_THROWS_WITH(validate_config(base + "gate.alpha = 30\n"),
                      ContainsSubstring("together"));
    auto cfg = validate_config(base + "gate.alpha = 30\ngate.beta = 50\n");
    CHECK(cfg.run.gate->alpha_deg == 30.0);
    CHECK(cfg.run.gate->beta_deg == 50.0);
}

TEST_CASE("noise keys demand a noise type", "[config]") {
    CHECK_THROWS_WITH(validate_config(base + "noise.T = 3.5\n"),
                      ContainsSubstring("noise.type"));
    CHECK_THROWS_WITH(validate_config(base + "noise.type = gad\nnoise.gamma0 = 0.1\nnoise.T = 3\n"),
                      ContainsSubstring("noise.Delta"));
    CHECK_THROWS_WITH(validate_config(base + "noise.type = gad\nnoise.gamma0 = -1\nnoise.T = 3\nnoise.Delta = 1\n"),
                      ContainsSubstring(">= 0"));
    CHECK_THROWS_WITH(validate_config(base + "noise.type = fuzz\n"),
                      ContainsSubstring("none, gad or phase_damping"));

    auto cfg = validate_config(base +
                               "noise.type = phase_damping\n"
                               "noise.gamma0 = 0.1\nnoise.T = 3.5\nnoise.Delta = 0.5\n"
                               "noise.omega = 2\n");
    CHECK(cfg.run.noise_type == noise_kind::phase_damping);
    CHECK(cfg.run.noise.omega == 2.0);
    CHECK_THROWS_AS(validate_config(base + "noise.type = gad\nnoise.gamma0 = 0.1\nnoise.T = 3\nnoise.Delta = 1\nnoise.omega = 0\n"),
                    validation_error);
}

TEST_CASE("duration validation happens at parse time", "[config]") {
    CHECK_THROWS_WITH(validate_config(base + "steps = 10\n"),
                      ContainsSubstring("not both"));
    CHECK_THROWS_AS(validate_config("topology = cycle\nn = 5\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
                    validation_error);
    CHECK_THROWS_WITH(
        validate_config("topology = cycle\nn = 50\nturns = 2\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
        ContainsSubstring("odd"));
    CHECK_THROWS_AS(
        validate_config("topology = cycle\nn = 51\nturns = -0.5\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
        validation_error);
}

TEST_CASE("numeric parsing is strict", "[config]") {
    CHECK_THROWS_AS(validate_config("topology = cycle\nn = 5\nsteps = 2.5\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
                    validation_error);
    CHECK_THROWS_AS(validate_config("topology = cycle\nn = abc\nsteps = 2\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"),
                    validation_error);
    CHECK_THROWS_AS(validate_config(base + "initial.theta0 = nan\n"), validation_error);
    CHECK_THROWS_AS(validate_config(base + "initial.theta0 =\n"), validation_error);
    CHECK_THROWS_AS(validate_config(base + "initial.theta0 = 1.2.3\n"), validation_error);
    auto cfg = validate_config(base + "initial.theta0 = 3e1\ninitial.phi0 = -40\n");
    CHECK(cfg.run.initial.theta0_deg == 30.0);
    CHECK(cfg.run.initial.phi0_deg == -40.0);
    CHECK_THROWS_AS(validate_config(base + "reference_run = yes\n"), validation_error);
    CHECK(validate_config(base + "reference_run = true\n").reference_run);
}

TEST_CASE("sweep axes parse into the grid", "[config]") {
    auto cfg = validate_config(base +
                               "noise.type = gad\n"
                               "noise.gamma0 = 0\nnoise.T = 3.5\nnoise.Delta = 0.1\n"
                               "sweep.noise.gamma0 = 0, 0.01, 0.025, 0.1\n");
    REQUIRE(cfg.axes.size() == 1);
    CHECK(cfg.axes[0].key == "noise.gamma0");
    CHECK(cfg.axes[0].values == std::vector<double>{0.0, 0.01, 0.025, 0.1});

    CHECK_THROWS_WITH(validate_config(base + "sweep.topology = 1, 2\n"),
                      ContainsSubstring("not a sweepable key"));
    CHECK_THROWS_WITH(validate_config(base + "sweep.noise.gamma0 = 0, 0.1\n"),
                      ContainsSubstring("noise.type"));
    CHECK_THROWS_AS(validate_config(base + "sweep.coin.xi =\n"), validation_error);
    CHECK_THROWS_AS(validate_config(base + "sweep.coin.xi = 1,,2\n"), validation_error);
    CHECK_THROWS_WITH(validate_config(base + "sweep.cap = 0\n"), ContainsSubstring("sweep.cap"));

    CHECK_THROWS_WITH(
        validate_config("topology = line\nsteps = 2\ncoin.xi=0\ncoin.theta=45\ncoin.zeta=0\n"
                        "sweep.turns = 1, 2\n"),
        ContainsSubstring("cycle"));
}

TEST_CASE("axis values override one scalar each", "[config]") {
    auto cfg = validate_config(base);
    run_params p = cfg.run;

    apply_axis_value(p, "steps", 10.0);
    CHECK(p.steps == 10);
    CHECK_FALSE(p.turns.has_value());
    apply_axis_value(p, "turns", 1.5);
    CHECK(p.turns == 1.5);
    CHECK_FALSE(p.steps.has_value());

    apply_axis_value(p, "coin.theta", 10.0);
    CHECK(p.coin.theta_deg == 10.0);
    apply_axis_value(p, "gate.beta", 70.0);
    CHECK(p.gate->beta_deg == 70.0);
    apply_axis_value(p, "noise.gamma0", 0.25);
    CHECK(p.noise.gamma0 == 0.25);

    CHECK_THROWS_AS(apply_axis_value(p, "n", 50.5), validation_error);
    CHECK_THROWS_AS(apply_axis_value(p, "n", 1.0), validation_error);
    CHECK_THROWS_AS(apply_axis_value(p, "steps", -1.0), validation_error);
    CHECK_THROWS_AS(apply_axis_value(p, "noise.T", -1.0), validation_error);
    CHECK_THROWS_AS(apply_axis_value(p, "noise.omega", 0.0), validation_error);
    CHECK_THROWS_AS(apply_axis_value(p, "coin", 1.0), validation_error);
}

TEST_CASE("error families map to exit codes", "[config]") {
    CHECK(validation_error("x").exit_code() == 2);
    CHECK(parameter_error("x").exit_code() == 2);
    CHECK(range_error("x").exit_code() == 2);
    CHECK(shape_error("x").exit_code() == 2);
    CHECK(capacity_error("x").exit_code() == 2);
    CHECK(integrity_error("x").exit_code() == 3);
    CHECK(boundary_error("x").exit_code() == 3);
    CHECK(channel_error("x").exit_code() == 3);
    CHECK(io_error("x").exit_code() == 4);
}
