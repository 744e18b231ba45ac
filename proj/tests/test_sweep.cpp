#include <sstream>

#include "doctest.h"
#include "qrc/sweep.hpp"

using namespace qrc;

namespace {

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.hamiltonian = "HI1";
    cfg.task = "measures";
    cfg.t_grid = {1.0, 4.0};
    cfg.v_grid = {5};
    cfg.seed_states = 3;
    cfg.splits = {20, 60, 20, 5};
    return cfg;
}

std::string csv_of(const ExperimentConfig& cfg) {
    SweepResult r = run_experiment(cfg);
    std::ostringstream os;
    write_sweep_csv(os, cfg, r);
    return os.str();
}

}  // namespace

TEST_CASE("config validation names the offending field") {
    ExperimentConfig cfg = tiny_config();
    cfg.t_grid.clear();
    CHECK_THROWS_WITH_AS(cfg.validate(), "config: t_grid is empty", std::invalid_argument);

    cfg = tiny_config();
    cfg.t_grid = {0.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = tiny_config();
    cfg.task = "bogus";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("identical configs give identical CSVs") {
    ExperimentConfig cfg = tiny_config();
    CHECK(csv_of(cfg) == csv_of(cfg));
}

TEST_CASE("parallel and serial sweeps agree") {
    ExperimentConfig serial = tiny_config();
    ExperimentConfig parallel = tiny_config();
    parallel.parallelism = 3;
    CHECK(csv_of(serial) == csv_of(parallel));
}

TEST_CASE("grid enumeration is complete") {
    ExperimentConfig cfg = tiny_config();
    cfg.v_grid = {2, 7};
    SweepResult r = run_experiment(cfg);
    REQUIRE(r.records.size() == 4);
    CHECK(r.records[0].clock_cycle == 1.0);
    CHECK(r.records[0].virtual_nodes == 2);
    CHECK(r.records[3].clock_cycle == 4.0);
    CHECK(r.records[3].virtual_nodes == 7);
    for (const auto& rec : r.records) {
        CHECK(std::isfinite(rec.expressivity));
        CHECK(std::isfinite(rec.observability));
    }
}

TEST_CASE("smooth_curve") {
    std::vector<double> constant(20, 3.5);
    auto sc = smooth_curve(constant, 5);
    for (double v : sc) CHECK(v == doctest::Approx(3.5));

    std::vector<double> ramp;
    for (int i = 0; i < 25; ++i) ramp.push_back(0.7 * i - 2.0);
    auto sr = smooth_curve(ramp, 7);
    for (std::size_t i = 0; i < ramp.size(); ++i)
        CHECK(std::abs(sr[i] - ramp[i]) <= 1e-12);

    std::vector<double> alternating;
    for (int i = 0; i < 12; ++i) alternating.push_back(i % 2 == 0 ? 1.0 : -1.0);
    auto sa = smooth_curve(alternating, 3);
    for (std::size_t i = 1; i + 1 < sa.size(); ++i)
        CHECK(std::abs(sa[i]) == doctest::Approx(1.0 / 3.0));

    CHECK_THROWS(smooth_curve(constant, 4));   // even window
    CHECK_THROWS(smooth_curve(constant, 21));  // longer than the series
}

TEST_CASE("correlation_report") {
    std::vector<double> a = {1, 2, 4, 3, 7, 5};
    std::vector<double> neg;
    for (double v : a) neg.push_back(-v);
    CHECK(correlation_report(a, a) == doctest::Approx(1.0));
    CHECK(correlation_report(a, neg) == doctest::Approx(-1.0));
    std::vector<double> flat(a.size(), 2.0);
    CHECK_THROWS(correlation_report(a, flat));
}

TEST_CASE("saturation_detect") {
    std::vector<double> ts, step, ramp;
    for (int i = 0; i < 40; ++i) {
        double t = i + 1;
        ts.push_back(t);
        step.push_back(t >= 12 ? 10.0 : 0.0);
        ramp.push_back(t);
    }
    auto t_sat = saturation_detect(ts, step);
    REQUIRE(t_sat.has_value());
    CHECK(*t_sat == doctest::Approx(12.0));
    CHECK(!saturation_detect(ts, ramp).has_value());
}

TEST_CASE("config file parsing") {
    std::istringstream is(
        "hamiltonian = HI3\n"
        "# a comment line\n"
        "t_grid = 1,2,5\n"
        "v_grid = 10,30\n"
        "observables = all\n"
        "noise_amplitude = 1e-4  # trailing comment\n"
        "seed_states = 7\n");
    ExperimentConfig cfg = load_config(is);
    CHECK(cfg.hamiltonian == "HI3");
    REQUIRE(cfg.t_grid.size() == 3);
    CHECK(cfg.t_grid[2] == doctest::Approx(5.0));
    REQUIRE(cfg.v_grid.size() == 2);
    CHECK(cfg.v_grid[1] == 30);
    CHECK(cfg.observable_selection == ObservableSelection::AllSites);
    CHECK(cfg.noise_amplitude == doctest::Approx(1e-4));
    CHECK(cfg.seed_states == 7);

    std::istringstream bad("no_such_key = 1\n");
    CHECK_THROWS(load_config(bad));

    ExperimentConfig o;
    CHECK(apply_config_entry(o, "run_seed", "99"));
    CHECK(o.run_seed == 99);
    CHECK(!apply_config_entry(o, "banana", "1"));

    // hash is sensitive to salient fields
    ExperimentConfig a = tiny_config(), b = tiny_config();
    b.noise_amplitude *= 2;
    CHECK(config_hash(a) == config_hash(tiny_config()));
    CHECK(config_hash(a) != config_hash(b));
}
