#include <cmath>
#include <random>

#include "doctest.h"
#include "qrc/tasks.hpp"

using namespace qrc;

TEST_CASE("integrate_lorenz equilibria and chaos") {
    LorenzParams p;
    double fx = std::sqrt(72.0);
    LorenzSeries at_fp = integrate_lorenz(p, fx, fx, 27.0, 100, 0);
    for (long i = 0; i < 100; ++i) {
        CHECK(std::abs(at_fp.x[std::size_t(i)] - fx) <= 1e-6);
        CHECK(std::abs(at_fp.z[std::size_t(i)] - 27.0) <= 1e-6);
    }

    LorenzSeries origin = integrate_lorenz(p, 0, 0, 0, 50, 0);
    for (double v : origin.x) CHECK(v == 0.0);
    for (double v : origin.z) CHECK(v == 0.0);

    // sensitive dependence: twin trajectories split by 1e-9 diverge past
    // 1e-3 within 50 time units (2500 samples)
    LorenzSeries a = integrate_lorenz(p, 1, 1, 1, 2500, 0);
    LorenzSeries b = integrate_lorenz(p, 1 + 1e-9, 1, 1, 2500, 0);
    double max_sep = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        max_sep = std::max(max_sep, std::abs(a.x[i] - b.x[i]));
    CHECK(max_sep > 1e-3);
}

TEST_CASE("attractor bounds") {
    LorenzParams p;
    LorenzSeries s = integrate_lorenz(p, 1, 1, 1, 100000);
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        CHECK(std::abs(s.x[i]) <= 25.0);
        CHECK(s.z[i] >= 0.0);
        CHECK(s.z[i] <= 50.0);
    }
}

TEST_CASE("make_task") {
    LorenzParams p;
    SplitLengths splits{20, 100, 30, 5};
    LorenzSeries s = integrate_lorenz(p, 1, 1, 1, splits.required_inputs() + 5);

    // diagnostic zero-lookahead task: target is the raw input series
    TaskData identity = make_task(s, {TaskKind::LXX, 0}, splits);
    for (std::size_t n = 0; n < identity.targets.size(); ++n)
        CHECK(identity.targets[n] == doctest::Approx(s.x[n]));

    TaskData lxx = make_task(s, {TaskKind::LXX, 5}, splits);
    for (std::size_t n = 0; n < lxx.targets.size(); ++n)
        CHECK(lxx.targets[n] == doctest::Approx(s.x[n + 5]));

    TaskData lxz = make_task(s, {TaskKind::LXZ, 0}, splits);
    for (std::size_t n = 0; n < lxz.targets.size(); ++n)
        CHECK(lxz.targets[n] == doctest::Approx(s.z[n]));

    // training segment spans exactly [-1, 1] after rescaling
    long train_start = splits.n_init + splits.buffer;
    double lo = 1e9, hi = -1e9;
    for (long n = train_start; n < train_start + splits.n_train; ++n) {
        lo = std::min(lo, lxx.inputs[std::size_t(n)]);
        hi = std::max(hi, lxx.inputs[std::size_t(n)]);
    }
    CHECK(lo == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
    for (double u : lxx.inputs) CHECK(std::abs(u) <= 1.0);
}

TEST_CASE("uniform_series") {
    std::vector<double> u = uniform_series(100000, 3);
    double mean = 0;
    for (double v : u) {
        CHECK(v >= -1.0);
        CHECK(v <= 1.0);
        mean += v;
    }
    mean /= double(u.size());
    CHECK(std::abs(mean) < 0.01);

    std::vector<double> again = uniform_series(100000, 3);
    CHECK(u == again);
}

TEST_CASE("legendre") {
    CHECK(legendre(2, 0.0) == doctest::Approx(-0.5));
    for (int k = 0; k <= 8; ++k) CHECK(legendre(k, 1.0) == doctest::Approx(1.0));
    CHECK(legendre(3, 0.5) == doctest::Approx(-0.4375));

    // Monte Carlo orthogonality on [-1, 1]
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const long n = 1000000;
    for (int m = 0; m <= 4; ++m)
        for (int k = m + 1; k <= 4; ++k) {
            double sum = 0, sumsq = 0;
            std::mt19937_64 local(rng());
            for (long i = 0; i < n; ++i) {
                double x = unif(local);
                double v = legendre(m, x) * legendre(k, x);
                sum += v;
                sumsq += v * v;
            }
            double mean = sum / n;
            double stderr_est = std::sqrt((sumsq / n - mean * mean) / n);
            CHECK(std::abs(mean) <= 3 * stderr_est);
        }
}
