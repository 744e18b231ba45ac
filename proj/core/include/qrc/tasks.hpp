// Benchmark data generation: Lorenz63 integration, the LXX / LXZ task
// pairs, uniform input series and Legendre polynomial targets.
#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "qrc/reservoir.hpp"

namespace qrc {

struct LorenzParams {
    double a = 10.0;
    double b = 28.0;
    double c = 8.0 / 3.0;
    double dt_integration = 0.001;
    double dt_sample = 0.02;
};

struct LorenzSeries {
    std::vector<double> x, y, z;
};

/// Classic RK4 at dt_integration, downsampled every dt_sample, with an
/// initial transient of `discard` samples dropped.
LorenzSeries integrate_lorenz(const LorenzParams& params, double x0, double y0, double z0,
                              long n_samples, long discard = 1000);

enum class TaskKind { LXX, LXZ };

struct TaskSpec {
    TaskKind kind = TaskKind::LXX;
    int lookahead = 5;  // samples, LXX only
};

struct TaskData {
    std::vector<double> inputs;   // x_n rescaled to [-1, 1] on the train segment
    std::vector<double> targets;  // raw x_{n+p} (LXX) or z_n (LXZ), aligned to inputs
};

/// Inputs are rescaled affinely using the training-segment min/max (values
/// outside the training range are clamped to [-1, 1]); targets stay raw.
TaskData make_task(const LorenzSeries& series, const TaskSpec& spec,
                   const SplitLengths& splits);

/// i.i.d. uniform series on [-1, 1], deterministic per seed.
std::vector<double> uniform_series(long n, std::uint64_t seed);

/// Legendre polynomial l_k(x) via the three-term recurrence.
double legendre(int degree, double x);

/// CSV export (columns t, x, y, z), starting at t = 0.
void write_lorenz_csv(std::ostream& os, const LorenzSeries& series, double dt_sample);

}  // namespace qrc
