#include "qrc/tasks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qrc {

namespace {

std::array<double, 3> lorenz_rhs(const LorenzParams& p, const std::array<double, 3>& s) {
    return {p.a * (s[1] - s[0]), s[0] * (p.b - s[2]) - s[1], s[0] * s[1] - p.c * s[2]};
}

std::array<double, 3> rk4_step(const LorenzParams& p, const std::array<double, 3>& s,
                               double dt) {
    auto add = [](const std::array<double, 3>& a, const std::array<double, 3>& b, double f) {
        return std::array<double, 3>{a[0] + f * b[0], a[1] + f * b[1], a[2] + f * b[2]};
    };
    auto k1 = lorenz_rhs(p, s);
    auto k2 = lorenz_rhs(p, add(s, k1, dt / 2));
    auto k3 = lorenz_rhs(p, add(s, k2, dt / 2));
    auto k4 = lorenz_rhs(p, add(s, k3, dt));
    std::array<double, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = s[i] + dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

}  // namespace

LorenzSeries integrate_lorenz(const LorenzParams& params, double x0, double y0, double z0,
                              long n_samples, long discard) {
    if (n_samples < 1) throw std::invalid_argument("integrate_lorenz: n_samples < 1");
    long stride = std::lround(params.dt_sample / params.dt_integration);
    if (stride < 1 || std::abs(stride * params.dt_integration - params.dt_sample) > 1e-12)
        throw std::invalid_argument("integrate_lorenz: dt_sample not a multiple of dt_integration");

    LorenzSeries out;
    out.x.reserve(n_samples);
    out.y.reserve(n_samples);
    out.z.reserve(n_samples);
    std::array<double, 3> s{x0, y0, z0};
    for (long n = 0; n < discard + n_samples; ++n) {
        if (n >= discard) {
            out.x.push_back(s[0]);
            out.y.push_back(s[1]);
            out.z.push_back(s[2]);
        }
        for (long k = 0; k < stride; ++k) s = rk4_step(params, s, params.dt_integration);
    }
    return out;
}

TaskData make_task(const LorenzSeries& series, const TaskSpec& spec,
                   const SplitLengths& splits) {
    long lookahead = spec.kind == TaskKind::LXX ? spec.lookahead : 0;
    long needed = splits.required_inputs() + lookahead;
    if (long(series.x.size()) < needed)
        throw std::invalid_argument("make_task: series too short");

    long train_start = splits.n_init + splits.buffer;
    double lo = series.x[std::size_t(train_start)], hi = lo;
    for (long n = train_start; n < train_start + splits.n_train; ++n) {
        lo = std::min(lo, series.x[std::size_t(n)]);
        hi = std::max(hi, series.x[std::size_t(n)]);
    }
    if (!(hi > lo)) throw std::invalid_argument("make_task: degenerate series");

    TaskData out;
    long len = long(series.x.size()) - lookahead;
    out.inputs.resize(std::size_t(len));
    out.targets.resize(std::size_t(len));
    for (long n = 0; n < len; ++n) {
        double u = -1.0 + 2.0 * (series.x[std::size_t(n)] - lo) / (hi - lo);
        out.inputs[std::size_t(n)] = std::clamp(u, -1.0, 1.0);
        out.targets[std::size_t(n)] = spec.kind == TaskKind::LXX
                                          ? series.x[std::size_t(n + lookahead)]
                                          : series.z[std::size_t(n)];
    }
    return out;
}

std::vector<double> uniform_series(long n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("uniform_series: n < 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& u : out) u = unif(rng);
    return out;
}

double legendre(int degree, double x) {
    if (degree < 0) throw std::invalid_argument("legendre: negative degree");
    if (degree == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int n = 1; n < degree; ++n) {
        double next = ((2 * n + 1) * x * cur - n * prev) / (n + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

void write_lorenz_csv(std::ostream& os, const LorenzSeries& series, double dt_sample) {
    os << "t,x,y,z\n";
    for (std::size_t n = 0; n < series.x.size(); ++n)
        os << double(n) * dt_sample << "," << series.x[n] << "," << series.y[n] << ","
           << series.z[n] << "\n";
}

}  // namespace qrc
