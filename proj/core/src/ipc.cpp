#include "qrc/ipc.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrc {

namespace {

void enumerate_rec(int max_order, int max_delay, int min_delay, int order_left,
                   IpcTarget& current, std::vector<IpcTarget>& out) {
    for (int delay = min_delay; delay <= max_delay; ++delay) {
        for (int degree = 1; degree <= order_left; ++degree) {
            current.factors.emplace_back(delay, degree);
            out.push_back(current);
            if (order_left - degree >= 1)
                enumerate_rec(max_order, max_delay, delay + 1, order_left - degree, current,
                              out);
            current.factors.pop_back();
        }
    }
}

}  // namespace

std::vector<IpcTarget> enumerate_targets(int max_order, int max_delay) {
    if (max_delay < 1) throw std::invalid_argument("enumerate_targets: max_delay < 1");
    if (max_order < 1 || max_order > 4)
        throw std::invalid_argument("enumerate_targets: max_order must be in [1, 4]");
    std::vector<IpcTarget> out;
    IpcTarget current;
    enumerate_rec(max_order, max_delay, 1, max_order, current, out);
    return out;
}

std::vector<IpcTarget> enumerate_targets(const std::vector<int>& max_delay_per_order) {
    int max_order = int(max_delay_per_order.size());
    int widest = *std::max_element(max_delay_per_order.begin(), max_delay_per_order.end());
    std::vector<IpcTarget> all = enumerate_targets(max_order, widest);
    std::vector<IpcTarget> out;
    for (auto& t : all) {
        int window = max_delay_per_order[std::size_t(t.total_order() - 1)];
        bool ok = true;
        for (auto& [m, k] : t.factors)
            if (m > window) ok = false;
        if (ok) out.push_back(std::move(t));
    }
    return out;
}

RVector target_series(const IpcTarget& target, const std::vector<double>& u, long start,
                      long length) {
    for (auto& [m, k] : target.factors)
        if (start - m < 0) throw std::invalid_argument("target_series: delay exceeds start");
    if (start + length > long(u.size()))
        throw std::invalid_argument("target_series: series too short");
    RVector out = RVector::Ones(length);
    for (auto& [m, k] : target.factors)
        for (long i = 0; i < length; ++i)
            out(i) *= legendre(k, u[std::size_t(start + i - m)]);
    return out;
}

IpcResult compute_ipc(const StateMatrix& s, const std::vector<double>& u,
                      const IpcOptions& opts) {
    if (int(opts.max_delay.size()) < opts.max_order)
        throw std::invalid_argument("compute_ipc: missing delay window for some order");
    const long n_train = s.train.rows();
    const long n_test = s.test.rows();
    const int n_r = int(s.train.cols());

    IpcResult result;
    result.threshold = opts.threshold >= 0 ? opts.threshold : 2.0 * n_r / double(n_test);
    result.per_order.assign(std::size_t(opts.max_order), 0.0);

    std::vector<int> windows(opts.max_delay.begin(),
                             opts.max_delay.begin() + opts.max_order);
    std::vector<IpcTarget> targets = enumerate_targets(windows);

    ReadoutSolver solver(s.train);
    for (const auto& target : targets) {
        RVector y_train = target_series(target, u, s.train_start, n_train);
        RVector y_test = target_series(target, u, s.test_start, n_test);
        RVector w = solver.solve(y_train);
        RVector pred = solver.predict(s.test, w);
        double c;
        try {
            c = capacity(pred, y_test);
        } catch (const std::invalid_argument&) {
            c = 0.0;  // degenerate prediction or target on this block
        }
        if (c < result.threshold) c = 0.0;
        result.per_order[std::size_t(target.total_order() - 1)] += c;
        result.table.push_back({target, c});
    }
    for (double v : result.per_order) result.total += v;
    return result;
}

void write_ipc_csv(std::ostream& os, const IpcResult& result) {
    os << "order,delays,degrees,capacity\n";
    for (const auto& rec : result.table) {
        os << rec.target.total_order() << ",";
        for (std::size_t i = 0; i < rec.target.factors.size(); ++i)
            os << (i ? ";" : "") << rec.target.factors[i].first;
        os << ",";
        for (std::size_t i = 0; i < rec.target.factors.size(); ++i)
            os << (i ? ";" : "") << rec.target.factors[i].second;
        os << "," << rec.capacity_value << "\n";
    }
}

}  // namespace qrc
