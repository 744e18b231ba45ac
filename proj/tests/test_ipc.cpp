#include <random>

#include "doctest.h"
#include "qrc/ipc.hpp"
#include "qrc/tasks.hpp"

using namespace qrc;

TEST_CASE("enumerate_targets counts") {
    // pure-linear triples with distinct delays out of 15
    auto order3 = enumerate_targets(3, 15);
    long triples = 0;
    for (const auto& t : order3)
        if (t.factors.size() == 3) {
            bool all_linear = true;
            for (auto& [m, k] : t.factors) all_linear &= (k == 1);
            if (all_linear) ++triples;
        }
    CHECK(triples == 455);

    CHECK(enumerate_targets(1, 10).size() == 10);

    // orders 1-2 with window 3: 3 linear + 3 quadratic + 3 linear pairs
    CHECK(enumerate_targets(2, 3).size() == 9);

    // no duplicate multisets
    auto all = enumerate_targets(4, 5);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK(all[i].factors != all[j].factors);
}

TEST_CASE("target_series") {
    std::vector<double> u = uniform_series(50, 4);

    IpcTarget shift{{{1, 1}}};
    RVector y = target_series(shift, u, 10, 20);
    for (long i = 0; i < 20; ++i) CHECK(y(i) == doctest::Approx(u[std::size_t(9 + i)]));

    IpcTarget quad{{{2, 2}}};
    std::vector<double> ones(50, 1.0);
    RVector yq = target_series(quad, ones, 10, 20);
    for (long i = 0; i < 20; ++i) CHECK(yq(i) == doctest::Approx(1.0));

    IpcTarget pair{{{1, 1}, {2, 1}}};
    RVector yp = target_series(pair, u, 10, 20);
    for (long i = 0; i < 20; ++i)
        CHECK(yp(i) == doctest::Approx(u[std::size_t(9 + i)] * u[std::size_t(8 + i)]));
}

namespace {

// synthetic reservoir: columns are exact delayed copies of the input
StateMatrix delay_line_matrix(const std::vector<double>& u, int depth,
                              const SplitLengths& splits) {
    StateMatrix s;
    s.train_start = splits.n_init + splits.buffer;
    s.test_start = s.train_start + splits.n_train + splits.buffer;
    s.train.resize(splits.n_train, depth);
    s.test.resize(splits.n_test, depth);
    for (long r = 0; r < splits.n_train; ++r)
        for (int d = 1; d <= depth; ++d)
            s.train(r, d - 1) = u[std::size_t(s.train_start + r - d)];
    for (long r = 0; r < splits.n_test; ++r)
        for (int d = 1; d <= depth; ++d)
            s.test(r, d - 1) = u[std::size_t(s.test_start + r - d)];
    return s;
}

}  // namespace

TEST_CASE("compute_ipc on a synthetic delay line") {
    SplitLengths splits{50, 2000, 500, 10};
    std::vector<double> u = uniform_series(splits.required_inputs(), 12);
    const int depth = 6;
    StateMatrix s = delay_line_matrix(u, depth, splits);

    IpcOptions opts;
    opts.max_order = 2;
    opts.max_delay = {10, 10};
    IpcResult r = compute_ipc(s, u, opts);

    CHECK(r.per_order[0] == doctest::Approx(double(depth)).epsilon(0.05));
    CHECK(r.per_order[1] <= 0.5);
    CHECK(r.total <= depth + 1 + 1e-9);
    CHECK(r.total == doctest::Approx(r.per_order[0] + r.per_order[1]));
    for (const auto& rec : r.table) {
        CHECK(rec.capacity_value >= 0.0);
        CHECK(rec.capacity_value <= 1.0 + 1e-12);
    }
}

TEST_CASE("compute_ipc on noise stays near zero") {
    SplitLengths splits{10, 1500, 400, 5};
    std::vector<double> u = uniform_series(splits.required_inputs(), 13);
    StateMatrix s;
    s.train_start = splits.n_init + splits.buffer;
    s.test_start = s.train_start + splits.n_train + splits.buffer;
    std::mt19937_64 rng(77);
    std::normal_distribution<double> g;
    s.train.resize(splits.n_train, 5);
    s.test.resize(splits.n_test, 5);
    for (long r = 0; r < s.train.rows(); ++r)
        for (int c = 0; c < 5; ++c) s.train(r, c) = g(rng);
    for (long r = 0; r < s.test.rows(); ++r)
        for (int c = 0; c < 5; ++c) s.test(r, c) = g(rng);

    IpcOptions opts;
    opts.max_order = 2;
    opts.max_delay = {8, 8};
    opts.threshold = 0.01;
    IpcResult r = compute_ipc(s, u, opts);
    CHECK(r.total <= 0.05 * double(r.table.size()) * 0.01 * 100);
    CHECK(r.total <= 6.0);  // N_R + 1 bound with room to spare
}

TEST_CASE("ipc monotone in the delay window") {
    SplitLengths splits{20, 1200, 300, 10};
    std::vector<double> u = uniform_series(splits.required_inputs(), 21);
    StateMatrix s = delay_line_matrix(u, 4, splits);

    IpcOptions narrow, wide;
    narrow.max_order = wide.max_order = 2;
    narrow.max_delay = {4, 4};
    wide.max_delay = {9, 9};
    double lo = compute_ipc(s, u, narrow).total;
    double hi = compute_ipc(s, u, wide).total;
    CHECK(hi >= lo - 1e-9);
}
