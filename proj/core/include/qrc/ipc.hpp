// Information processing capacity: enumeration of Legendre hyper-task
// targets, per-target capacities on the held-out block, per-order sums
// and the total IPC.
#pragma once

#include <ostream>

#include "qrc/reservoir.hpp"
#include "qrc/tasks.hpp"

namespace qrc {

struct IpcTarget {
    // (delay >= 1, degree >= 1) factors with pairwise distinct delays,
    // kept sorted by delay.
    std::vector<std::pair<int, int>> factors;
    int total_order() const {
        int sum = 0;
        for (auto& [m, k] : factors) sum += k;
        return sum;
    }
};

/// All multisets of (delay, degree) pairs with distinct delays, total order
/// in [1, max_order], delays in [1, max_delay]; no duplicates under
/// permutation.
std::vector<IpcTarget> enumerate_targets(int max_order, int max_delay);

/// Same, with a per-order delay window: delays for a target of total order
/// q are bounded by max_delay_per_order[q - 1].
std::vector<IpcTarget> enumerate_targets(const std::vector<int>& max_delay_per_order);

/// Elementwise product of Legendre evaluations at delayed inputs, aligned
/// so element i corresponds to global input index start + i.
RVector target_series(const IpcTarget& target, const std::vector<double>& u, long start,
                      long length);

struct IpcOptions {
    int max_order = 4;
    // Delay windows per order; defaults keep the target count tractable.
    std::vector<int> max_delay = {15, 15, 10, 7};
    // Capacities below the threshold are zeroed; < 0 means use the
    // finite-sample default 2 * N_R / n_test.
    double threshold = -1.0;
};

struct IpcResult {
    std::vector<double> per_order;  // IPC_1 .. IPC_max_order
    double total = 0.0;
    double threshold = 0.0;
    struct TargetRecord {
        IpcTarget target;
        double capacity_value = 0.0;  // post-threshold
    };
    std::vector<TargetRecord> table;
};

/// For each enumerated target, train the readout on the train block and
/// evaluate the capacity on the test block.
IpcResult compute_ipc(const StateMatrix& s, const std::vector<double>& u,
                      const IpcOptions& opts);

/// Per-target CSV (columns: order, delays, degrees, capacity).
void write_ipc_csv(std::ostream& os, const IpcResult& result);

}  // namespace qrc
