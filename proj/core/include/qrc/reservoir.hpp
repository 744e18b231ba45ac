// The quantum reservoir pipeline: input encoding, multiplexed evolution
// and measurement, state-matrix assembly with noise regularization, linear
// readout training and error metrics.
#pragma once

#include <cstdint>
#include <ostream>

#include "qrc/linalg.hpp"

namespace qrc {

struct ReservoirConfig {
    double clock_cycle = 1.0;             // T
    int virtual_nodes = 30;               // V
    std::vector<CMatrix> observables;     // the measured Z_k set, size K
    double noise_amplitude = 1e-5;        // eta
    int n_sites = 4;
};

struct SplitLengths {
    long n_init = 10000;
    long n_train = 25000;
    long n_test = 5000;
    long buffer = 100;

    long required_inputs() const { return n_init + n_train + 2 * buffer + n_test; }
};

/// Measured expectation values; rows follow the input series with the
/// initialization and buffer segments dropped.
struct StateMatrix {
    RMatrix train;      // n_train x N_R
    RMatrix test;       // n_test x N_R
    long train_start = 0;  // global input index of the first train row
    long test_start = 0;
};

/// Encode u into the first qubit: |Psi> = sqrt((1-u)/2)|0> + sqrt((1+u)/2)|1>,
/// rho_enc = |Psi><Psi| (x) Tr_1(rho_prev). The first-qubit marginal has
/// <Z_1> = -u.
CMatrix encode(double u, const CMatrix& rho_prev, int n_sites);

/// One clock cycle: evolve rho_enc, reading out <O_k> at the V sub-times
/// (j+1) T/V. Row layout is observable-major inside each virtual-node
/// block: row[(j*K)+k]. Returns the state at time T.
struct StepResult {
    CMatrix rho_next;
    RVector readout_row;  // length V*K
};
StepResult step(const CMatrix& rho_enc, const HermitianEigensystem& eig,
                const ReservoirConfig& cfg);

/// Drive the reservoir through the full series and assemble the noisy
/// state matrix. Initial state is maximally mixed; the washout erases it.
StateMatrix run(const HermitianEigensystem& eig, const std::vector<double>& inputs,
                const ReservoirConfig& cfg, const SplitLengths& splits, std::uint64_t seed);

/// Least-squares readout; a bias column of ones is appended before solving.
struct ReadoutWeights {
    RMatrix weights;  // (N_R + 1) x n_targets; last row is the bias
    RMatrix predict(const RMatrix& s) const;
};
ReadoutWeights train_readout(const RMatrix& s_train, const RMatrix& targets);

/// Caches the decomposition of the bias-augmented design matrix so that
/// many targets (IPC hyper-tasks) can be trained against one state matrix.
class ReadoutSolver {
  public:
    explicit ReadoutSolver(const RMatrix& s_train);
    RVector solve(const RVector& target) const;
    RVector predict(const RMatrix& s, const RVector& weights) const;

  private:
    Eigen::CompleteOrthogonalDecomposition<RMatrix> qr_;
    Eigen::Index n_cols_;
};

/// NRMSE = sqrt(mean((Y - Y_targ)^2) / var(Y_targ)).
double nrmse(const RVector& y, const RVector& y_target);

/// Squared Pearson correlation cov^2 / (var var), so NRMSE = sqrt(1 - C)
/// holds exactly for the least-squares-optimal readout.
double capacity(const RVector& y, const RVector& y_target);

/// N_state = (7 + K) N_u V.
long long count_state_ops(long long k, long long n_inputs, long long v);

/// CSV export (header: input_index, node_0 ... node_{N_R-1}).
void write_state_matrix_csv(std::ostream& os, const StateMatrix& s);

}  // namespace qrc
