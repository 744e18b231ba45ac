#include "qrc/reservoir.hpp"

#include <random>

namespace qrc {

namespace {

// Re Tr(A B) without forming the product.
double trace_product_real(const CMatrix& a, const CMatrix& b) {
    return (a.transpose().cwiseProduct(b)).sum().real();
}

CVector encoded_qubit(double u) {
    CVector psi(2);
    psi << std::sqrt((1.0 - u) / 2.0), std::sqrt((1.0 + u) / 2.0);
    return psi;
}

}  // namespace

CMatrix encode(double u, const CMatrix& rho_prev, int n_sites) {
    if (std::abs(u) > 1.0)
        throw std::invalid_argument("encode: |u| > 1, rescale the input series");
    CVector psi = encoded_qubit(u);
    CMatrix qubit = psi * psi.adjoint();
    return kron(qubit, partial_trace_first_qubit(rho_prev, n_sites));
}

StepResult step(const CMatrix& rho_enc, const HermitianEigensystem& eig,
                const ReservoirConfig& cfg) {
    const int v = cfg.virtual_nodes;
    const int k = int(cfg.observables.size());
    const double tau = cfg.clock_cycle / v;

    StepResult out;
    out.readout_row.resize(v * k);
    for (int j = 0; j < v; ++j) {
        double t = double(j + 1) * tau;
        for (int kk = 0; kk < k; ++kk) {
            CMatrix heis = eig.evolve_operator(cfg.observables[kk], t);
            out.readout_row(j * k + kk) = trace_product_real(heis, rho_enc);
        }
    }
    CMatrix u_t = eig.unitary_at(cfg.clock_cycle);
    out.rho_next = u_t * rho_enc * u_t.adjoint();
    return out;
}

StateMatrix run(const HermitianEigensystem& eig, const std::vector<double>& inputs,
                const ReservoirConfig& cfg, const SplitLengths& splits, std::uint64_t seed) {
    const long needed = splits.required_inputs();
    if (long(inputs.size()) < needed)
        throw std::invalid_argument("run: input series too short");
    const int v = cfg.virtual_nodes;
    const int k = int(cfg.observables.size());
    const int n_r = v * k;
    const double tau = cfg.clock_cycle / v;

    // Heisenberg-picture observables at the sub-times, plus the full-cycle
    // propagator; measurements then cost O(dim^2) per node.
    std::vector<CMatrix> heis(std::size_t(v) * k);
    for (int j = 0; j < v; ++j)
        for (int kk = 0; kk < k; ++kk)
            heis[std::size_t(j) * k + kk] =
                eig.evolve_operator(cfg.observables[kk], double(j + 1) * tau);
    CMatrix u_t = eig.unitary_at(cfg.clock_cycle);
    CMatrix u_t_dag = u_t.adjoint();

    StateMatrix out;
    out.train.resize(splits.n_train, n_r);
    out.test.resize(splits.n_test, n_r);
    out.train_start = splits.n_init + splits.buffer;
    out.test_start = out.train_start + splits.n_train + splits.buffer;

    CMatrix rho = maximally_mixed(cfg.n_sites);
    for (long n = 0; n < needed; ++n) {
        CMatrix rho_enc = encode(inputs[std::size_t(n)], rho, cfg.n_sites);
        bool in_train = n >= out.train_start && n < out.train_start + splits.n_train;
        bool in_test = n >= out.test_start && n < out.test_start + splits.n_test;
        if (in_train || in_test) {
            RMatrix& block = in_train ? out.train : out.test;
            long row = in_train ? n - out.train_start : n - out.test_start;
            for (int idx = 0; idx < n_r; ++idx)
                block(row, idx) = trace_product_real(heis[std::size_t(idx)], rho_enc);
        }
        rho = u_t * rho_enc * u_t_dag;
    }

    if (cfg.noise_amplitude > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (long r = 0; r < splits.n_train; ++r)
            for (int c = 0; c < n_r; ++c) out.train(r, c) += cfg.noise_amplitude * gauss(rng);
        for (long r = 0; r < splits.n_test; ++r)
            for (int c = 0; c < n_r; ++c) out.test(r, c) += cfg.noise_amplitude * gauss(rng);
    }
    return out;
}

namespace {

RMatrix with_bias(const RMatrix& s) {
    RMatrix a(s.rows(), s.cols() + 1);
    a.leftCols(s.cols()) = s;
    a.col(s.cols()).setOnes();
    return a;
}

}  // namespace

ReadoutWeights train_readout(const RMatrix& s_train, const RMatrix& targets) {
    if (s_train.rows() != targets.rows())
        throw std::invalid_argument("train_readout: row mismatch");
    // Complete orthogonal decomposition: minimum-norm solution when the
    // normal matrix is rank deficient.
    Eigen::CompleteOrthogonalDecomposition<RMatrix> cod(with_bias(s_train));
    return {cod.solve(targets)};
}

RMatrix ReadoutWeights::predict(const RMatrix& s) const {
    return with_bias(s) * weights;
}

ReadoutSolver::ReadoutSolver(const RMatrix& s_train)
    : qr_(with_bias(s_train)), n_cols_(s_train.cols() + 1) {}

RVector ReadoutSolver::solve(const RVector& target) const { return qr_.solve(target); }

RVector ReadoutSolver::predict(const RMatrix& s, const RVector& weights) const {
    return s * weights.head(n_cols_ - 1) + RVector::Constant(s.rows(), weights(n_cols_ - 1));
}

double nrmse(const RVector& y, const RVector& y_target) {
    if (y.size() != y_target.size())
        throw std::invalid_argument("nrmse: length mismatch");
    double var = (y_target.array() - y_target.mean()).square().mean();
    if (var <= 0.0) throw std::invalid_argument("nrmse: constant target");
    double mse = (y - y_target).squaredNorm() / double(y.size());
    return std::sqrt(mse / var);
}

double capacity(const RVector& y, const RVector& y_target) {
    if (y.size() != y_target.size())
        throw std::invalid_argument("capacity: length mismatch");
    double my = y.mean(), mt = y_target.mean();
    auto yc = y.array() - my;
    auto tc = y_target.array() - mt;
    double var_y = yc.square().mean();
    double var_t = tc.square().mean();
    if (var_y <= 0.0 || var_t <= 0.0)
        throw std::invalid_argument("capacity: zero variance");
    double cov = (yc * tc).mean();
    return cov * cov / (var_y * var_t);
}

long long count_state_ops(long long k, long long n_inputs, long long v) {
    return (7 + k) * n_inputs * v;
}

void write_state_matrix_csv(std::ostream& os, const StateMatrix& s) {
    os << "input_index";
    for (Eigen::Index c = 0; c < s.train.cols(); ++c) os << ",node_" << c;
    os << "\n";
    auto dump = [&](const RMatrix& block, long start) {
        for (Eigen::Index r = 0; r < block.rows(); ++r) {
            os << start + r;
            for (Eigen::Index c = 0; c < block.cols(); ++c) os << "," << block(r, c);
            os << "\n";
        }
    };
    dump(s.train, s.train_start);
    dump(s.test, s.test_start);
}

}  // namespace qrc
