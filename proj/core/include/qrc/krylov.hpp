// Krylov-space measures: Lanczos state basis and spread complexity,
// Krylov expressivity over measurable spaces, Liouvillian operator basis
// and operator complexity, observability-space construction and Krylov
// observability with its operation-count model.
#pragma once

#include <cmath>
#include <numbers>

#include "qrc/linalg.hpp"
#include "qrc/spectral.hpp"

namespace qrc {

struct KrylovStateBasis {
    std::vector<CVector> vectors;  // orthonormal, vectors[0] = psi0
    int grade() const { return int(vectors.size()); }
};

/// Orthonormalize {psi0, H psi0, ...} with full reorthogonalization; stop
/// when the residual norm drops below tol.
KrylovStateBasis lanczos_state_basis(const HermitianEigensystem& eig, const CVector& psi0,
                                     double tol = 1e-8);

/// K_S(t) = sum_n (n+1) |<k_n|psi(t)>|^2, in [1, m].
double spread_complexity(const KrylovStateBasis& basis, const HermitianEigensystem& eig,
                         const CVector& psi0, double t);

/// |<psi0| e^{-iHt} |psi0>|.
double autocorrelation_fidelity(const HermitianEigensystem& eig, const CVector& psi0, double t);

struct ExpressivityParams {
    double threshold = 1.0 / std::numbers::sqrt2;  // 3 dB fall-off
};

/// Effective dimension of the space of evolved states sampled at
/// tau_i = (i+1) T/m, scored by thresholded consecutive fidelities.
/// grade <= 0 means: derive m from the spectral state grade.
double krylov_expressivity(const HermitianEigensystem& eig, const CVector& psi0, double horizon,
                           const ExpressivityParams& params = {}, int grade = 0);

/// [H, O].
CMatrix liouvillian_apply(const CMatrix& h, const CMatrix& op);

/// K_O(t) = sum_n (n+1) |beta_n(t)|^2 over the Liouvillian Krylov basis
/// (trace inner product).
double operator_complexity(const HermitianEigensystem& eig, const CMatrix& op, double t,
                           double tol = 1e-8);

struct OperatorBasisSet {
    std::vector<CMatrix> basis;      // orthonormal under the trace inner product
    std::vector<int> subspace_dims;  // dim(F~_k) per observable
    int total_dim() const { return int(basis.size()); }
};

/// Greedy sweep over times (outer) and observables (inner); an evolved
/// operator joins the basis when its relative projection residual exceeds
/// tol. Matches the union property dim(F) = sum dim(F~_k).
OperatorBasisSet build_observability_spaces(const HermitianEigensystem& eig,
                                            const std::vector<CMatrix>& observables,
                                            const std::vector<double>& time_grid,
                                            double tol = 1e-8);

/// Default time grid for build_observability_spaces: M_max uniform points
/// on (0, T_grid] with T_grid = 2 pi / min-gap(omega), capped at 1e3.
std::vector<double> observability_time_grid(const HermitianEigensystem& eig, int m_max);

struct ObservabilityResult {
    std::vector<double> kappa;  // per observable, in [1, R_k]
    double total = 0.0;         // O_K = sum kappa_k
};

/// kappa_k(T) = 1 + sum_j (1 - F(O_k(tau_j), O_k(tau_{j+1}))) with
/// tau_j = j T / M_k, j = 1..R_k, R_k = min(V, M_k).
ObservabilityResult krylov_observability(const HermitianEigensystem& eig,
                                         const std::vector<CMatrix>& observables,
                                         double horizon, int virtual_nodes,
                                         const std::vector<int>& grades);

/// Spectral grades M_k for a set of observables.
std::vector<int> operator_grades(const HermitianEigensystem& eig,
                                 const std::vector<CMatrix>& observables, double tol);

/// N_obs = VK(VK+3)/2.
long long count_obs_ops(long long v, long long k);

/// r = N_obs / N_state for a given input length.
double obs_to_state_ratio(long long v, long long k, long long n_inputs);

}  // namespace qrc
