// Closed-form Krylov-space dimensions from spectral data: the state grade
// m = d - n1 and the operator grade M = N_omega - N1, together with
// brute-force numerical-rank oracles validating both.
#pragma once

#include "qrc/linalg.hpp"

namespace qrc {

struct StateGrade {
    int d = 0;            // distinct-eigenvalue classes
    int n_zero = 0;       // classes with vanishing overlap gamma_p
    int m = 0;            // m = d - n_zero
    std::vector<double> gamma_norms;  // |gamma_p| per class
};

struct TransitionSpectrum {
    int d = 0;
    int n_omega = 0;      // distinct transition frequencies
    int n_zero = 0;       // vanishing sigma_P blocks
    int grade = 0;        // M = n_omega - n_zero
    std::vector<double> omegas;       // one representative per class
    std::vector<double> sigma_norms;  // ||sigma_P||_F per class
};

/// Grade of Span{H^k |psi0>}: eigenvalues grouped into d classes at
/// tolerance tol; n_zero counts classes whose eigenspace carries no weight
/// of psi0.
StateGrade state_grade(const HermitianEigensystem& eig, const CVector& psi0, double tol);

/// Grade of Span{L^k(O)} with L = [H, .]: transition frequencies over the
/// d eigenvalue classes are merged at tolerance 2*tol; sigma_P blocks with
/// Frobenius norm <= 1e-9 ||O||_F count as vanishing.
TransitionSpectrum operator_grade(const HermitianEigensystem& eig, const CMatrix& op, double tol);

/// sigma_P matrices of the nonvanishing frequency classes, paired with
/// their frequencies. Reconstructs O(t) = sum_P e^{i w_P t} sigma_P.
std::vector<std::pair<double, CMatrix>> sigma_decomposition(
    const HermitianEigensystem& eig, const CMatrix& op, double tol);

/// SVD numerical rank of the Krylov matrix [psi0, H psi0, ..., H^{n-1} psi0].
int krylov_rank_oracle_state(const HermitianEigensystem& eig, const CVector& psi0,
                             double tol = 1e-8);

/// SVD numerical rank of the stacked vectorized set {L^k(O)}, with early
/// stop when the rank stalls.
int krylov_rank_oracle_operator(const HermitianEigensystem& eig, const CMatrix& op,
                                double tol = 1e-8);

}  // namespace qrc
