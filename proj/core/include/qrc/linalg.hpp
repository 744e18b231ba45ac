// Dense complex linear algebra over small Hilbert spaces: tensor products,
// Pauli embeddings, cached Hermitian eigendecompositions, spectral matrix
// exponentials, partial traces and overlaps.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qrc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

enum class PauliAxis { X, Y, Z };

CMatrix pauli(PauliAxis axis);
CMatrix identity2();

/// Kronecker product A (x) B.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Single-site Pauli operator embedded into an n_sites-qubit register.
/// Site indices are 1-based; site 1 is the leftmost tensor factor.
CMatrix pauli_embed(int site, PauliAxis axis, int n_sites);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEigensystem {
    RVector eigenvalues;
    CMatrix eigenvectors;  // column j is |phi_j>

    Eigen::Index dim() const { return eigenvalues.size(); }

    /// U(t) = V diag(exp(-i e_j t)) V^dag. Exact for Hermitian generators.
    CMatrix unitary_at(double t) const;

    /// exp(-iHt)|psi>, evaluated through the spectral decomposition.
    CVector evolve(const CVector& psi, double t) const;

    /// Heisenberg-picture operator e^{iHt} O e^{-iHt}.
    CMatrix evolve_operator(const CMatrix& op, double t) const;
};

/// Diagonalize H. Throws std::invalid_argument if H is not Hermitian
/// within tol (relative to its Frobenius norm).
HermitianEigensystem hermitian_eig(const CMatrix& h, double tol = 1e-10);

/// Trace out the first (leftmost) qubit of a 2^n-dimensional operator.
CMatrix partial_trace_first_qubit(const CMatrix& rho, int n_sites);

/// |<a|b>| for normalized pure states.
double fidelity_pure(const CVector& a, const CVector& b);

/// |Tr(A^dag B)| / (||A||_F ||B||_F). Throws on a zero-norm operand.
double operator_overlap(const CMatrix& a, const CMatrix& b);

/// Maximally mixed state I / 2^n.
CMatrix maximally_mixed(int n_sites);

bool is_hermitian(const CMatrix& m, double tol = 1e-10);

/// Haar-random pure state, deterministic per seed.
CVector haar_random_state(Eigen::Index dim, std::uint64_t seed);

}  // namespace qrc
