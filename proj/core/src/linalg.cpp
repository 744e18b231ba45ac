#include "qrc/linalg.hpp"

#include <random>

namespace qrc {

CMatrix pauli(PauliAxis axis) {
    CMatrix m(2, 2);
    switch (axis) {
        case PauliAxis::X:
            m << 0, 1, 1, 0;
            break;
        case PauliAxis::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case PauliAxis::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

CMatrix identity2() { return CMatrix::Identity(2, 2); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix pauli_embed(int site, PauliAxis axis, int n_sites) {
    if (site < 1 || site > n_sites)
        throw std::invalid_argument("pauli_embed: site out of range");
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 1; k <= n_sites; ++k)
        out = kron(out, k == site ? pauli(axis) : identity2());
    return out;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    double scale = std::max(1.0, m.norm());
    return (m - m.adjoint()).norm() <= tol * scale;
}

HermitianEigensystem hermitian_eig(const CMatrix& h, double tol) {
    if (!is_hermitian(h, tol))
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix HermitianEigensystem::unitary_at(double t) const {
    CVector phases(dim());
    for (Eigen::Index j = 0; j < dim(); ++j)
        phases(j) = std::exp(Complex(0, -eigenvalues(j) * t));
    return eigenvectors * phases.asDiagonal() * eigenvectors.adjoint();
}

CVector HermitianEigensystem::evolve(const CVector& psi, double t) const {
    CVector coeffs = eigenvectors.adjoint() * psi;
    for (Eigen::Index j = 0; j < dim(); ++j)
        coeffs(j) *= std::exp(Complex(0, -eigenvalues(j) * t));
    return eigenvectors * coeffs;
}

CMatrix HermitianEigensystem::evolve_operator(const CMatrix& op, double t) const {
    CMatrix tilde = eigenvectors.adjoint() * op * eigenvectors;
    for (Eigen::Index m = 0; m < dim(); ++m)
        for (Eigen::Index n = 0; n < dim(); ++n)
            tilde(m, n) *= std::exp(Complex(0, (eigenvalues(m) - eigenvalues(n)) * t));
    return eigenvectors * tilde * eigenvectors.adjoint();
}

CMatrix partial_trace_first_qubit(const CMatrix& rho, int n_sites) {
    if (n_sites < 2)
        throw std::invalid_argument("partial_trace_first_qubit: need at least 2 qubits");
    Eigen::Index half = rho.rows() / 2;
    if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index(1) << n_sites))
        throw std::invalid_argument("partial_trace_first_qubit: dimension mismatch");
    return rho.topLeftCorner(half, half) + rho.bottomRightCorner(half, half);
}

double fidelity_pure(const CVector& a, const CVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("fidelity_pure: dimension mismatch");
    return std::abs(a.dot(b));
}

double operator_overlap(const CMatrix& a, const CMatrix& b) {
    double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("operator_overlap: zero-norm operand");
    return std::abs((a.adjoint() * b).trace()) / (na * nb);
}

CMatrix maximally_mixed(int n_sites) {
    Eigen::Index d = Eigen::Index(1) << n_sites;
    return CMatrix::Identity(d, d) / double(d);
}

CVector haar_random_state(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        double re = gauss(rng);
        double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    v /= v.norm();
    return v;
}

}  // namespace qrc
