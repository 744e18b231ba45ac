#include "qrc/krylov.hpp"

namespace qrc {

namespace {

double spectrum_tolerance(const HermitianEigensystem& eig) {
    // ||H||_F equals the 2-norm of the eigenvalue vector.
    return 1e-9 * std::max(1.0, eig.eigenvalues.norm());
}

CMatrix reconstruct(const HermitianEigensystem& eig) {
    CVector diag = eig.eigenvalues.cast<Complex>();
    return eig.eigenvectors * diag.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

KrylovStateBasis lanczos_state_basis(const HermitianEigensystem& eig, const CVector& psi0,
                                     double tol) {
    CMatrix h = reconstruct(eig);
    KrylovStateBasis basis;
    basis.vectors.push_back(psi0 / psi0.norm());
    while (Eigen::Index(basis.vectors.size()) < psi0.size()) {
        CVector cand = h * basis.vectors.back();
        double scale = cand.norm();
        if (scale == 0.0) break;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis.vectors) cand -= b.dot(cand) * b;
        if (cand.norm() < tol * scale) break;
        basis.vectors.push_back(cand / cand.norm());
    }
    return basis;
}

double spread_complexity(const KrylovStateBasis& basis, const HermitianEigensystem& eig,
                         const CVector& psi0, double t) {
    CVector psi_t = eig.evolve(psi0, t);
    double ks = 0.0;
    for (std::size_t n = 0; n < basis.vectors.size(); ++n)
        ks += double(n + 1) * std::norm(basis.vectors[n].dot(psi_t));
    return ks;
}

double autocorrelation_fidelity(const HermitianEigensystem& eig, const CVector& psi0,
                                double t) {
    return std::abs(psi0.dot(eig.evolve(psi0, t)));
}

double krylov_expressivity(const HermitianEigensystem& eig, const CVector& psi0,
                           double horizon, const ExpressivityParams& params, int grade) {
    if (horizon <= 0) throw std::invalid_argument("krylov_expressivity: horizon must be > 0");
    int m = grade > 0 ? grade : state_grade(eig, psi0, spectrum_tolerance(eig)).m;
    if (m < 1) throw std::invalid_argument("krylov_expressivity: grade < 1");
    if (m == 1) return 1.0;

    std::vector<CVector> states(m);
    for (int i = 0; i < m; ++i)
        states[i] = eig.evolve(psi0, double(i + 1) * horizon / m);

    const double lambda = params.threshold;
    double expressivity = 1.0;
    for (int i = 1; i < m; ++i) {
        double overlap = fidelity_pure(states[i - 1], states[i]);
        if (overlap < lambda)
            expressivity += 1.0;
        else
            expressivity += 1.0 - (overlap - lambda) / (1.0 - lambda);
    }
    return expressivity;
}

CMatrix liouvillian_apply(const CMatrix& h, const CMatrix& op) {
    if (h.rows() != op.rows() || h.cols() != op.cols())
        throw std::invalid_argument("liouvillian_apply: dimension mismatch");
    return h * op - op * h;
}

double operator_complexity(const HermitianEigensystem& eig, const CMatrix& op, double t,
                           double tol) {
    if (op.norm() == 0.0)
        throw std::invalid_argument("operator_complexity: zero operator");
    CMatrix h = reconstruct(eig);

    // Lanczos over {L^k(O)} with the trace inner product, full reorth.
    std::vector<CMatrix> basis;
    basis.push_back(op / op.norm());
    Eigen::Index max_dim = op.rows() * op.cols();
    while (Eigen::Index(basis.size()) < max_dim) {
        CMatrix cand = liouvillian_apply(h, basis.back());
        double scale = cand.norm();
        if (scale == 0.0) break;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis)
                cand -= (b.adjoint() * cand).trace() * b;
        if (cand.norm() < tol * scale) break;
        cand /= cand.norm();
        basis.push_back(cand);
    }

    CMatrix evolved = eig.evolve_operator(op, t) / op.norm();
    double ko = 0.0;
    for (std::size_t n = 0; n < basis.size(); ++n)
        ko += double(n + 1) * std::norm((basis[n].adjoint() * evolved).trace());
    return ko;
}

std::vector<double> observability_time_grid(const HermitianEigensystem& eig, int m_max) {
    std::vector<double> omegas;
    Eigen::Index dim = eig.dim();
    omegas.reserve(std::size_t(dim) * dim);
    for (Eigen::Index m = 0; m < dim; ++m)
        for (Eigen::Index n = 0; n < dim; ++n)
            omegas.push_back(eig.eigenvalues(m) - eig.eigenvalues(n));
    std::sort(omegas.begin(), omegas.end());
    double min_gap = std::numeric_limits<double>::infinity();
    double tol = spectrum_tolerance(eig);
    for (std::size_t i = 1; i < omegas.size(); ++i) {
        double gap = omegas[i] - omegas[i - 1];
        if (gap > 2 * tol) min_gap = std::min(min_gap, gap);
    }
    double t_grid = std::isfinite(min_gap) ? std::min(2 * M_PI / min_gap, 1e3) : 1.0;
    std::vector<double> grid(m_max);
    for (int i = 0; i < m_max; ++i) grid[i] = double(i + 1) * t_grid / m_max;
    return grid;
}

OperatorBasisSet build_observability_spaces(const HermitianEigensystem& eig,
                                            const std::vector<CMatrix>& observables,
                                            const std::vector<double>& time_grid,
                                            double tol) {
    if (observables.empty() || time_grid.empty())
        throw std::invalid_argument("build_observability_spaces: empty input");

    // Everything happens in the eigenbasis: the trace inner product is
    // invariant and evolution reduces to elementwise phases.
    Eigen::Index dim = eig.dim();
    std::vector<CMatrix> tilded;
    for (const auto& op : observables)
        tilded.push_back(eig.eigenvectors.adjoint() * op * eig.eigenvectors);

    OperatorBasisSet out;
    out.subspace_dims.assign(observables.size(), 0);
    for (double t : time_grid) {
        for (std::size_t k = 0; k < tilded.size(); ++k) {
            CMatrix cand = tilded[k];
            for (Eigen::Index m = 0; m < dim; ++m)
                for (Eigen::Index n = 0; n < dim; ++n)
                    cand(m, n) *= std::exp(Complex(0, (eig.eigenvalues(m) - eig.eigenvalues(n)) * t));
            double scale = cand.norm();
            if (scale == 0.0) continue;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : out.basis)
                    cand -= (b.adjoint() * cand).trace() * b;
            if (cand.norm() <= tol * scale) continue;  // already in F
            out.basis.push_back(cand / cand.norm());
            ++out.subspace_dims[k];
        }
    }
    return out;
}

std::vector<int> operator_grades(const HermitianEigensystem& eig,
                                 const std::vector<CMatrix>& observables, double tol) {
    std::vector<int> grades;
    for (const auto& op : observables)
        grades.push_back(operator_grade(eig, op, tol).grade);
    return grades;
}

ObservabilityResult krylov_observability(const HermitianEigensystem& eig,
                                         const std::vector<CMatrix>& observables,
                                         double horizon, int virtual_nodes,
                                         const std::vector<int>& grades) {
    if (grades.size() != observables.size())
        throw std::invalid_argument("krylov_observability: grades/observables mismatch");
    Eigen::Index dim = eig.dim();
    ObservabilityResult out;
    for (std::size_t k = 0; k < observables.size(); ++k) {
        int grade = grades[k];
        int r = std::min(virtual_nodes, grade);
        double tau = horizon / grade;
        // Consecutive samples are spaced by the same tau, and evolution is a
        // one-parameter group, so every consecutive overlap equals F(tau).
        CMatrix tilde = eig.eigenvectors.adjoint() * observables[k] * eig.eigenvectors;
        Complex inner(0, 0);
        double norm_sq = 0.0;
        for (Eigen::Index m = 0; m < dim; ++m) {
            for (Eigen::Index n = 0; n < dim; ++n) {
                double w = eig.eigenvalues(m) - eig.eigenvalues(n);
                double a = std::norm(tilde(m, n));
                inner += a * std::exp(Complex(0, w * tau));
                norm_sq += a;
            }
        }
        double overlap = norm_sq > 0 ? std::abs(inner) / norm_sq : 1.0;
        double kappa = 1.0 + double(r - 1) * (1.0 - overlap);
        out.kappa.push_back(kappa);
        out.total += kappa;
    }
    return out;
}

long long count_obs_ops(long long v, long long k) {
    long long vk = v * k;
    return vk * (vk + 3) / 2;
}

double obs_to_state_ratio(long long v, long long k, long long n_inputs) {
    long long n_state = (7 + k) * n_inputs * v;
    return double(count_obs_ops(v, k)) / double(n_state);
}

}  // namespace qrc
