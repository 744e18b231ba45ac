#include "qrc/spectral.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <random>

namespace qrc {

namespace {

// Class index per eigenvalue, classes split where the sorted gap exceeds tol.
// Eigenvalues arrive sorted ascending from the eigensolver.
std::vector<int> eigenvalue_classes(const RVector& evals, double tol) {
    std::vector<int> cls(evals.size());
    int c = 0;
    cls[0] = 0;
    for (Eigen::Index i = 1; i < evals.size(); ++i) {
        if (evals(i) - evals(i - 1) > tol) ++c;
        cls[i] = c;
    }
    return cls;
}

int svd_rank(const CMatrix& m, double tol) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * s(0)) ++rank;
    return rank;
}

}  // namespace

StateGrade state_grade(const HermitianEigensystem& eig, const CVector& psi0, double tol) {
    auto cls = eigenvalue_classes(eig.eigenvalues, tol);
    int d = cls.back() + 1;
    CVector alpha = eig.eigenvectors.adjoint() * psi0;

    // |gamma_p| = (1/sqrt|J_p|) sum_{j in J_p} |alpha_j|^2; zero iff the
    // eigenspace carries no weight of psi0.
    std::vector<double> weight(d, 0.0);
    std::vector<int> card(d, 0);
    for (Eigen::Index j = 0; j < alpha.size(); ++j) {
        weight[cls[j]] += std::norm(alpha(j));
        ++card[cls[j]];
    }
    StateGrade out;
    out.d = d;
    out.gamma_norms.resize(d);
    for (int p = 0; p < d; ++p) {
        out.gamma_norms[p] = weight[p] / std::sqrt(double(card[p]));
        if (out.gamma_norms[p] <= tol) ++out.n_zero;
    }
    out.m = d - out.n_zero;
    return out;
}

TransitionSpectrum operator_grade(const HermitianEigensystem& eig, const CMatrix& op,
                                  double tol) {
    auto cls = eigenvalue_classes(eig.eigenvalues, tol);
    int d = cls.back() + 1;

    // Class representatives (mean within class).
    std::vector<double> rep(d, 0.0);
    std::vector<int> card(d, 0);
    for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
        rep[cls[j]] += eig.eigenvalues(j);
        ++card[cls[j]];
    }
    for (int p = 0; p < d; ++p) rep[p] /= card[p];

    // All d^2 class-pair frequencies, merged at 2*tol (differences of
    // non-degenerate eigenvalues may themselves coincide).
    struct Freq {
        double omega;
        int p, q;
    };
    std::vector<Freq> freqs;
    freqs.reserve(std::size_t(d) * d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) freqs.push_back({rep[p] - rep[q], p, q});
    std::sort(freqs.begin(), freqs.end(),
              [](const Freq& a, const Freq& b) { return a.omega < b.omega; });

    std::vector<int> freq_class(freqs.size());
    int n_omega = 1;
    freq_class[0] = 0;
    for (std::size_t i = 1; i < freqs.size(); ++i) {
        if (freqs[i].omega - freqs[i - 1].omega > 2 * tol) ++n_omega;
        freq_class[i] = n_omega - 1;
    }

    // ||sigma_P||^2 accumulated from the operator's eigenbasis elements.
    CMatrix tilde = eig.eigenvectors.adjoint() * op * eig.eigenvectors;
    std::vector<std::vector<int>> pair_to_fclass(d, std::vector<int>(d));
    std::vector<double> omega_rep(n_omega, 0.0);
    std::vector<int> omega_card(n_omega, 0);
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        pair_to_fclass[freqs[i].p][freqs[i].q] = freq_class[i];
        omega_rep[freq_class[i]] += freqs[i].omega;
        ++omega_card[freq_class[i]];
    }
    std::vector<double> sigma_sq(n_omega, 0.0);
    for (Eigen::Index m = 0; m < tilde.rows(); ++m)
        for (Eigen::Index n = 0; n < tilde.cols(); ++n)
            sigma_sq[pair_to_fclass[cls[m]][cls[n]]] += std::norm(tilde(m, n));

    TransitionSpectrum out;
    out.d = d;
    out.n_omega = n_omega;
    out.omegas.resize(n_omega);
    out.sigma_norms.resize(n_omega);
    double vanish_tol = 1e-9 * op.norm();
    for (int p = 0; p < n_omega; ++p) {
        out.omegas[p] = omega_rep[p] / omega_card[p];
        out.sigma_norms[p] = std::sqrt(sigma_sq[p]);
        if (out.sigma_norms[p] <= vanish_tol) ++out.n_zero;
    }
    out.grade = out.n_omega - out.n_zero;
    return out;
}

std::vector<std::pair<double, CMatrix>> sigma_decomposition(const HermitianEigensystem& eig,
                                                            const CMatrix& op, double tol) {
    auto spectrum = operator_grade(eig, op, tol);
    auto cls = eigenvalue_classes(eig.eigenvalues, tol);
    CMatrix tilde = eig.eigenvectors.adjoint() * op * eig.eigenvectors;

    // Assign each original index pair to the nearest frequency class.
    std::vector<CMatrix> blocks(spectrum.n_omega,
                                CMatrix::Zero(op.rows(), op.cols()));
    std::vector<double> sorted_omegas = spectrum.omegas;  // already ascending
    for (Eigen::Index m = 0; m < tilde.rows(); ++m) {
        for (Eigen::Index n = 0; n < tilde.cols(); ++n) {
            double w = eig.eigenvalues(m) - eig.eigenvalues(n);
            auto it = std::lower_bound(sorted_omegas.begin(), sorted_omegas.end(), w);
            int idx = int(it - sorted_omegas.begin());
            if (idx == int(sorted_omegas.size()) ||
                (idx > 0 && w - sorted_omegas[idx - 1] < sorted_omegas[idx] - w))
                --idx;
            blocks[idx](m, n) = tilde(m, n);
        }
    }
    double vanish_tol = 1e-9 * op.norm();
    std::vector<std::pair<double, CMatrix>> out;
    for (int p = 0; p < spectrum.n_omega; ++p) {
        if (blocks[p].norm() <= vanish_tol) continue;
        out.emplace_back(spectrum.omegas[p],
                         eig.eigenvectors * blocks[p] * eig.eigenvectors.adjoint());
    }
    return out;
}

int krylov_rank_oracle_state(const HermitianEigensystem& eig, const CVector& psi0,
                             double tol) {
    Eigen::Index dim = psi0.size();
    // Rescale the generator so the power columns stay conditioned.
    double scale = std::max(eig.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
    CVector scaled = (eig.eigenvalues / scale).cast<Complex>();
    CMatrix h = eig.eigenvectors * scaled.asDiagonal() * eig.eigenvectors.adjoint();
    CMatrix krylov(dim, dim);
    CVector v = psi0;
    for (Eigen::Index k = 0; k < dim; ++k) {
        krylov.col(k) = v;
        v = h * v;
        double n = v.norm();
        if (n > 0) v /= n;
    }
    return svd_rank(krylov, tol);
}

int krylov_rank_oracle_operator(const HermitianEigensystem& eig, const CMatrix& op,
                                double tol) {
    Eigen::Index dim = op.rows();
    Eigen::Index max_cols = dim * dim;

    // Span probed through time-evolved operators on a random grid: power
    // iterates of the commutator lose the slow frequencies to roundoff long
    // before the grade is reached, while {O(t_j)} spans the same space
    // (the generalized Vandermonde coefficient matrix is invertible for
    // distinct times).
    double min_gap = std::numeric_limits<double>::infinity();
    RVector evals = eig.eigenvalues;
    std::vector<double> omegas;
    omegas.reserve(std::size_t(dim) * dim);
    for (Eigen::Index m = 0; m < dim; ++m)
        for (Eigen::Index n = 0; n < dim; ++n) omegas.push_back(evals(m) - evals(n));
    std::sort(omegas.begin(), omegas.end());
    for (std::size_t i = 1; i < omegas.size(); ++i) {
        double gap = omegas[i] - omegas[i - 1];
        if (gap > 1e-9) min_gap = std::min(min_gap, gap);
    }
    double window = std::isfinite(min_gap) ? std::min(2 * M_PI / min_gap, 1e3) : 1e3;

    std::mt19937_64 rng(0x6f7261636cULL);
    std::uniform_real_distribution<double> unif(0.0, window);

    CMatrix tilde = eig.eigenvectors.adjoint() * op * eig.eigenvectors;
    CMatrix stacked(dim * dim, max_cols);
    int prev_rank = -1;
    int stall = 0;
    Eigen::Index cols = 0;
    for (Eigen::Index k = 0; k < max_cols; ++k) {
        double t = (k == 0) ? 0.0 : unif(rng);
        CMatrix evolved = tilde;
        for (Eigen::Index m = 0; m < dim; ++m)
            for (Eigen::Index n = 0; n < dim; ++n)
                evolved(m, n) *= std::exp(Complex(0, (evals(m) - evals(n)) * t));
        stacked.col(cols++) = Eigen::Map<const CVector>(evolved.data(), dim * dim);
        // Rank can only grow by one per column; stop once it stalls.
        if (cols % 16 == 0 || cols == max_cols) {
            int r = svd_rank(stacked.leftCols(cols), tol);
            if (r == prev_rank && r < cols - 8) ++stall; else stall = 0;
            prev_rank = r;
            if (stall >= 2) break;
        }
    }
    return svd_rank(stacked.leftCols(cols), tol);
}

}  // namespace qrc
