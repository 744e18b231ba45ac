// Transverse-field Ising reservoirs: named coupling presets, random-coupling
// ensembles and spectral statistics.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qrc/linalg.hpp"

namespace qrc {

struct IsingSpec {
    int n_sites = 4;
    double field = 0.5;
    // (i, j) with 1 <= i < j <= n_sites -> J_ij
    std::map<std::pair<int, int>, double> couplings;
};

enum class IsingPreset { HI1, HI2, HI3, HI4 };

IsingPreset preset_from_name(const std::string& name);
std::string preset_name(IsingPreset p);

/// The four fixed 4-site reservoirs (h = 0.5).
IsingSpec preset(IsingPreset which);

/// H = sum_{i<j} J_ij X_i X_j + h sum_i Z_i.
CMatrix build_ising(const IsingSpec& spec);

struct RandomCouplingSampler {
    double low = 0.25;
    double high = 0.75;
    std::uint64_t seed = 0;
};

/// All n(n-1)/2 couplings drawn i.i.d. uniform from [low, high].
/// Counter-based: coupling (i, j) depends only on (seed, i, j), so the
/// result is independent of enumeration order.
IsingSpec sample_random(int n_sites, const RandomCouplingSampler& sampler);

/// Number of pairwise distinct eigenvalues, via gap-splitting of the
/// sorted spectrum: two neighbors belong to the same class iff their gap
/// is <= tol.
int distinct_eigenvalue_count(const RVector& eigenvalues, double tol);

/// Default degeneracy tolerance for H: 1e-9 * max(1, ||H||_F).
double degeneracy_tolerance(const CMatrix& h);

}  // namespace qrc
