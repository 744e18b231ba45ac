#include "qrc/ising.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrc {

IsingPreset preset_from_name(const std::string& name) {
    if (name == "HI1") return IsingPreset::HI1;
    if (name == "HI2") return IsingPreset::HI2;
    if (name == "HI3") return IsingPreset::HI3;
    if (name == "HI4") return IsingPreset::HI4;
    throw std::invalid_argument("unknown Ising preset: " + name);
}

std::string preset_name(IsingPreset p) {
    switch (p) {
        case IsingPreset::HI1: return "HI1";
        case IsingPreset::HI2: return "HI2";
        case IsingPreset::HI3: return "HI3";
        case IsingPreset::HI4: return "HI4";
    }
    throw std::logic_error("preset_name: bad enum");
}

IsingSpec preset(IsingPreset which) {
    IsingSpec spec;
    spec.n_sites = 4;
    spec.field = 0.5;
    auto set = [&](double j12, double j13, double j14, double j23, double j24, double j34) {
        spec.couplings[{1, 2}] = j12;
        spec.couplings[{1, 3}] = j13;
        spec.couplings[{1, 4}] = j14;
        spec.couplings[{2, 3}] = j23;
        spec.couplings[{2, 4}] = j24;
        spec.couplings[{3, 4}] = j34;
    };
    switch (which) {
        case IsingPreset::HI1: set(0.50, 0.50, 0.50, 0.50, 0.50, 0.50); break;
        case IsingPreset::HI2: set(0.40, 0.50, 0.50, 0.50, 0.50, 0.50); break;
        case IsingPreset::HI3: set(0.35, 0.40, 0.45, 0.50, 0.55, 0.60); break;
        case IsingPreset::HI4: set(0.35, 0.40, 0.45, 0.50, 0.55, 0.65); break;
    }
    return spec;
}

CMatrix build_ising(const IsingSpec& spec) {
    Eigen::Index d = Eigen::Index(1) << spec.n_sites;
    CMatrix h = CMatrix::Zero(d, d);
    for (const auto& [pair, j] : spec.couplings) {
        auto [i, k] = pair;
        if (i < 1 || k <= i || k > spec.n_sites)
            throw std::invalid_argument("build_ising: bad coupling index");
        h += j * (pauli_embed(i, PauliAxis::X, spec.n_sites) *
                  pauli_embed(k, PauliAxis::X, spec.n_sites));
    }
    for (int i = 1; i <= spec.n_sites; ++i)
        h += spec.field * pauli_embed(i, PauliAxis::Z, spec.n_sites);
    return h;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

IsingSpec sample_random(int n_sites, const RandomCouplingSampler& sampler) {
    if (n_sites < 2)
        throw std::invalid_argument("sample_random: need at least 2 sites");
    if (!(sampler.low < sampler.high))
        throw std::invalid_argument("sample_random: low must be < high");
    IsingSpec spec;
    spec.n_sites = n_sites;
    spec.field = 0.5;
    std::uint64_t counter = 0;
    for (int i = 1; i <= n_sites; ++i) {
        for (int j = i + 1; j <= n_sites; ++j) {
            std::uint64_t bits = splitmix64(splitmix64(sampler.seed) ^ counter++);
            double u = double(bits >> 11) * 0x1.0p-53;  // [0, 1)
            spec.couplings[{i, j}] = sampler.low + u * (sampler.high - sampler.low);
        }
    }
    return spec;
}

int distinct_eigenvalue_count(const RVector& eigenvalues, double tol) {
    if (eigenvalues.size() == 0) return 0;
    std::vector<double> sorted(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
    std::sort(sorted.begin(), sorted.end());
    int d = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] > tol) ++d;
    return d;
}

double degeneracy_tolerance(const CMatrix& h) {
    return 1e-9 * std::max(1.0, h.norm());
}

}  // namespace qrc
