#include <algorithm>

#include "doctest.h"
#include "qrc/ising.hpp"

using namespace qrc;

TEST_CASE("preset couplings") {
    IsingSpec hi1 = preset(IsingPreset::HI1);
    CHECK(hi1.n_sites == 4);
    CHECK(hi1.field == doctest::Approx(0.5));
    CHECK(hi1.couplings.size() == 6);
    for (auto& [ij, j] : hi1.couplings) CHECK(j == doctest::Approx(0.5));

    IsingSpec hi3 = preset(IsingPreset::HI3);
    CHECK(hi3.couplings.at({1, 2}) == doctest::Approx(0.35));
    CHECK(hi3.couplings.at({1, 3}) == doctest::Approx(0.40));
    CHECK(hi3.couplings.at({1, 4}) == doctest::Approx(0.45));
    CHECK(hi3.couplings.at({2, 3}) == doctest::Approx(0.50));
    CHECK(hi3.couplings.at({2, 4}) == doctest::Approx(0.55));
    CHECK(hi3.couplings.at({3, 4}) == doctest::Approx(0.60));

    IsingSpec hi4 = preset(IsingPreset::HI4);
    CHECK(hi4.couplings.at({3, 4}) == doctest::Approx(0.65));
    for (auto& [ij, j] : hi3.couplings)
        if (ij != std::pair<int, int>{3, 4}) CHECK(hi4.couplings.at(ij) == doctest::Approx(j));

    CHECK_THROWS(preset_from_name("HI5"));
    CHECK(preset_from_name("HI2") == IsingPreset::HI2);
}

TEST_CASE("build_ising structure") {
    IsingSpec single{1, 0.5, {}};
    CMatrix h1 = build_ising(single);
    CHECK(h1(0, 0).real() == doctest::Approx(0.5));
    CHECK(h1(1, 1).real() == doctest::Approx(-0.5));

    IsingSpec two{2, 0.0, {{{1, 2}, 1.0}}};
    auto eig = hermitian_eig(build_ising(two));
    CHECK(eig.eigenvalues(0) == doctest::Approx(-1));
    CHECK(eig.eigenvalues(1) == doctest::Approx(-1));
    CHECK(eig.eigenvalues(2) == doctest::Approx(1));
    CHECK(eig.eigenvalues(3) == doctest::Approx(1));

    CMatrix h2 = build_ising(preset(IsingPreset::HI2));
    CHECK(distinct_eigenvalue_count(hermitian_eig(h2).eigenvalues,
                                    degeneracy_tolerance(h2)) == 16);

    // all-real entries: X_i X_j and Z_i are real matrices
    CHECK(h2.imag().cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("spectrum invariant under site relabeling") {
    // relabel sites of the all-equal-coupling preset; the coupling map is
    // unchanged as a set, so the sorted spectrum must agree
    IsingSpec base = preset(IsingPreset::HI1);
    int perm[5] = {0, 3, 1, 4, 2};  // 1-based site permutation
    IsingSpec relabeled{base.n_sites, base.field, {}};
    for (auto& [ij, j] : base.couplings) {
        int a = perm[ij.first], b = perm[ij.second];
        relabeled.couplings[{std::min(a, b), std::max(a, b)}] = j;
    }
    RVector ev_a = hermitian_eig(build_ising(base)).eigenvalues;
    RVector ev_b = hermitian_eig(build_ising(relabeled)).eigenvalues;
    CHECK((ev_a - ev_b).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("random coupling ensembles") {
    RandomCouplingSampler s{0.25, 0.75, 42};
    IsingSpec a = sample_random(4, s);
    IsingSpec b = sample_random(4, s);
    CHECK(a.couplings.size() == 6);
    for (auto& [ij, j] : a.couplings) {
        CHECK(j >= 0.25);
        CHECK(j <= 0.75);
        CHECK(b.couplings.at(ij) == doctest::Approx(j));  // determinism
    }

    int distinct_pairs = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        IsingSpec u = sample_random(4, {0.25, 0.75, seed});
        IsingSpec v = sample_random(4, {0.25, 0.75, seed + 1});
        bool differs = false;
        for (auto& [ij, j] : u.couplings)
            if (std::abs(v.couplings.at(ij) - j) > 1e-12) differs = true;
        if (differs) ++distinct_pairs;
    }
    CHECK(distinct_pairs == 10);

    // d never exceeds the Hilbert dimension
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CMatrix h = build_ising(sample_random(3, {0.25, 0.75, seed}));
        CHECK(distinct_eigenvalue_count(hermitian_eig(h).eigenvalues,
                                        degeneracy_tolerance(h)) <= 8);
    }
}
