#include <benchmark/benchmark.h>

#include "qrc/ising.hpp"
#include "qrc/krylov.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/spectral.hpp"
#include "qrc/tasks.hpp"

namespace {

const qrc::HermitianEigensystem& hi4_eig() {
    static qrc::HermitianEigensystem eig =
        qrc::hermitian_eig(qrc::build_ising(qrc::preset(qrc::IsingPreset::HI4)));
    return eig;
}

void BM_ReservoirRun(benchmark::State& state) {
    const auto& eig = hi4_eig();
    long n_inputs = state.range(0);
    std::vector<double> inputs = qrc::uniform_series(n_inputs + 20, 7);
    qrc::ReservoirConfig rc;
    rc.clock_cycle = 10.0;
    rc.virtual_nodes = 30;
    for (int s = 1; s <= 4; ++s)
        rc.observables.push_back(qrc::pauli_embed(s, qrc::PauliAxis::Z, 4));
    qrc::SplitLengths splits{0, n_inputs, 10, 5};
    for (auto _ : state) {
        auto s = qrc::run(eig, inputs, rc, splits, 1);
        benchmark::DoNotOptimize(s.train.data());
    }
    state.SetItemsProcessed(state.iterations() * n_inputs);
}
BENCHMARK(BM_ReservoirRun)->Arg(100)->Arg(1000);

void BM_OperatorGrade(benchmark::State& state) {
    const auto& eig = hi4_eig();
    qrc::CMatrix z = qrc::pauli_embed(1, qrc::PauliAxis::Z, 4);
    double tol = qrc::degeneracy_tolerance(
        qrc::build_ising(qrc::preset(qrc::IsingPreset::HI4)));
    for (auto _ : state) {
        auto ts = qrc::operator_grade(eig, z, tol);
        benchmark::DoNotOptimize(ts.grade);
    }
}
BENCHMARK(BM_OperatorGrade);

void BM_Observability(benchmark::State& state) {
    const auto& eig = hi4_eig();
    std::vector<qrc::CMatrix> obs;
    for (int s = 1; s <= 4; ++s)
        obs.push_back(qrc::pauli_embed(s, qrc::PauliAxis::Z, 4));
    double tol = qrc::degeneracy_tolerance(
        qrc::build_ising(qrc::preset(qrc::IsingPreset::HI4)));
    std::vector<int> grades = qrc::operator_grades(eig, obs, tol);
    for (auto _ : state) {
        auto r = qrc::krylov_observability(eig, obs, 20.0, 30, grades);
        benchmark::DoNotOptimize(r.total);
    }
}
BENCHMARK(BM_Observability);

}  // namespace

BENCHMARK_MAIN();
