// Experiment orchestration: named recipes over (T, V) grids, ensemble
// runs, CSV emission, curve smoothing, saturation detection and
// correlation reports.
#pragma once

#include <iostream>
#include <optional>
#include <string>

#include "qrc/ipc.hpp"
#include "qrc/ising.hpp"
#include "qrc/krylov.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/tasks.hpp"

namespace qrc {

enum class ObservableSelection { FirstSite, AllSites, Explicit };

struct ExperimentConfig {
    std::string hamiltonian = "HI4";  // preset name or "random"
    int n_sites = 4;
    std::vector<std::uint64_t> coupling_seeds = {0};  // random ensembles
    std::string task = "measures";  // measures | lorenz | ipc | sweep
    std::vector<double> t_grid;
    std::vector<int> v_grid = {30};
    ObservableSelection observable_selection = ObservableSelection::FirstSite;
    std::vector<int> observable_sites;  // Explicit selection, 1-based
    SplitLengths splits;
    double noise_amplitude = 1e-5;
    IpcOptions ipc;
    int seed_states = 20;       // Haar states averaged in F, K_S, E_K
    std::uint64_t run_seed = 0;  // measurement-noise seed
    std::string output_dir;     // empty: no CSV files written
    int parallelism = 1;

    void validate() const;  // throws std::invalid_argument naming the field
};

struct GridRecord {
    std::string hamiltonian;
    std::uint64_t coupling_seed = 0;
    double clock_cycle = 0.0;
    int virtual_nodes = 0;
    double nrmse_lxx = std::numeric_limits<double>::quiet_NaN();
    double nrmse_lxz = std::numeric_limits<double>::quiet_NaN();
    double ipc_total = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> ipc_per_order;
    double expressivity = std::numeric_limits<double>::quiet_NaN();
    double observability = std::numeric_limits<double>::quiet_NaN();
    double spread_mean = std::numeric_limits<double>::quiet_NaN();
    double fidelity_mean = std::numeric_limits<double>::quiet_NaN();
};

struct SweepResult {
    std::vector<GridRecord> records;  // grid order: seed, then T, then V
};

/// Run the configured experiment over the full grid. Deterministic under
/// fixed seeds; emits one CSV per experiment when output_dir is set.
SweepResult run_experiment(const ExperimentConfig& cfg);

/// First-order Savitzky-Golay smoothing (local least-squares line), with
/// window truncation at the endpoints.
std::vector<double> smooth_curve(const std::vector<double>& values, int window, int order = 1);

/// Pearson correlation of two flattened grids.
double correlation_report(const std::vector<double>& grid_a, const std::vector<double>& grid_b);

/// Smallest T beyond which the curve stays within rel_tol of its final
/// plateau value; nullopt for a non-saturating curve.
std::optional<double> saturation_detect(const std::vector<double>& ts,
                                        const std::vector<double>& values,
                                        double rel_tol = 0.05);

/// Observables (Pauli-Z) matching the configured selection.
std::vector<CMatrix> select_observables(const ExperimentConfig& cfg);

/// Human-readable key=value config; '#' starts a comment.
ExperimentConfig load_config(std::istream& is);
bool apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

std::uint64_t config_hash(const ExperimentConfig& cfg);
void write_sweep_csv(std::ostream& os, const ExperimentConfig& cfg, const SweepResult& result);

}  // namespace qrc
