#include "qrc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace qrc {

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
    if (t_grid.empty()) fail("t_grid is empty");
    for (double t : t_grid)
        if (!(t > 0)) fail("t_grid contains a non-positive clock cycle");
    if (v_grid.empty()) fail("v_grid is empty");
    for (int v : v_grid)
        if (v < 1) fail("v_grid contains virtual_nodes < 1");
    if (n_sites < 1) fail("n_sites < 1");
    if (task != "measures" && task != "lorenz" && task != "ipc" && task != "sweep")
        fail("task must be one of measures|lorenz|ipc|sweep");
    if (hamiltonian == "random" && coupling_seeds.empty()) fail("coupling_seeds is empty");
    if (observable_selection == ObservableSelection::Explicit) {
        if (observable_sites.empty()) fail("observable_sites is empty");
        for (int s : observable_sites)
            if (s < 1 || s > n_sites) fail("observable_sites entry out of range");
    }
    if (noise_amplitude < 0) fail("noise_amplitude < 0");
    if (seed_states < 1) fail("seed_states < 1");
    if (parallelism < 1) fail("parallelism < 1");
}

std::vector<CMatrix> select_observables(const ExperimentConfig& cfg) {
    std::vector<int> sites;
    switch (cfg.observable_selection) {
        case ObservableSelection::FirstSite: sites = {1}; break;
        case ObservableSelection::AllSites:
            for (int i = 1; i <= cfg.n_sites; ++i) sites.push_back(i);
            break;
        case ObservableSelection::Explicit: sites = cfg.observable_sites; break;
    }
    std::vector<CMatrix> out;
    for (int s : sites) out.push_back(pauli_embed(s, PauliAxis::Z, cfg.n_sites));
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2);
    return a;
}

struct HamiltonianContext {
    std::string label;
    std::uint64_t coupling_seed = 0;
    HermitianEigensystem eig;
    std::vector<CMatrix> observables;
    // Haar seed states with their Krylov bases and spectral grades.
    std::vector<CVector> seed_states;
    std::vector<KrylovStateBasis> bases;
    std::vector<int> state_grades;
};

HamiltonianContext make_context(const ExperimentConfig& cfg, std::uint64_t coupling_seed,
                                bool need_state_measures) {
    HamiltonianContext ctx;
    ctx.coupling_seed = coupling_seed;
    IsingSpec spec;
    if (cfg.hamiltonian == "random") {
        spec = sample_random(cfg.n_sites, {0.25, 0.75, coupling_seed});
        ctx.label = "random_" + std::to_string(coupling_seed);
    } else {
        spec = preset(preset_from_name(cfg.hamiltonian));
        ctx.label = cfg.hamiltonian;
    }
    CMatrix h = build_ising(spec);
    double tol = degeneracy_tolerance(h);
    ctx.eig = hermitian_eig(h);

    ExperimentConfig obs_cfg = cfg;
    obs_cfg.n_sites = spec.n_sites;
    ctx.observables = select_observables(obs_cfg);

    if (need_state_measures) {
        for (int i = 0; i < cfg.seed_states; ++i) {
            CVector psi = haar_random_state(ctx.eig.dim(), std::uint64_t(i));
            ctx.seed_states.push_back(psi);
            ctx.bases.push_back(lanczos_state_basis(ctx.eig, psi));
            ctx.state_grades.push_back(state_grade(ctx.eig, psi, tol).m);
        }
    }
    return ctx;
}

void run_grid(std::size_t n_points, int parallelism,
              const std::function<void(std::size_t)>& work) {
    if (parallelism <= 1) {
        for (std::size_t i = 0; i < n_points; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n_points; i = next.fetch_add(1)) work(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < parallelism; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

SweepResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const bool want_lorenz = cfg.task == "lorenz" || cfg.task == "sweep";
    const bool want_ipc = cfg.task == "ipc" || cfg.task == "sweep";
    const bool want_measures = cfg.task == "measures" || cfg.task == "sweep";

    // Shared inputs across the whole grid.
    TaskData lxx, lxz;
    if (want_lorenz) {
        long n_samples = cfg.splits.required_inputs() + 5;
        LorenzSeries series = integrate_lorenz({}, 1.0, 1.0, 1.0, n_samples);
        lxx = make_task(series, {TaskKind::LXX, 5}, cfg.splits);
        lxz = make_task(series, {TaskKind::LXZ, 0}, cfg.splits);
    }
    std::vector<double> uniform_inputs;
    if (want_ipc)
        uniform_inputs = uniform_series(cfg.splits.required_inputs(),
                                        mix(cfg.run_seed, 0x75ULL));

    std::vector<std::uint64_t> seeds =
        cfg.hamiltonian == "random" ? cfg.coupling_seeds : std::vector<std::uint64_t>{0};

    SweepResult result;
    result.records.resize(seeds.size() * cfg.t_grid.size() * cfg.v_grid.size());

    for (std::size_t si = 0; si < seeds.size(); ++si) {
        HamiltonianContext ctx = make_context(cfg, seeds[si], want_measures);

        std::size_t points = cfg.t_grid.size() * cfg.v_grid.size();
        run_grid(points, cfg.parallelism, [&](std::size_t p) {
            std::size_t ti = p / cfg.v_grid.size();
            std::size_t vi = p % cfg.v_grid.size();
            double t = cfg.t_grid[ti];
            int v = cfg.v_grid[vi];

            GridRecord rec;
            rec.hamiltonian = ctx.label;
            rec.coupling_seed = ctx.coupling_seed;
            rec.clock_cycle = t;
            rec.virtual_nodes = v;

            ReservoirConfig rc;
            rc.clock_cycle = t;
            rc.virtual_nodes = v;
            rc.observables = ctx.observables;
            rc.noise_amplitude = cfg.noise_amplitude;
            rc.n_sites = cfg.n_sites;

            std::uint64_t point_seed = mix(mix(cfg.run_seed, seeds[si]), mix(ti, vi));

            if (want_lorenz) {
                StateMatrix s = run(ctx.eig, lxx.inputs, rc, cfg.splits, point_seed);
                RMatrix targets(s.train.rows(), 2);
                for (long r = 0; r < s.train.rows(); ++r) {
                    targets(r, 0) = lxx.targets[std::size_t(s.train_start + r)];
                    targets(r, 1) = lxz.targets[std::size_t(s.train_start + r)];
                }
                ReadoutWeights w = train_readout(s.train, targets);
                RMatrix pred = w.predict(s.test);
                RVector truth_xx(s.test.rows()), truth_xz(s.test.rows());
                for (long r = 0; r < s.test.rows(); ++r) {
                    truth_xx(r) = lxx.targets[std::size_t(s.test_start + r)];
                    truth_xz(r) = lxz.targets[std::size_t(s.test_start + r)];
                }
                rec.nrmse_lxx = nrmse(pred.col(0), truth_xx);
                rec.nrmse_lxz = nrmse(pred.col(1), truth_xz);
            }
            if (want_ipc) {
                StateMatrix s = run(ctx.eig, uniform_inputs, rc, cfg.splits,
                                    mix(point_seed, 0x69ULL));
                IpcResult ipc = compute_ipc(s, uniform_inputs, cfg.ipc);
                rec.ipc_total = ipc.total;
                rec.ipc_per_order = ipc.per_order;
            }
            if (want_measures) {
                double f = 0, ks = 0, ek = 0;
                for (std::size_t i = 0; i < ctx.seed_states.size(); ++i) {
                    f += autocorrelation_fidelity(ctx.eig, ctx.seed_states[i], t);
                    ks += spread_complexity(ctx.bases[i], ctx.eig, ctx.seed_states[i], t);
                    ek += krylov_expressivity(ctx.eig, ctx.seed_states[i], t, {},
                                              ctx.state_grades[i]);
                }
                double n = double(ctx.seed_states.size());
                rec.fidelity_mean = f / n;
                rec.spread_mean = ks / n;
                rec.expressivity = ek / n;
                // Operator spaces built from the V actual measurement times of
                // this grid point, so the per-observable dimensions reflect
                // what the readout can resolve at (T, V).
                std::vector<double> readout_times;
                for (int j = 0; j < v; ++j)
                    readout_times.push_back((j + 1) * t / double(v));
                OperatorBasisSet spaces =
                    build_observability_spaces(ctx.eig, ctx.observables, readout_times);
                rec.observability =
                    krylov_observability(ctx.eig, ctx.observables, t, v, spaces.subspace_dims)
                        .total;
            }
            result.records[si * points + p] = std::move(rec);
        });
    }

    if (!cfg.output_dir.empty()) {
        std::filesystem::create_directories(cfg.output_dir);
        std::ofstream os(cfg.output_dir + "/" + cfg.task + ".csv");
        write_sweep_csv(os, cfg, result);
    }
    return result;
}

std::vector<double> smooth_curve(const std::vector<double>& values, int window, int order) {
    if (window < 3 || window % 2 == 0 || window > int(values.size()))
        throw std::invalid_argument("smooth_curve: window must be odd, >= 3, <= length");
    if (order != 0 && order != 1)
        throw std::invalid_argument("smooth_curve: only orders 0 and 1 supported");
    int h = (window - 1) / 2;
    int n = int(values.size());
    std::vector<double> out(values.size());
    for (int i = 0; i < n; ++i) {
        int lo = std::max(0, i - h), hi = std::min(n - 1, i + h);
        int m = hi - lo + 1;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int j = lo; j <= hi; ++j) {
            double x = j - i;
            sx += x;
            sy += values[std::size_t(j)];
            sxx += x * x;
            sxy += x * values[std::size_t(j)];
        }
        if (order == 0) {
            out[std::size_t(i)] = sy / m;
        } else {
            double denom = m * sxx - sx * sx;
            double slope = denom != 0 ? (m * sxy - sx * sy) / denom : 0.0;
            double intercept = (sy - slope * sx) / m;
            out[std::size_t(i)] = intercept;  // evaluated at x = 0, i.e. at i
        }
    }
    return out;
}

double correlation_report(const std::vector<double>& grid_a, const std::vector<double>& grid_b) {
    if (grid_a.size() != grid_b.size() || grid_a.empty())
        throw std::invalid_argument("correlation_report: size mismatch");
    Eigen::Map<const RVector> a(grid_a.data(), Eigen::Index(grid_a.size()));
    Eigen::Map<const RVector> b(grid_b.data(), Eigen::Index(grid_b.size()));
    auto ac = a.array() - a.mean();
    auto bc = b.array() - b.mean();
    double va = ac.square().mean(), vb = bc.square().mean();
    if (va <= 0 || vb <= 0)
        throw std::invalid_argument("correlation_report: constant field");
    return (ac * bc).mean() / std::sqrt(va * vb);
}

std::optional<double> saturation_detect(const std::vector<double>& ts,
                                        const std::vector<double>& values, double rel_tol) {
    if (ts.size() != values.size() || ts.size() < 5)
        throw std::invalid_argument("saturation_detect: need >= 5 aligned points");
    std::size_t n = ts.size();
    std::size_t tail = std::max<std::size_t>(3, n / 5);
    double plateau = 0;
    for (std::size_t i = n - tail; i < n; ++i) plateau += values[i];
    plateau /= double(tail);
    double band = rel_tol * std::abs(plateau);
    for (std::size_t i = n - tail; i < n; ++i)
        if (std::abs(values[i] - plateau) > band) return std::nullopt;  // still moving
    std::size_t first = n;
    for (std::size_t i = n; i-- > 0;) {
        if (std::abs(values[i] - plateau) > band) break;
        first = i;
    }
    if (first == n) return std::nullopt;
    return ts[first];
}

bool apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
    auto split_list = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        return out;
    };
    if (key == "hamiltonian") cfg.hamiltonian = value;
    else if (key == "n_sites") cfg.n_sites = std::stoi(value);
    else if (key == "task") cfg.task = value;
    else if (key == "t_grid") {
        cfg.t_grid.clear();
        for (auto& s : split_list(value)) cfg.t_grid.push_back(std::stod(s));
    } else if (key == "v_grid") {
        cfg.v_grid.clear();
        for (auto& s : split_list(value)) cfg.v_grid.push_back(std::stoi(s));
    } else if (key == "observables") {
        if (value == "first") cfg.observable_selection = ObservableSelection::FirstSite;
        else if (value == "all") cfg.observable_selection = ObservableSelection::AllSites;
        else {
            cfg.observable_selection = ObservableSelection::Explicit;
            cfg.observable_sites.clear();
            for (auto& s : split_list(value)) cfg.observable_sites.push_back(std::stoi(s));
        }
    } else if (key == "coupling_seeds") {
        cfg.coupling_seeds.clear();
        for (auto& s : split_list(value)) cfg.coupling_seeds.push_back(std::stoull(s));
    } else if (key == "n_init") cfg.splits.n_init = std::stol(value);
    else if (key == "n_train") cfg.splits.n_train = std::stol(value);
    else if (key == "n_test") cfg.splits.n_test = std::stol(value);
    else if (key == "buffer") cfg.splits.buffer = std::stol(value);
    else if (key == "noise_amplitude") cfg.noise_amplitude = std::stod(value);
    else if (key == "max_order") cfg.ipc.max_order = std::stoi(value);
    else if (key == "ipc_threshold") cfg.ipc.threshold = std::stod(value);
    else if (key == "seed_states") cfg.seed_states = std::stoi(value);
    else if (key == "run_seed") cfg.run_seed = std::stoull(value);
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "parallelism") cfg.parallelism = std::stoi(value);
    else return false;
    return true;
}

ExperimentConfig load_config(std::istream& is) {
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(is, line)) {
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (!apply_config_entry(cfg, key, value))
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return cfg;
}

namespace {

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << cfg.hamiltonian << "|" << cfg.n_sites << "|" << cfg.task << "|";
    for (double t : cfg.t_grid) os << t << ",";
    os << "|";
    for (int v : cfg.v_grid) os << v << ",";
    os << "|" << int(cfg.observable_selection) << "|";
    for (int s : cfg.observable_sites) os << s << ",";
    os << "|";
    for (auto s : cfg.coupling_seeds) os << s << ",";
    os << "|" << cfg.splits.n_init << "," << cfg.splits.n_train << "," << cfg.splits.n_test
       << "," << cfg.splits.buffer << "|" << cfg.noise_amplitude << "|" << cfg.ipc.max_order
       << "|" << cfg.ipc.threshold << "|" << cfg.seed_states << "|" << cfg.run_seed;
    return os.str();
}

}  // namespace

std::uint64_t config_hash(const ExperimentConfig& cfg) { return fnv1a(serialize_config(cfg)); }

void write_sweep_csv(std::ostream& os, const ExperimentConfig& cfg, const SweepResult& result) {
    os << "# config_hash=" << std::hex << config_hash(cfg) << std::dec << "\n";
    os << "# run_seed=" << cfg.run_seed << "\n";
    os << "# version=" << "qrckit-0.1.0" << "\n";
    int max_order = cfg.ipc.max_order;
    os << "hamiltonian,coupling_seed,T,V,nrmse_lxx,nrmse_lxz,ipc_total";
    for (int i = 1; i <= max_order; ++i) os << ",ipc_" << i;
    os << ",expressivity,observability,spread_mean,fidelity_mean\n";
    for (const auto& r : result.records) {
        os << r.hamiltonian << "," << r.coupling_seed << "," << r.clock_cycle << ","
           << r.virtual_nodes << "," << r.nrmse_lxx << "," << r.nrmse_lxz << ","
           << r.ipc_total;
        for (int i = 0; i < max_order; ++i)
            os << "," << (i < int(r.ipc_per_order.size()) ? r.ipc_per_order[std::size_t(i)]
                                                          : std::numeric_limits<double>::quiet_NaN());
        os << "," << r.expressivity << "," << r.observability << "," << r.spread_mean << ","
           << r.fidelity_mean << "\n";
    }
}

}  // namespace qrc
