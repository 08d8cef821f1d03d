#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gwode/benchmarks.hpp"
#include "gwode/core.hpp"
#include "gwode/hybrid.hpp"

namespace gwode {

/// Experiment protocol knobs. Defaults reproduce the standard campaign
/// (np=200, 1000 iterations, 50 trials, D=30). The hybrid defaults give the
/// self-adaptive DE phase the longest patience (q3) and exit GWO once its
/// relative progress per generation falls under stagnation_rel_tol.
struct RunConfig {
    int np = 200;
    int max_iterations = 1000;
    int trials = 50;
    std::uint64_t base_seed = 0;
    int q1 = 10;
    int q2 = 20;
    int q3 = 60;
    double de_f = 0.9;
    double de_cr = 0.9;
    double stagnation_rel_tol = 0.002; // hybrid improvement margin, see HybridState
    int dimension = 30;
    ExecPolicy kernel_policy = ExecPolicy::openmp;

    void validate() const;
    /// Objective evaluations consumed by one trial (initialization included).
    long long evaluation_budget() const {
        return static_cast<long long>(np) * (static_cast<long long>(max_iterations) + 1);
    }
};

/// One seeded run: the best-so-far value after initialization and after each
/// generation (non-increasing), plus accounting.
struct TrialTrace {
    std::vector<double> best_per_generation; // length max_iterations + 1
    long long evaluations_used = 0;
    std::vector<ModeEvent> mode_timeline; // hybrid runs only
    std::uint64_t seed = 0;               // derived trial stream key
    double wall_time_seconds = 0.0;       // informational, never serialized
};

struct CellResult {
    std::string algorithm;
    std::string function;
    double f_star = 0.0;
    std::vector<double> errors; // per trial, >= 0
    double mean_error = 0.0;
    double stddev_error = 0.0;
    std::vector<TrialTrace> traces;
    std::string diagnostic; // non-empty when the cell failed
};

struct ExperimentResult {
    std::vector<std::string> algorithms;
    std::vector<std::string> functions;
    std::vector<CellResult> cells; // functions-major, algorithms-minor
    int np = 0;

    const CellResult* cell(const std::string& algorithm, const std::string& function) const;
};

/// Stable trial stream key: (base_seed, algorithm, function, trial). Adding a
/// function or permuting lists never perturbs other cells.
std::uint64_t trial_stream_key(std::uint64_t base_seed, std::string_view algorithm,
                               std::string_view function, int trial_index);

/// max(0, best - f_star), with values below 1e-300 reported as 0.
double compute_error(double best_fitness, double f_star);

// Full single runs, one per algorithm. Each consumes exactly
// np * (max_iterations + 1) evaluations.
TrialTrace run_gwo(const ObjectiveFunction& objective, const RunConfig& config, RngStream rng);
TrialTrace run_de(const ObjectiveFunction& objective, const RunConfig& config,
                  DeStrategy strategy, RngStream rng);
TrialTrace run_gwo_de(const ObjectiveFunction& objective, const RunConfig& config, RngStream rng);

using AlgorithmFn =
    std::function<TrialTrace(const ObjectiveFunction&, const RunConfig&, RngStream)>;

const std::vector<std::string>& algorithm_names();
bool is_known_algorithm(const std::string& name);
/// Extension point; built-ins are gwo, de_best_1_bin, jde, gwo_de.
void register_algorithm(const std::string& name, AlgorithmFn fn);

TrialTrace run_trial(const std::string& algorithm, const ObjectiveFunction& objective,
                     const RunConfig& config, int trial_index);

/// Cross product algorithms x functions x trials. Trials run concurrently
/// across `workers`; results are identical to sequential execution.
ExperimentResult run_experiment(const RunConfig& config,
                                const std::vector<std::string>& algorithms,
                                const std::vector<ObjectiveFunction>& functions, int workers = 1);

} // namespace gwode
