#include "gwode/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gwode {

void RunConfig::validate() const {
    if (np < 4) throw std::invalid_argument("RunConfig: np >= 4 required");
    if (max_iterations < 0) throw std::invalid_argument("RunConfig: max_iterations >= 0 required");
    if (trials < 1) throw std::invalid_argument("RunConfig: trials >= 1 required");
    if (q1 < 0 || q2 < 0 || q3 < 0)
        throw std::invalid_argument("RunConfig: thresholds must be non-negative");
    if (dimension < 1) throw std::invalid_argument("RunConfig: dimension >= 1 required");
    if (!(de_f > 0.0)) throw std::invalid_argument("RunConfig: de_f > 0 required");
    if (de_cr < 0.0 || de_cr > 1.0)
        throw std::invalid_argument("RunConfig: de_cr in [0, 1] required");
    if (stagnation_rel_tol < 0.0 || stagnation_rel_tol >= 1.0)
        throw std::invalid_argument("RunConfig: stagnation_rel_tol in [0, 1) required");
}

const CellResult* ExperimentResult::cell(const std::string& algorithm,
                                         const std::string& function) const {
    for (const auto& c : cells)
        if (c.algorithm == algorithm && c.function == function) return &c;
    return nullptr;
}

std::uint64_t trial_stream_key(std::uint64_t base_seed, std::string_view algorithm,
                               std::string_view function, int trial_index) {
    std::uint64_t k = mix64(base_seed);
    k = hash_combine(k, fnv1a64(algorithm));
    k = hash_combine(k, fnv1a64(function));
    k = hash_combine(k, static_cast<std::uint64_t>(trial_index));
    return k;
}

double compute_error(double best_fitness, double f_star) {
    const double e = best_fitness - f_star;
    if (e < 1e-300) return 0.0;
    return e;
}

namespace {

struct TrialRun {
    const ObjectiveFunction& objective;
    const RunConfig& config;
    RngStream trial_rng;
    std::atomic<long long> evaluations{0};
    EvalFn counting;
    Population cur;
    Population next;
    TrialTrace trace;

    TrialRun(const ObjectiveFunction& obj, const RunConfig& cfg, RngStream rng)
        : objective(obj), config(cfg), trial_rng(rng) {
        counting = [this](std::span<const double> x) {
            evaluations.fetch_add(1, std::memory_order_relaxed);
            return objective.evaluate(x);
        };
        RngStream init_rng = trial_rng.derive(0, 0);
        cur = uniform_init(objective.space(), config.np, init_rng);
        evaluate_population(cur, counting, config.kernel_policy);
        next = cur; // preallocate the back buffer
        trace.seed = trial_rng.key();
        trace.best_per_generation.reserve(config.max_iterations + 1);
    }

    double population_best() const { return *cur.members[cur.best_index()].fitness; }

    void finish() { trace.evaluations_used = evaluations.load(); }
};

TrialTrace run_with_timer(const std::function<TrialTrace()>& body) {
    const auto start = std::chrono::steady_clock::now();
    TrialTrace t = body();
    const auto stop = std::chrono::steady_clock::now();
    t.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
    return t;
}

} // namespace

TrialTrace run_gwo(const ObjectiveFunction& objective, const RunConfig& config, RngStream rng) {
    return run_with_timer([&] {
        TrialRun run(objective, config, rng);
        double best = run.population_best();
        run.trace.best_per_generation.push_back(best);
        for (int t = 0; t < config.max_iterations; ++t) {
            gwo_generation_into(run.cur, run.next, t, config.max_iterations, run.trial_rng,
                                run.counting, objective.space(), config.kernel_policy);
            std::swap(run.cur, run.next);
            // GWO replaces unconditionally, so only best-so-far is monotone
            best = std::min(best, run.population_best());
            run.trace.best_per_generation.push_back(best);
        }
        run.finish();
        return run.trace;
    });
}

TrialTrace run_de(const ObjectiveFunction& objective, const RunConfig& config,
                  DeStrategy strategy, RngStream rng) {
    return run_with_timer([&] {
        TrialRun run(objective, config, rng);
        const DeControl control{config.de_f, config.de_cr};
        const JdeConfig jde_config;
        double best = run.population_best();
        run.trace.best_per_generation.push_back(best);
        for (int t = 0; t < config.max_iterations; ++t) {
            de_generation_into(run.cur, run.next, strategy, control, jde_config, t, run.trial_rng,
                               run.counting, objective.space(), config.kernel_policy);
            std::swap(run.cur, run.next);
            best = std::min(best, run.population_best());
            run.trace.best_per_generation.push_back(best);
        }
        run.finish();
        return run.trace;
    });
}

TrialTrace run_gwo_de(const ObjectiveFunction& objective, const RunConfig& config,
                      RngStream rng) {
    return run_with_timer([&] {
        TrialRun run(objective, config, rng);
        const DeControl control{config.de_f, config.de_cr};
        const JdeConfig jde_config;
        HybridState state = make_hybrid_state(config.q1, config.q2, config.q3,
                                              run.cur.members[run.cur.best_index()],
                                              config.stagnation_rel_tol);
        run.trace.best_per_generation.push_back(*state.best_so_far.fitness);
        for (int t = 0; t < config.max_iterations; ++t) {
            hybrid_generation_into(state, run.cur, run.next, t, config.max_iterations,
                                   run.trial_rng, run.counting, objective.space(), control,
                                   jde_config, config.kernel_policy);
            std::swap(run.cur, run.next);
            run.trace.best_per_generation.push_back(*state.best_so_far.fitness);
        }
        run.trace.mode_timeline = std::move(state.mode_timeline);
        run.finish();
        return run.trace;
    });
}

namespace {

std::map<std::string, AlgorithmFn>& registry() {
    static std::map<std::string, AlgorithmFn> algorithms = {
        {"gwo",
         [](const ObjectiveFunction& f, const RunConfig& c, RngStream r) {
             return run_gwo(f, c, r);
         }},
        {"de_best_1_bin",
         [](const ObjectiveFunction& f, const RunConfig& c, RngStream r) {
             return run_de(f, c, DeStrategy::best_1, r);
         }},
        {"jde",
         [](const ObjectiveFunction& f, const RunConfig& c, RngStream r) {
             return run_de(f, c, DeStrategy::jde, r);
         }},
        {"gwo_de",
         [](const ObjectiveFunction& f, const RunConfig& c, RngStream r) {
             return run_gwo_de(f, c, r);
         }},
    };
    return algorithms;
}

} // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

bool is_known_algorithm(const std::string& name) { return registry().count(name) > 0; }

void register_algorithm(const std::string& name, AlgorithmFn fn) {
    registry()[name] = std::move(fn);
}

TrialTrace run_trial(const std::string& algorithm, const ObjectiveFunction& objective,
                     const RunConfig& config, int trial_index) {
    config.validate();
    auto it = registry().find(algorithm);
    if (it == registry().end())
        throw std::invalid_argument("unknown algorithm: " + algorithm);
    const std::uint64_t key =
        trial_stream_key(config.base_seed, algorithm, objective.name(), trial_index);
    return it->second(objective, config, RngStream::from_key(key));
}

ExperimentResult run_experiment(const RunConfig& config,
                                const std::vector<std::string>& algorithms,
                                const std::vector<ObjectiveFunction>& functions, int workers) {
    config.validate();
    if (workers < 1) workers = 1;
    for (const auto& a : algorithms)
        if (!is_known_algorithm(a)) throw std::invalid_argument("unknown algorithm: " + a);

    ExperimentResult result;
    result.np = config.np;
    for (const auto& a : algorithms) result.algorithms.push_back(a);
    for (const auto& f : functions) result.functions.push_back(f.name());

    const int n_cells = static_cast<int>(functions.size() * algorithms.size());
    result.cells.resize(n_cells);
    for (std::size_t fi = 0; fi < functions.size(); ++fi) {
        for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
            CellResult& cell = result.cells[fi * algorithms.size() + ai];
            cell.algorithm = algorithms[ai];
            cell.function = functions[fi].name();
            cell.f_star = functions[fi].f_star();
            cell.errors.resize(config.trials);
            cell.traces.resize(config.trials);
        }
    }

    struct Task {
        int cell;
        int trial;
    };
    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(n_cells) * config.trials);
    for (int c = 0; c < n_cells; ++c)
        for (int t = 0; t < config.trials; ++t) tasks.push_back({c, t});

    std::vector<std::string> task_errors(tasks.size());
    const int n_tasks = static_cast<int>(tasks.size());

#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < n_tasks; ++i) {
        const Task task = tasks[i];
        CellResult& cell = result.cells[task.cell];
        const ObjectiveFunction& fn = functions[task.cell / algorithms.size()];
        try {
            TrialTrace trace = run_trial(cell.algorithm, fn, config, task.trial);
            cell.errors[task.trial] =
                compute_error(trace.best_per_generation.back(), fn.f_star());
            cell.traces[task.trial] = std::move(trace);
        } catch (const std::exception& e) {
            task_errors[i] = e.what();
        }
    }

    for (int i = 0; i < n_tasks; ++i) {
        if (!task_errors[i].empty()) {
            CellResult& cell = result.cells[tasks[i].cell];
            if (cell.diagnostic.empty()) cell.diagnostic = task_errors[i];
        }
    }

    for (auto& cell : result.cells) {
        if (!cell.diagnostic.empty()) {
            cell.errors.clear();
            cell.traces.clear();
            cell.mean_error = std::nan("");
            cell.stddev_error = std::nan("");
            continue;
        }
        double sum = 0.0;
        for (double e : cell.errors) sum += e;
        cell.mean_error = sum / static_cast<double>(cell.errors.size());
        double ss = 0.0;
        for (double e : cell.errors) {
            const double d = e - cell.mean_error;
            ss += d * d;
        }
        cell.stddev_error = cell.errors.size() > 1
                                ? std::sqrt(ss / static_cast<double>(cell.errors.size() - 1))
                                : 0.0;
    }
    return result;
}

} // namespace gwode
