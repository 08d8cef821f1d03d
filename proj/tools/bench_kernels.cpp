// Throughput comparison of the OpenMP generation kernels against the serial
// reference drivers, with a bitwise equality check on the results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "gwode/benchmarks.hpp"
#include "gwode/de.hpp"
#include "gwode/gwo.hpp"
#include "gwode/reference.hpp"

using namespace gwode;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_population(const Population& a, const Population& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
        if (a.members[i].position != b.members[i].position) return false;
        if (a.members[i].fitness != b.members[i].fitness) return false;
    }
    return true;
}

struct Variant {
    const char* name;
    std::function<Population(const Population&, int)> step;
};

void bench_kernel(const char* label, const std::vector<Variant>& variants, const Population& pop,
                  int generations) {
    double serial_time = 0.0;
    Population serial_result;
    for (const auto& v : variants) {
        // warmup
        Population warm = v.step(pop, 0);
        (void)warm;

        const auto start = std::chrono::steady_clock::now();
        Population cur = pop;
        for (int t = 0; t < generations; ++t) cur = v.step(cur, t);
        const double elapsed = seconds_since(start);

        const bool reference = std::string(v.name).find("reference") != std::string::npos;
        if (reference) {
            serial_time = elapsed;
            serial_result = cur;
        }
        const double per_gen_ms = elapsed / generations * 1e3;
        std::printf("%-14s %-22s %8.3f ms/gen", label, v.name, per_gen_ms);
        if (!reference && serial_time > 0.0) {
            std::printf("  speedup %.2fx  identical: %s", serial_time / elapsed,
                        same_population(cur, serial_result) ? "yes" : "NO");
        }
        std::printf("\n");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generation-kernel benchmark: serial reference vs OpenMP"};
    int np = 512;
    int dim = 64;
    int generations = 50;
    int threads = omp_get_max_threads();
    std::string function = "rastrigin";
    app.add_option("--np", np, "population size");
    app.add_option("--dim", dim, "problem dimension");
    app.add_option("--generations", generations, "generations per measurement");
    app.add_option("--threads", threads, "OpenMP thread count");
    app.add_option("--function", function, "objective from the catalog");
    CLI11_PARSE(app, argc, argv);

    omp_set_num_threads(threads);

    const ObjectiveFunction objective = make_function(function, dim);
    const EvalFn eval = [&](std::span<const double> x) { return objective.evaluate(x); };
    const SearchSpace& space = objective.space();
    const RngStream trial_rng(20240901, 0);

    RngStream init_rng = trial_rng.derive(0, 0);
    Population pop = uniform_init(space, np, init_rng);
    evaluate_population(pop, eval, ExecPolicy::serial);

    std::printf("np=%d dim=%d generations=%d threads=%d function=%s\n\n", np, dim, generations,
                threads, function.c_str());

    const int t_max = generations;
    bench_kernel("gwo",
                 {{"reference serial",
                   [&](const Population& p, int t) {
                       return reference::gwo_generation_serial(p, t % t_max, t_max, trial_rng,
                                                               eval, space);
                   }},
                  {"kernel serial",
                   [&](const Population& p, int t) {
                       return gwo_generation(p, t % t_max, t_max, trial_rng, eval, space,
                                             ExecPolicy::serial);
                   }},
                  {"kernel openmp",
                   [&](const Population& p, int t) {
                       return gwo_generation(p, t % t_max, t_max, trial_rng, eval, space,
                                             ExecPolicy::openmp);
                   }}},
                 pop, generations);

    const DeControl control;
    const JdeConfig jde_config;
    bench_kernel("de (jde)",
                 {{"reference serial",
                   [&](const Population& p, int t) {
                       return reference::de_generation_serial(p, DeStrategy::jde, control,
                                                              jde_config, t, trial_rng, eval,
                                                              space);
                   }},
                  {"kernel serial",
                   [&](const Population& p, int t) {
                       return de_generation(p, DeStrategy::jde, control, jde_config, t, trial_rng,
                                            eval, space, ExecPolicy::serial);
                   }},
                  {"kernel openmp",
                   [&](const Population& p, int t) {
                       return de_generation(p, DeStrategy::jde, control, jde_config, t, trial_rng,
                                            eval, space, ExecPolicy::openmp);
                   }}},
                 pop, generations);

    return 0;
}
