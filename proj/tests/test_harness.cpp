#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "gwode/harness.hpp"

using namespace gwode;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.np = 10;
    cfg.max_iterations = 20;
    cfg.trials = 3;
    cfg.base_seed = 1234;
    cfg.dimension = 5;
    cfg.kernel_policy = ExecPolicy::serial;
    return cfg;
}

bool same_trace(const TrialTrace& a, const TrialTrace& b) {
    return a.best_per_generation == b.best_per_generation &&
           a.evaluations_used == b.evaluations_used && a.seed == b.seed &&
           a.mode_timeline == b.mode_timeline;
}

} // namespace

TEST_CASE("compute_error") {
    CHECK(compute_error(7.03e-15, 0.0) == 7.03e-15);
    CHECK(compute_error(5.0, 5.0) == 0.0);
    CHECK(compute_error(5.0 - 1e-16, 5.0) == 0.0); // numerical undershoot clamps
    CHECK(compute_error(1e-301, 0.0) == 0.0);      // sub-floor values report as 0
    CHECK(compute_error(3.5, 1.0) == 2.5);
}

TEST_CASE("trial_stream_key separates cells and trials") {
    const std::uint64_t base = trial_stream_key(1, "gwo", "sphere", 0);
    CHECK(base == trial_stream_key(1, "gwo", "sphere", 0));
    CHECK(base != trial_stream_key(1, "gwo", "sphere", 1));
    CHECK(base != trial_stream_key(1, "jde", "sphere", 0));
    CHECK(base != trial_stream_key(1, "gwo", "ackley", 0));
    CHECK(base != trial_stream_key(2, "gwo", "sphere", 0));
}

TEST_CASE("run_trial") {
    const RunConfig cfg = small_config();
    const ObjectiveFunction fn = make_function("sphere", cfg.dimension);

    SUBCASE("budget is exact for every algorithm") {
        for (const auto& alg : algorithm_names()) {
            CAPTURE(alg);
            const TrialTrace trace = run_trial(alg, fn, cfg, 0);
            CHECK(trace.evaluations_used == cfg.evaluation_budget());
            CHECK(trace.best_per_generation.size() ==
                  static_cast<std::size_t>(cfg.max_iterations + 1));
        }
    }
    SUBCASE("an independent counting wrapper sees the same budget") {
        std::atomic<long long> calls{0};
        const ObjectiveFunction sphere5 = make_function("sphere", 5);
        const ObjectiveFunction counted(
            "counted_sphere", sphere5.space(), 0.0, std::nullopt,
            [&calls, sphere5](std::span<const double> x) {
                calls.fetch_add(1, std::memory_order_relaxed);
                return sphere5.evaluate(x);
            });
        run_trial("gwo_de", counted, cfg, 0);
        CHECK(calls.load() == cfg.evaluation_budget());
    }
    SUBCASE("re-running a trial reproduces it bit for bit") {
        for (const auto& alg : algorithm_names()) {
            const TrialTrace a = run_trial(alg, fn, cfg, 1);
            const TrialTrace b = run_trial(alg, fn, cfg, 1);
            CHECK(same_trace(a, b));
        }
    }
    SUBCASE("distinct trial indices give distinct traces") {
        const TrialTrace a = run_trial("gwo", fn, cfg, 0);
        const TrialTrace b = run_trial("gwo", fn, cfg, 1);
        CHECK(a.seed != b.seed);
        CHECK(a.best_per_generation != b.best_per_generation);
    }
    SUBCASE("traces are non-increasing") {
        for (const auto& alg : algorithm_names()) {
            const TrialTrace t = run_trial(alg, fn, cfg, 2);
            for (std::size_t i = 1; i < t.best_per_generation.size(); ++i)
                CHECK(t.best_per_generation[i] <= t.best_per_generation[i - 1]);
        }
    }
    SUBCASE("unknown algorithm is a configuration error") {
        CHECK_THROWS_AS(run_trial("annealing", fn, cfg, 0), std::invalid_argument);
    }
    SUBCASE("invalid config is rejected") {
        RunConfig bad = cfg;
        bad.trials = 0;
        CHECK_THROWS_AS(run_trial("gwo", fn, bad, 0), std::invalid_argument);
        bad = cfg;
        bad.np = 3;
        CHECK_THROWS_AS(run_trial("gwo", fn, bad, 0), std::invalid_argument);
    }
}

TEST_CASE("run_experiment") {
    const RunConfig cfg = [] {
        RunConfig c = small_config();
        c.trials = 5;
        return c;
    }();
    const std::vector<std::string> algorithms = {"gwo", "jde"};
    std::vector<ObjectiveFunction> functions;
    for (const char* name : {"sphere", "rastrigin", "ackley"})
        functions.push_back(make_function(name, cfg.dimension));

    SUBCASE("produces the full cross product") {
        const ExperimentResult r = run_experiment(cfg, algorithms, functions, 1);
        CHECK(r.cells.size() == 6);
        long long traces = 0;
        for (const auto& cell : r.cells) {
            CHECK(cell.diagnostic.empty());
            CHECK(cell.errors.size() == 5);
            traces += static_cast<long long>(cell.traces.size());
            double sum = 0.0;
            for (double e : cell.errors) {
                CHECK(e >= 0.0);
                sum += e;
            }
            CHECK(cell.mean_error == doctest::Approx(sum / 5.0).epsilon(1e-12));
        }
        CHECK(traces == 30);
    }
    SUBCASE("single-trial mean equals the trial error") {
        RunConfig one = cfg;
        one.trials = 1;
        const ExperimentResult r = run_experiment(one, {"jde"}, functions, 1);
        for (const auto& cell : r.cells) {
            CHECK(cell.stddev_error == 0.0);
            CHECK(cell.mean_error == cell.errors[0]);
        }
    }
    SUBCASE("permuting the algorithm list leaves cell contents unchanged") {
        const ExperimentResult fwd = run_experiment(cfg, {"gwo", "jde"}, functions, 1);
        const ExperimentResult rev = run_experiment(cfg, {"jde", "gwo"}, functions, 1);
        for (const auto& alg : algorithms) {
            for (const auto& fn : functions) {
                const CellResult* a = fwd.cell(alg, fn.name());
                const CellResult* b = rev.cell(alg, fn.name());
                REQUIRE(a != nullptr);
                REQUIRE(b != nullptr);
                CHECK(a->errors == b->errors);
            }
        }
    }
    SUBCASE("a failing objective aborts only its own cells") {
        std::vector<ObjectiveFunction> with_bad = functions;
        with_bad.push_back(ObjectiveFunction(
            "exploding", SearchSpace::box(cfg.dimension, -1.0, 1.0), 0.0, std::nullopt,
            [](std::span<const double>) -> double { throw std::runtime_error("boom"); }));
        const ExperimentResult r = run_experiment(cfg, algorithms, with_bad, 1);
        for (const auto& cell : r.cells) {
            if (cell.function == "exploding") {
                CHECK_FALSE(cell.diagnostic.empty());
                CHECK(cell.errors.empty());
            } else {
                CHECK(cell.diagnostic.empty());
                CHECK(cell.errors.size() == 5);
            }
        }
    }
    SUBCASE("unknown algorithm rejected up front") {
        CHECK_THROWS_AS(run_experiment(cfg, {"nope"}, functions, 1), std::invalid_argument);
    }
}
