#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gwode/rng.hpp"
#include "gwode/stats.hpp"

using namespace gwode;

namespace {

// the published comparison-table rows this suite reproduces
const std::vector<std::string> kEightAlgorithms = {"ABC",  "PSO",    "TLBO", "Jaya",
                                                   "GWO",  "GWO-DE", "jDE",  "DE/best/1/bin"};
const std::vector<double> kEightAverages = {8.0, 3.6, 3.9, 6.3, 3.2, 2.3, 2.6, 6.1};

double round1(double v) { return std::round(v * 10.0) / 10.0; }

} // namespace

TEST_CASE("normalized and ordinal columns from the published average ranks") {
    const RankingTable t = ranking_from_averages(kEightAlgorithms, kEightAverages);
    const std::vector<double> expected_normalized = {3.5, 1.6, 1.7, 2.7, 1.4, 1.0, 1.1, 2.7};
    const std::vector<int> expected_ordinals = {8, 4, 5, 7, 3, 1, 2, 6};
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(round1(t.rows[i].normalized) == expected_normalized[i]);
        CHECK(t.rows[i].ordinal_rank == expected_ordinals[i]);
    }
    CHECK(t.rows[5].normalized == 1.0);
}

TEST_CASE("friedman_ranks on the published mean-error table recovers its average ranks") {
    // rows: schaffer_f6, sphere, rosenbrock, ackley, griewank, weierstrass,
    // rastrigin, noncont rastrigin, penalized f12, penalized f13
    const std::vector<std::vector<double>> table = {
        {1.84e-1, 0.0, 5.95e-12, 1.12e-4, 1.94e-4, 3.89e-4, 0.0, 0.0},
        {5.22e+4, 1.38e-6, 9.90e-4, 6.74e+1, 7.86e-99, 1.32e-99, 2.04e-9, 6.24e+2},
        {3.26e+3, 2.77e+1, 2.57e+1, 4.70e+1, 2.59e+1, 7.72e-5, 2.20e+1, 9.55e+1},
        {2.03e+1, 3.49e-4, 2.25e+0, 7.64e+0, 7.32e-15, 7.03e-15, 1.34e-5, 7.11e+0},
        {4.51e+2, 1.49e-2, 1.05e-2, 1.60e+0, 1.27e-3, 1.28e-3, 1.49e-8, 5.64e+0},
        {3.55e+1, 1.24e-2, 3.71e-1, 1.34e+1, 6.23e-1, 4.67e-1, 1.50e-3, 1.14e+1},
        {3.77e+2, 1.91e+1, 3.07e+0, 2.53e+2, 0.0, 2.63e+0, 4.73e+1, 7.64e+1},
        {3.42e+2, 2.30e+1, 5.52e+0, 2.21e+2, 2.80e-1, 2.78e+0, 3.03e+1, 7.30e+1},
        {2.17e+8, 6.83e-3, 4.35e-2, 3.49e+1, 8.61e-3, 1.07e-31, 2.00e-10, 5.67e+1},
        {5.35e+8, 1.61e-5, 2.65e-4, 5.40e+3, 6.88e-2, 4.02e-32, 8.25e-10, 6.68e+3},
    };
    const RankingTable t = friedman_ranks(kEightAlgorithms, table);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        CHECK(t.rows[i].average_rank == doctest::Approx(kEightAverages[i]).epsilon(1e-12));
    CHECK(t.rows[5].ordinal_rank == 1); // the hybrid tops the table
    CHECK(t.n_functions == 10);
    CHECK(t.friedman_statistic > 0.0);
}

TEST_CASE("friedman symmetry and tie handling") {
    SUBCASE("opposite orderings cancel") {
        const RankingTable t = friedman_ranks({"a", "b", "c"}, {{1, 2, 3}, {3, 2, 1}});
        for (const auto& row : t.rows) {
            CHECK(row.average_rank == 2.0);
            CHECK(row.normalized == 1.0);
        }
        CHECK(t.rows[0].ordinal_rank == 1);
        CHECK(t.rows[1].ordinal_rank == 2);
        CHECK(t.rows[2].ordinal_rank == 3);
    }
    SUBCASE("ties receive the average of tied positions") {
        CHECK(fractional_ranks({5.0, 5.0, 1.0}) == std::vector<double>{2.5, 2.5, 1.0});
        CHECK(fractional_ranks({7.0, 7.0, 7.0}) == std::vector<double>{2.0, 2.0, 2.0});
    }
    SUBCASE("rank sums are conserved at K(K+1)/2") {
        RngStream rng(80, 0);
        for (int rep = 0; rep < 200; ++rep) {
            const int k = 2 + static_cast<int>(rng.below(6));
            std::vector<double> row(k);
            for (auto& v : row) v = static_cast<double>(rng.below(4)); // force ties
            const auto ranks = fractional_ranks(row);
            double sum = 0.0;
            for (double r : ranks) sum += r;
            CHECK(sum == doctest::Approx(k * (k + 1) / 2.0).epsilon(1e-12));
        }
    }
    SUBCASE("invariance under strictly increasing transforms") {
        RngStream rng(81, 0);
        std::vector<std::vector<double>> matrix(4, std::vector<double>(3));
        for (auto& row : matrix)
            for (auto& v : row) v = rng.uniform(0.0, 100.0);
        const RankingTable base = friedman_ranks({"a", "b", "c"}, matrix);
        for (auto& row : matrix)
            for (auto& v : row) v = std::atan(v) - 2.0; // strictly increasing
        const RankingTable mapped = friedman_ranks({"a", "b", "c"}, matrix);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(base.rows[i].average_rank == mapped.rows[i].average_rank);
            CHECK(base.rows[i].normalized == mapped.rows[i].normalized);
            CHECK(base.rows[i].ordinal_rank == mapped.rows[i].ordinal_rank);
        }
    }
    SUBCASE("validation errors") {
        CHECK_THROWS_AS(friedman_ranks({"a"}, {{1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(friedman_ranks({"a", "b"}, {}), std::invalid_argument);
        CHECK_THROWS_AS(friedman_ranks({"a", "b"}, {{1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(friedman_ranks({"a", "b"}, {{1.0, std::nan("")}}),
                        std::invalid_argument);
    }
}

TEST_CASE("boxplot_stats") {
    SUBCASE("degenerate distribution") {
        const BoxStats b = boxplot_stats({1e-6, 1e-6, 1e-6});
        CHECK(b.min == -6.0);
        CHECK(b.q1 == -6.0);
        CHECK(b.median == -6.0);
        CHECK(b.q3 == -6.0);
        CHECK(b.max == -6.0);
    }
    SUBCASE("log scale three-point summary") {
        const BoxStats b = boxplot_stats({1.0, 10.0, 100.0});
        CHECK(b.min == 0.0);
        CHECK(b.q1 == 0.5);
        CHECK(b.median == 1.0);
        CHECK(b.q3 == 1.5);
        CHECK(b.max == 2.0);
    }
    SUBCASE("zero errors are floored at 1e-300") {
        const BoxStats b = boxplot_stats({0.0});
        CHECK(b.min == -300.0);
        CHECK(b.max == -300.0);
    }
    SUBCASE("ordering invariant on random data") {
        RngStream rng(82, 0);
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<double> errors(1 + rng.below(20));
            for (auto& e : errors) e = rng.uniform(0.0, 1.0);
            const BoxStats b = boxplot_stats(errors);
            CHECK(b.min <= b.q1);
            CHECK(b.q1 <= b.median);
            CHECK(b.median <= b.q3);
            CHECK(b.q3 <= b.max);
        }
    }
    SUBCASE("empty input rejected") {
        CHECK_THROWS_AS(boxplot_stats({}), std::invalid_argument);
    }
}

TEST_CASE("convergence_series") {
    SUBCASE("constant trace is flat") {
        const ConvergenceSeries s = convergence_series({{1e-3, 1e-3, 1e-3}}, 10);
        CHECK(s.evaluations == std::vector<double>{0.0, 10.0, 20.0});
        for (double y : s.log_mean_error) CHECK(y == -3.0);
    }
    SUBCASE("mean is taken before the log") {
        const ConvergenceSeries s = convergence_series({{1e-2}, {1e-6}}, 200);
        CHECK(s.log_mean_error[0] == std::log10(5.0005e-3));
    }
    SUBCASE("final x is np * generations") {
        std::vector<double> trace(1001, 1.0);
        const ConvergenceSeries s = convergence_series({trace}, 200);
        CHECK(s.evaluations.back() == 200000.0);
        CHECK(s.evaluations.size() == 1001);
    }
    SUBCASE("length mismatch rejected") {
        CHECK_THROWS_AS(convergence_series({{1.0, 2.0}, {1.0}}, 10), std::invalid_argument);
    }
}
