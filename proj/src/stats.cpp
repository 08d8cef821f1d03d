#include "gwode/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gwode {

std::vector<double> fractional_ranks(const std::vector<double>& values) {
    const int k = static_cast<int>(values.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    std::vector<double> ranks(k);
    int i = 0;
    while (i < k) {
        int j = i;
        while (j + 1 < k && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share the average of ranks i+1..j+1
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (int p = i; p <= j; ++p) ranks[order[p]] = avg;
        i = j + 1;
    }
    return ranks;
}

RankingTable ranking_from_averages(const std::vector<std::string>& algorithms,
                                   const std::vector<double>& average_ranks, int n_functions) {
    const int k = static_cast<int>(algorithms.size());
    if (k < 2) throw std::invalid_argument("ranking: at least 2 algorithms required");
    if (static_cast<int>(average_ranks.size()) != k)
        throw std::invalid_argument("ranking: name/rank length mismatch");

    RankingTable table;
    table.n_functions = n_functions;
    const double min_rank = *std::min_element(average_ranks.begin(), average_ranks.end());

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return average_ranks[a] < average_ranks[b]; });
    std::vector<int> ordinal(k);
    for (int pos = 0; pos < k; ++pos) ordinal[order[pos]] = pos + 1;

    for (int i = 0; i < k; ++i) {
        table.rows.push_back(
            {algorithms[i], average_ranks[i], average_ranks[i] / min_rank, ordinal[i]});
    }

    if (n_functions > 0) {
        // chi^2_F = 12N / (K(K+1)) * (sum R_j^2 - K(K+1)^2 / 4)
        double sum_sq = 0.0;
        for (double r : average_ranks) sum_sq += r * r;
        const double kk = static_cast<double>(k);
        const double n = static_cast<double>(n_functions);
        table.friedman_statistic =
            12.0 * n / (kk * (kk + 1.0)) * (sum_sq - kk * (kk + 1.0) * (kk + 1.0) / 4.0);
    }
    return table;
}

RankingTable friedman_ranks(const std::vector<std::string>& algorithms,
                            const std::vector<std::vector<double>>& mean_errors) {
    const int k = static_cast<int>(algorithms.size());
    const int n = static_cast<int>(mean_errors.size());
    if (k < 2) throw std::invalid_argument("friedman_ranks: at least 2 algorithms required");
    if (n < 1) throw std::invalid_argument("friedman_ranks: at least 1 function required");

    std::vector<double> rank_sums(k, 0.0);
    for (const auto& row : mean_errors) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("friedman_ranks: incomplete row");
        for (double v : row)
            if (std::isnan(v)) throw std::invalid_argument("friedman_ranks: missing cell");
        const std::vector<double> ranks = fractional_ranks(row);
        for (int j = 0; j < k; ++j) rank_sums[j] += ranks[j];
    }
    std::vector<double> averages(k);
    for (int j = 0; j < k; ++j) averages[j] = rank_sums[j] / static_cast<double>(n);
    return ranking_from_averages(algorithms, averages, n);
}

namespace {

constexpr double kLogFloor = 1e-300;

double log10_floored(double v) { return std::log10(std::max(v, kLogFloor)); }

// R-7 linear interpolation of order statistics
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

BoxStats boxplot_stats(std::vector<double> errors) {
    if (errors.empty()) throw std::invalid_argument("boxplot_stats: at least 1 trial required");
    for (auto& e : errors) e = log10_floored(e);
    std::sort(errors.begin(), errors.end());
    BoxStats b;
    b.min = errors.front();
    b.q1 = quantile_sorted(errors, 0.25);
    b.median = quantile_sorted(errors, 0.5);
    b.q3 = quantile_sorted(errors, 0.75);
    b.max = errors.back();
    return b;
}

ConvergenceSeries convergence_series(const std::vector<std::vector<double>>& error_traces,
                                     int np) {
    if (error_traces.empty())
        throw std::invalid_argument("convergence_series: at least 1 trace required");
    const std::size_t len = error_traces.front().size();
    for (const auto& t : error_traces)
        if (t.size() != len)
            throw std::invalid_argument("convergence_series: trace length mismatch");

    ConvergenceSeries s;
    s.evaluations.resize(len);
    s.log_mean_error.resize(len);
    for (std::size_t g = 0; g < len; ++g) {
        s.evaluations[g] = static_cast<double>(np) * static_cast<double>(g);
        double sum = 0.0;
        for (const auto& t : error_traces) sum += t[g];
        s.log_mean_error[g] = log10_floored(sum / static_cast<double>(error_traces.size()));
    }
    return s;
}

} // namespace gwode
