#pragma once

#include <string>
#include <vector>

namespace gwode {

struct RankingRow {
    std::string algorithm;
    double average_rank = 0.0;
    double normalized = 0.0; // average_rank / min(average_rank)
    int ordinal_rank = 0;    // 1..K, ties broken by input order
};

struct RankingTable {
    std::vector<RankingRow> rows;     // input order preserved
    double friedman_statistic = 0.0;  // chi^2_F; 0 when built from averages only
    int n_functions = 0;
};

/// Friedman ranking of a complete mean-error matrix (rows functions, columns
/// algorithms). Per function, rank 1 goes to the smallest error; ties receive
/// the average of the tied positions.
RankingTable friedman_ranks(const std::vector<std::string>& algorithms,
                            const std::vector<std::vector<double>>& mean_errors);

/// Normalized and ordinal columns from already-averaged ranks.
RankingTable ranking_from_averages(const std::vector<std::string>& algorithms,
                                   const std::vector<double>& average_ranks,
                                   int n_functions = 0);

/// Fractional ranks of one row (1 = smallest value, ties averaged).
std::vector<double> fractional_ranks(const std::vector<double>& values);

/// Five-number summary of log10 errors. Errors are floored at 1e-300 before
/// the log (an exact 0 maps to -300); quartiles use linear interpolation of
/// order statistics.
struct BoxStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

BoxStats boxplot_stats(std::vector<double> errors);

/// Convergence data: xs[g] = np * g cumulative generational evaluations,
/// ys[g] = log10 of the across-trial mean error at generation g (mean first,
/// log second), floored as above.
struct ConvergenceSeries {
    std::vector<double> evaluations;
    std::vector<double> log_mean_error;
};

ConvergenceSeries convergence_series(const std::vector<std::vector<double>>& error_traces,
                                     int np);

} // namespace gwode
