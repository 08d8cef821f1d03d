#include "oracles.hpp"

#include <stdexcept>

namespace gwode::oracle {

std::vector<double> crossover_pattern_probabilities(int d, double cr) {
    if (d < 1 || d > 3) throw std::invalid_argument("crossover oracle: d must be 1..3");
    const int n_masks = 1 << d;
    std::vector<double> p(n_masks, 0.0);
    // coordinate k is inherited from the mutant iff rand_k < cr or k == rn
    for (int rn = 0; rn < d; ++rn) {
        for (int mask = 0; mask < n_masks; ++mask) {
            if (!(mask & (1 << rn))) continue; // the forced gene is always mutant
            double prob = 1.0 / d;
            for (int k = 0; k < d; ++k) {
                if (k == rn) continue;
                prob *= (mask & (1 << k)) ? cr : (1.0 - cr);
            }
            p[mask] += prob;
        }
    }
    return p;
}

std::vector<double> average_ranks(const std::vector<std::vector<double>>& errors) {
    const std::size_t n = errors.size();
    const std::size_t k = errors.front().size();
    std::vector<double> sums(k, 0.0);
    for (const auto& row : errors) {
        for (std::size_t j = 0; j < k; ++j) {
            // rank = 1 + #strictly smaller + half the other tied entries
            int smaller = 0;
            int tied = 0;
            for (std::size_t m = 0; m < k; ++m) {
                if (m == j) continue;
                if (row[m] < row[j]) ++smaller;
                if (row[m] == row[j]) ++tied;
            }
            sums[j] += 1.0 + smaller + tied / 2.0;
        }
    }
    for (auto& s : sums) s /= static_cast<double>(n);
    return sums;
}

std::vector<int> ordinals(const std::vector<double>& averages) {
    const std::size_t k = averages.size();
    std::vector<int> out(k);
    for (std::size_t j = 0; j < k; ++j) {
        int before = 0;
        for (std::size_t m = 0; m < k; ++m) {
            if (averages[m] < averages[j]) ++before;
            if (averages[m] == averages[j] && m < j) ++before;
        }
        out[j] = before + 1;
    }
    return out;
}

std::vector<std::pair<int, int>> hybrid_timeline(const std::vector<bool>& improved, int q1,
                                                 int q2, int q3) {
    std::vector<std::pair<int, int>> timeline = {{0, 1}};
    int flag = 1;
    int q = 0;
    for (std::size_t g = 1; g <= improved.size(); ++g) {
        if (improved[g - 1])
            q = 0;
        else
            ++q;
        const int threshold = flag == 1 ? q1 : (flag == 2 ? q2 : q3);
        if (q > threshold) {
            flag = flag == 3 ? 1 : flag + 1;
            q = 0;
            timeline.push_back({static_cast<int>(g), flag});
        }
    }
    return timeline;
}

} // namespace gwode::oracle
