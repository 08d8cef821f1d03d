#pragma once

#include <span>
#include <vector>

#include "gwode/core.hpp"

namespace gwode {

enum class DeStrategy { rand_1, best_1, jde };

/// Fixed DE control parameters. Recommended ranges are F in [0.5, 1] and
/// CR in [0.8, 1]; defaults F=0.9, CR=0.9.
struct DeControl {
    double f = 0.9;
    double cr = 0.9;
};

/// Self-adaptation constants. Adapted F stays in
/// [f_lower, f_lower + f_upper] = [0.1, 1.0]; CR resamples over [0, 1].
struct JdeConfig {
    double f_lower = 0.1;
    double f_upper = 0.9;
    double prob1 = 0.1;
    double prob2 = 0.1;
    // first-use per-member values, applied before any adaptation
    double initial_f = 0.5;
    double initial_cr = 0.9;
};

/// rand/1 mutant: X_r1 + f * (X_r2 - X_r3) with r1, r2, r3 mutually distinct
/// and distinct from m. No boundary repair.
std::vector<double> mutate_rand_1(const Population& pop, int m, double f, RngStream& rng);

/// best/1 mutant: X_best + f * (X_r1 - X_r2) with r1 != r2, both distinct
/// from m and from best.
std::vector<double> mutate_best_1(const Population& pop, int best, int m, double f,
                                  RngStream& rng);

/// Binomial crossover: coordinate k inherits the mutant gene iff
/// rand_k < cr or k is the forced index rn(m); at least one gene always comes
/// from the mutant.
std::vector<double> binomial_crossover(std::span<const double> target,
                                       std::span<const double> mutant, double cr,
                                       RngStream& rng);

/// Greedy selection: the trial replaces the target only on strict fitness
/// improvement; ties keep the old vector.
Candidate greedy_select(const Candidate& target, const Candidate& trial);

/// Per-generation self-adaptation. Draws rnd1..rnd4 from [0,1]; F resamples
/// to f_lower + rnd1 * f_upper when rnd2 < prob1, CR to rnd3 when
/// rnd4 < prob2. The adapted values drive the same generation's variation.
DeControl jde_adapt(const DeControl& control, const JdeConfig& config, RngStream& rng);

/// One DE generation: per member adapt (jde only), mutate, crossover, clamp,
/// evaluate, select. Exactly np evaluations. Surviving trials carry their
/// possibly adapted control parameters; rejected trials keep the old ones.
/// Per-member randomness comes from trial_rng.derive(t + 1, member).
void de_generation_into(const Population& in, Population& out, DeStrategy strategy,
                        const DeControl& control, const JdeConfig& jde_config, int t,
                        const RngStream& trial_rng, const EvalFn& objective,
                        const SearchSpace& space, ExecPolicy policy = ExecPolicy::openmp);

Population de_generation(const Population& in, DeStrategy strategy, const DeControl& control,
                         const JdeConfig& jde_config, int t, const RngStream& trial_rng,
                         const EvalFn& objective, const SearchSpace& space,
                         ExecPolicy policy = ExecPolicy::openmp);

} // namespace gwode
