#include "gwode/reference.hpp"

namespace gwode::reference {

Population gwo_generation_serial(const Population& in, int t, int t_max,
                                 const RngStream& trial_rng, const EvalFn& objective,
                                 const SearchSpace& space) {
    const LeaderTriple leaders = select_leaders(in);
    const double u = coefficient_u(t, t_max);
    Population out;
    out.generation = t + 1;
    out.members.reserve(in.size());
    for (int m = 0; m < in.size(); ++m) {
        RngStream sub = trial_rng.derive(static_cast<std::uint64_t>(t) + 1,
                                         static_cast<std::uint64_t>(m));
        GwoCoefficients coeffs = sample_coefficients(u, space.dimension(), sub);
        Candidate next = in.members[m];
        next.position = clamp_to_bounds(gwo_move(in.members[m].position, leaders, coeffs), space);
        next.fitness = objective(next.position);
        out.members.push_back(std::move(next));
    }
    return out;
}

Population de_generation_serial(const Population& in, DeStrategy strategy,
                                const DeControl& control, const JdeConfig& jde_config, int t,
                                const RngStream& trial_rng, const EvalFn& objective,
                                const SearchSpace& space) {
    const int best = (strategy == DeStrategy::best_1) ? in.best_index() : -1;
    Population out;
    out.generation = t + 1;
    out.members.reserve(in.size());
    for (int m = 0; m < in.size(); ++m) {
        RngStream sub = trial_rng.derive(static_cast<std::uint64_t>(t) + 1,
                                         static_cast<std::uint64_t>(m));
        const Candidate& target = in.members[m];

        DeControl active = control;
        if (strategy == DeStrategy::jde) {
            const DeControl current{target.f_param.value_or(jde_config.initial_f),
                                    target.cr_param.value_or(jde_config.initial_cr)};
            active = jde_adapt(current, jde_config, sub);
        }

        std::vector<double> mutant =
            (strategy == DeStrategy::best_1)
                ? mutate_best_1(in, best, m, active.f, sub)
                : mutate_rand_1(in, m, active.f, sub);

        Candidate trial = target;
        trial.position =
            clamp_to_bounds(binomial_crossover(target.position, mutant, active.cr, sub), space);
        trial.fitness = objective(trial.position);
        if (strategy == DeStrategy::jde) {
            trial.f_param = active.f;
            trial.cr_param = active.cr;
        }
        out.members.push_back(greedy_select(target, trial));
    }
    return out;
}

} // namespace gwode::reference
