#include "gwode/hybrid.hpp"

#include <cmath>
#include <stdexcept>

namespace gwode {

const char* mode_name(HybridMode m) {
    switch (m) {
    case HybridMode::gwo: return "gwo";
    case HybridMode::de_best: return "de_best";
    case HybridMode::jde: return "jde";
    }
    return "?";
}

HybridState make_hybrid_state(int q1, int q2, int q3, const Candidate& initial_best,
                              double improvement_rel_tol) {
    if (q1 < 0 || q2 < 0 || q3 < 0)
        throw std::invalid_argument("hybrid: thresholds must be non-negative");
    if (improvement_rel_tol < 0.0 || improvement_rel_tol >= 1.0)
        throw std::invalid_argument("hybrid: improvement_rel_tol must lie in [0, 1)");
    if (!initial_best.evaluated())
        throw std::logic_error("hybrid: initial best must be evaluated");
    HybridState s;
    s.q1 = q1;
    s.q2 = q2;
    s.q3 = q3;
    s.improvement_rel_tol = improvement_rel_tol;
    s.best_so_far = initial_best;
    s.mode_timeline = {{0, HybridMode::gwo}};
    return s;
}

void record_outcome(HybridState& state, double prev_best, double new_best) {
    if (!std::isfinite(prev_best) || !std::isfinite(new_best))
        throw std::domain_error("record_outcome: non-finite fitness");
    const double margin = state.improvement_rel_tol * std::fabs(prev_best);
    if (new_best >= prev_best - margin)
        ++state.q;
    else
        state.q = 0;
}

void maybe_switch(HybridState& state, int generation) {
    HybridMode next = state.mode;
    switch (state.mode) {
    case HybridMode::gwo:
        if (state.q > state.q1) next = HybridMode::de_best;
        break;
    case HybridMode::de_best:
        if (state.q > state.q2) next = HybridMode::jde;
        break;
    case HybridMode::jde:
        if (state.q > state.q3) next = HybridMode::gwo;
        break;
    }
    if (next != state.mode) {
        state.mode = next;
        state.q = 0;
        state.mode_timeline.push_back({generation, next});
    }
}

void hybrid_generation_into(HybridState& state, const Population& in, Population& out, int t,
                            int t_max, const RngStream& trial_rng, const EvalFn& objective,
                            const SearchSpace& space, const DeControl& de_control,
                            const JdeConfig& jde_config, ExecPolicy policy) {
    switch (state.mode) {
    case HybridMode::gwo:
        gwo_generation_into(in, out, t, t_max, trial_rng, objective, space, policy);
        break;
    case HybridMode::de_best:
        de_generation_into(in, out, DeStrategy::best_1, de_control, jde_config, t, trial_rng,
                           objective, space, policy);
        break;
    case HybridMode::jde:
        de_generation_into(in, out, DeStrategy::jde, de_control, jde_config, t, trial_rng,
                           objective, space, policy);
        break;
    }

    const int new_best_index = out.best_index();
    const double new_best = *out.members[new_best_index].fitness;
    const double prev_best = *state.best_so_far.fitness;
    record_outcome(state, prev_best, new_best);
    if (new_best < prev_best) state.best_so_far = out.members[new_best_index];
    maybe_switch(state, t + 1);
}

} // namespace gwode
