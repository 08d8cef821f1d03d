#pragma once

#include <vector>

#include "gwode/core.hpp"
#include "gwode/de.hpp"
#include "gwode/gwo.hpp"

namespace gwode {

/// Active kernel of the hybrid. Flag values follow the switching controller's
/// numbering: GWO=1, DE/best/1/bin=2, jDE=3.
enum class HybridMode : int { gwo = 1, de_best = 2, jde = 3 };

const char* mode_name(HybridMode m);

struct ModeEvent {
    int generation;
    HybridMode mode;
    bool operator==(const ModeEvent&) const = default;
};

/// Switching state: the stagnation counter q counts consecutive generations
/// without best-so-far improvement; crossing the active mode's threshold
/// rotates GWO -> DE/best/1/bin -> jDE -> GWO and resets q.
struct HybridState {
    HybridMode mode = HybridMode::gwo;
    int q = 0;
    int q1 = 10;
    int q2 = 20;
    int q3 = 60;
    // a generation counts as successful only when it improves the best by
    // more than this relative margin; 0 demands any strict improvement
    double improvement_rel_tol = 0.0;
    Candidate best_so_far;
    std::vector<ModeEvent> mode_timeline; // starts with {0, gwo}
};

HybridState make_hybrid_state(int q1, int q2, int q3, const Candidate& initial_best,
                              double improvement_rel_tol = 0.0);

/// Once per generation: new_best >= prev_best - rel_tol * |prev_best| counts
/// as stagnation (q += 1), otherwise q resets to 0. The caller refreshes
/// best_so_far on any strict improvement. Non-finite fitness is rejected.
void record_outcome(HybridState& state, double prev_best, double new_best);

/// Mode-dependent threshold check (strict >): gwo switches past q1,
/// de_best past q2, jde past q3. A switch resets q and appends
/// (generation, new mode) to the timeline.
void maybe_switch(HybridState& state, int generation);

/// One generation of the active kernel on the shared population, followed by
/// the stagnation bookkeeping and switch check. Exactly np evaluations.
/// Per-member jDE parameters live on the candidates and persist across mode
/// switches.
void hybrid_generation_into(HybridState& state, const Population& in, Population& out, int t,
                            int t_max, const RngStream& trial_rng, const EvalFn& objective,
                            const SearchSpace& space, const DeControl& de_control,
                            const JdeConfig& jde_config,
                            ExecPolicy policy = ExecPolicy::openmp);

} // namespace gwode
