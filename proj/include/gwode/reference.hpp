#pragma once

#include "gwode/core.hpp"
#include "gwode/de.hpp"
#include "gwode/gwo.hpp"

namespace gwode::reference {

// Plain serial drivers written against the public per-member operators
// (sample_coefficients/gwo_move, mutate_*/binomial_crossover/jde_adapt/
// greedy_select). They re-derive the per-member substreams independently and
// must match the OpenMP kernels bit for bit; kept for testing and for the
// kernel benchmark.

Population gwo_generation_serial(const Population& in, int t, int t_max,
                                 const RngStream& trial_rng, const EvalFn& objective,
                                 const SearchSpace& space);

Population de_generation_serial(const Population& in, DeStrategy strategy,
                                const DeControl& control, const JdeConfig& jde_config, int t,
                                const RngStream& trial_rng, const EvalFn& objective,
                                const SearchSpace& space);

} // namespace gwode::reference
