#pragma once

#include <array>
#include <span>
#include <vector>

#include "gwode/core.hpp"

namespace gwode {

/// The three best wolves guiding a move: fitness(alpha) <= fitness(beta) <=
/// fitness(delta), ties broken by lowest member index.
struct LeaderTriple {
    Candidate alpha;
    Candidate beta;
    Candidate delta;

    const Candidate& leader(int i) const {
        return i == 0 ? alpha : (i == 1 ? beta : delta);
    }
};

/// Per-move coefficient sets, one c1/c2 vector per leader.
/// c1 coordinates lie in [-u, u], c2 coordinates in [0, 2].
struct GwoCoefficients {
    double u = 0.0;
    std::array<std::vector<double>, 3> c1;
    std::array<std::vector<double>, 3> c2;
};

/// Exploration coefficient, decreasing linearly from 2 at t=0 to 0 at t=t_max.
double coefficient_u(int t, int t_max);

/// Fresh coefficients for one member move. Draw order is fixed: for each
/// leader, for each coordinate, one draw for c1 then one for c2.
GwoCoefficients sample_coefficients(double u, int dimension, RngStream& rng);

/// Three-leader position update: per leader L, V_L = |c2_L * W_L - W| and
/// W_L' = W_L - c1_L * V_L (coordinate-wise); result is the mean of the three
/// W_L'. No boundary repair applied.
std::vector<double> gwo_move(std::span<const double> wolf, const LeaderTriple& leaders,
                             const GwoCoefficients& coeffs);

/// Best three members of a fully evaluated population; the population is not
/// modified. Requires np >= 3.
LeaderTriple select_leaders(const Population& pop);

/// One generation: every member is replaced by its move result (fresh
/// coefficients per member), clamped and re-evaluated. Consumes exactly np
/// objective evaluations; out.generation = t + 1. Per-member randomness comes
/// from trial_rng.derive(t + 1, member), so the policies agree bit for bit.
void gwo_generation_into(const Population& in, Population& out, int t, int t_max,
                         const RngStream& trial_rng, const EvalFn& objective,
                         const SearchSpace& space, ExecPolicy policy = ExecPolicy::openmp);

Population gwo_generation(const Population& in, int t, int t_max, const RngStream& trial_rng,
                          const EvalFn& objective, const SearchSpace& space,
                          ExecPolicy policy = ExecPolicy::openmp);

} // namespace gwode
