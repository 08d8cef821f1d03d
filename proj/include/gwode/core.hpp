#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gwode/rng.hpp"

namespace gwode {

/// How a population-level kernel walks its members.
enum class ExecPolicy { serial, openmp };

/// Objective callable; must be pure (same x -> same value).
using EvalFn = std::function<double(std::span<const double>)>;

/// Box-constrained search domain.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    SearchSpace(std::vector<double> lo, std::vector<double> up);
    static SearchSpace box(int dimension, double lo, double up);

    int dimension() const { return static_cast<int>(lower.size()); }
};

/// One population member: position, cached fitness, and the per-individual
/// control parameters carried by the self-adaptive DE scheme.
struct Candidate {
    std::vector<double> position;
    std::optional<double> fitness;
    std::optional<double> f_param;  // in [0.1, 1.0] when present
    std::optional<double> cr_param; // in [0, 1] when present

    bool evaluated() const { return fitness.has_value(); }
};

struct Population {
    std::vector<Candidate> members;
    int generation = 0;

    int size() const { return static_cast<int>(members.size()); }
    bool fully_evaluated() const;
    /// Index of the minimum-fitness member, ties broken by lowest index.
    int best_index() const;
};

/// Projects each coordinate onto [lower, upper]. In-bounds input is returned
/// unchanged; idempotent.
std::vector<double> clamp_to_bounds(std::vector<double> position, const SearchSpace& space);
void clamp_in_place(std::span<double> position, const SearchSpace& space);

/// Independent uniform draws inside the box; fitness left unevaluated.
/// np >= 4 (DE mutation needs four distinct indices).
Population uniform_init(const SearchSpace& space, int np, RngStream& rng);

void evaluate_population(Population& pop, const EvalFn& objective,
                         ExecPolicy policy = ExecPolicy::openmp);

} // namespace gwode
