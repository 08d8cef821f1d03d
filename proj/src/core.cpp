#include "gwode/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwode {

SearchSpace::SearchSpace(std::vector<double> lo, std::vector<double> up)
    : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("SearchSpace: bounds must be non-empty and equal length");
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("SearchSpace: lower[i] < upper[i] required");
}

SearchSpace SearchSpace::box(int dimension, double lo, double up) {
    if (dimension < 1) throw std::invalid_argument("SearchSpace: dimension >= 1 required");
    return SearchSpace(std::vector<double>(dimension, lo), std::vector<double>(dimension, up));
}

bool Population::fully_evaluated() const {
    return std::all_of(members.begin(), members.end(),
                       [](const Candidate& c) { return c.evaluated(); });
}

int Population::best_index() const {
    if (members.empty()) throw std::logic_error("Population: empty");
    int best = 0;
    for (int i = 1; i < size(); ++i) {
        if (!members[i].evaluated() || !members[best].evaluated())
            throw std::logic_error("Population: fitness not evaluated");
        if (*members[i].fitness < *members[best].fitness) best = i;
    }
    return best;
}

void clamp_in_place(std::span<double> position, const SearchSpace& space) {
    if (static_cast<int>(position.size()) != space.dimension())
        throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    for (std::size_t i = 0; i < position.size(); ++i)
        position[i] = std::min(space.upper[i], std::max(space.lower[i], position[i]));
}

std::vector<double> clamp_to_bounds(std::vector<double> position, const SearchSpace& space) {
    clamp_in_place(position, space);
    return position;
}

Population uniform_init(const SearchSpace& space, int np, RngStream& rng) {
    if (np < 4) throw std::invalid_argument("uniform_init: np >= 4 required");
    Population pop;
    pop.generation = 0;
    pop.members.resize(np);
    const int d = space.dimension();
    for (auto& member : pop.members) {
        member.position.resize(d);
        for (int k = 0; k < d; ++k)
            member.position[k] = rng.uniform(space.lower[k], space.upper[k]);
    }
    return pop;
}

void evaluate_population(Population& pop, const EvalFn& objective, ExecPolicy policy) {
    const int np = pop.size();
    if (policy == ExecPolicy::openmp) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < np; ++i)
            pop.members[i].fitness = objective(pop.members[i].position);
    } else {
        for (int i = 0; i < np; ++i)
            pop.members[i].fitness = objective(pop.members[i].position);
    }
}

} // namespace gwode
