#include "gwode/de.hpp"

#include <initializer_list>
#include <stdexcept>

namespace gwode {

namespace {

int draw_index_excluding(int np, std::initializer_list<int> excluded, RngStream& rng) {
    for (;;) {
        const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(np)));
        bool hit = false;
        for (int e : excluded)
            if (r == e) {
                hit = true;
                break;
            }
        if (!hit) return r;
    }
}

void mutate_rand_1_into(const Population& pop, int m, double f, RngStream& rng,
                        std::span<double> out) {
    const int np = pop.size();
    if (np < 4) throw std::invalid_argument("mutate_rand_1: np >= 4 required");
    const int r1 = draw_index_excluding(np, {m}, rng);
    const int r2 = draw_index_excluding(np, {m, r1}, rng);
    const int r3 = draw_index_excluding(np, {m, r1, r2}, rng);
    const auto& a = pop.members[r1].position;
    const auto& b = pop.members[r2].position;
    const auto& c = pop.members[r3].position;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + f * (b[k] - c[k]);
}

void mutate_best_1_into(const Population& pop, int best, int m, double f, RngStream& rng,
                        std::span<double> out) {
    const int np = pop.size();
    if (np < 4) throw std::invalid_argument("mutate_best_1: np >= 4 required");
    const int r1 = draw_index_excluding(np, {m, best}, rng);
    const int r2 = draw_index_excluding(np, {m, best, r1}, rng);
    const auto& a = pop.members[best].position;
    const auto& b = pop.members[r1].position;
    const auto& c = pop.members[r2].position;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + f * (b[k] - c[k]);
}

void binomial_crossover_into(std::span<const double> target, std::span<const double> mutant,
                             double cr, RngStream& rng, std::span<double> out) {
    const std::size_t d = target.size();
    if (mutant.size() != d || out.size() != d)
        throw std::invalid_argument("binomial_crossover: dimension mismatch");
    const std::size_t rn = rng.below(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double r = rng.uniform01();
        out[k] = (r < cr || k == rn) ? mutant[k] : target[k];
    }
}

} // namespace

std::vector<double> mutate_rand_1(const Population& pop, int m, double f, RngStream& rng) {
    std::vector<double> out(pop.members.at(m).position.size());
    mutate_rand_1_into(pop, m, f, rng, out);
    return out;
}

std::vector<double> mutate_best_1(const Population& pop, int best, int m, double f,
                                  RngStream& rng) {
    std::vector<double> out(pop.members.at(m).position.size());
    mutate_best_1_into(pop, best, m, f, rng, out);
    return out;
}

std::vector<double> binomial_crossover(std::span<const double> target,
                                       std::span<const double> mutant, double cr,
                                       RngStream& rng) {
    if (target.empty()) throw std::invalid_argument("binomial_crossover: empty vectors");
    std::vector<double> out(target.size());
    binomial_crossover_into(target, mutant, cr, rng, out);
    return out;
}

Candidate greedy_select(const Candidate& target, const Candidate& trial) {
    if (!target.evaluated() || !trial.evaluated())
        throw std::logic_error("greedy_select: fitness not evaluated");
    return (*trial.fitness < *target.fitness) ? trial : target;
}

DeControl jde_adapt(const DeControl& control, const JdeConfig& config, RngStream& rng) {
    // all four draws happen every call, so stream consumption is fixed
    const double rnd1 = rng.uniform01_closed();
    const double rnd2 = rng.uniform01_closed();
    const double rnd3 = rng.uniform01_closed();
    const double rnd4 = rng.uniform01_closed();
    DeControl next = control;
    if (rnd2 < config.prob1) next.f = config.f_lower + rnd1 * config.f_upper;
    if (rnd4 < config.prob2) next.cr = rnd3;
    return next;
}

void de_generation_into(const Population& in, Population& out, DeStrategy strategy,
                        const DeControl& control, const JdeConfig& jde_config, int t,
                        const RngStream& trial_rng, const EvalFn& objective,
                        const SearchSpace& space, ExecPolicy policy) {
    if (!in.fully_evaluated()) throw std::logic_error("de_generation: population not evaluated");
    const int np = in.size();
    if (np < 4) throw std::invalid_argument("de_generation: np >= 4 required");
    const int d = space.dimension();
    const int best = (strategy == DeStrategy::best_1) ? in.best_index() : -1;
    const std::uint64_t step = static_cast<std::uint64_t>(t) + 1;

    out.members.resize(np);
    out.generation = t + 1;

    auto member_step = [&](int m, std::span<double> mutant) {
        Candidate& dst = out.members[m];
        const Candidate& tgt = in.members[m];
        dst.position.resize(d);
        RngStream sub = trial_rng.derive(step, static_cast<std::uint64_t>(m));

        double f = control.f;
        double cr = control.cr;
        if (strategy == DeStrategy::jde) {
            const DeControl current{tgt.f_param.value_or(jde_config.initial_f),
                                    tgt.cr_param.value_or(jde_config.initial_cr)};
            const DeControl adapted = jde_adapt(current, jde_config, sub);
            f = adapted.f;
            cr = adapted.cr;
        }

        if (strategy == DeStrategy::best_1)
            mutate_best_1_into(in, best, m, f, sub, mutant);
        else
            mutate_rand_1_into(in, m, f, sub, mutant);

        binomial_crossover_into(tgt.position, mutant, cr, sub, dst.position);
        clamp_in_place(dst.position, space);
        const double trial_fitness = objective(dst.position);

        if (trial_fitness < *tgt.fitness) {
            dst.fitness = trial_fitness;
            if (strategy == DeStrategy::jde) {
                dst.f_param = f;
                dst.cr_param = cr;
            } else {
                dst.f_param = tgt.f_param;
                dst.cr_param = tgt.cr_param;
            }
        } else {
            dst.position = tgt.position;
            dst.fitness = tgt.fitness;
            dst.f_param = tgt.f_param;
            dst.cr_param = tgt.cr_param;
        }
    };

    if (policy == ExecPolicy::openmp) {
#pragma omp parallel
        {
            std::vector<double> mutant(d);
#pragma omp for schedule(static)
            for (int m = 0; m < np; ++m) member_step(m, mutant);
        }
    } else {
        std::vector<double> mutant(d);
        for (int m = 0; m < np; ++m) member_step(m, mutant);
    }
}

Population de_generation(const Population& in, DeStrategy strategy, const DeControl& control,
                         const JdeConfig& jde_config, int t, const RngStream& trial_rng,
                         const EvalFn& objective, const SearchSpace& space, ExecPolicy policy) {
    Population out;
    de_generation_into(in, out, strategy, control, jde_config, t, trial_rng, objective, space,
                       policy);
    return out;
}

} // namespace gwode
