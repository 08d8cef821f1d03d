#include "gwode/gwo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwode {

double coefficient_u(int t, int t_max) {
    if (t_max < 1) throw std::invalid_argument("coefficient_u: t_max >= 1 required");
    if (t < 0 || t > t_max) throw std::invalid_argument("coefficient_u: 0 <= t <= t_max required");
    return 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

GwoCoefficients sample_coefficients(double u, int dimension, RngStream& rng) {
    if (u < 0.0 || u > 2.0) throw std::invalid_argument("sample_coefficients: u in [0, 2] required");
    GwoCoefficients c;
    c.u = u;
    for (int l = 0; l < 3; ++l) {
        c.c1[l].resize(dimension);
        c.c2[l].resize(dimension);
        for (int k = 0; k < dimension; ++k) {
            c.c1[l][k] = 2.0 * u * rng.uniform01() - u;
            c.c2[l][k] = 2.0 * rng.uniform01();
        }
    }
    return c;
}

std::vector<double> gwo_move(std::span<const double> wolf, const LeaderTriple& leaders,
                             const GwoCoefficients& coeffs) {
    const std::size_t d = wolf.size();
    for (int l = 0; l < 3; ++l) {
        if (leaders.leader(l).position.size() != d || coeffs.c1[l].size() != d ||
            coeffs.c2[l].size() != d)
            throw std::invalid_argument("gwo_move: dimension mismatch");
    }
    std::vector<double> out(d);
    const auto& wa = leaders.alpha.position;
    const auto& wb = leaders.beta.position;
    const auto& wd = leaders.delta.position;
    for (std::size_t k = 0; k < d; ++k) {
        const double va = std::fabs(coeffs.c2[0][k] * wa[k] - wolf[k]);
        const double vb = std::fabs(coeffs.c2[1][k] * wb[k] - wolf[k]);
        const double vd = std::fabs(coeffs.c2[2][k] * wd[k] - wolf[k]);
        const double w1 = wa[k] - coeffs.c1[0][k] * va;
        const double w2 = wb[k] - coeffs.c1[1][k] * vb;
        const double w3 = wd[k] - coeffs.c1[2][k] * vd;
        out[k] = (w1 + w2 + w3) / 3.0;
    }
    return out;
}

LeaderTriple select_leaders(const Population& pop) {
    const int np = pop.size();
    if (np < 3) throw std::invalid_argument("select_leaders: np >= 3 required");
    if (!pop.fully_evaluated()) throw std::logic_error("select_leaders: fitness not evaluated");
    std::array<int, 3> best = {-1, -1, -1};
    auto fit = [&](int i) { return *pop.members[i].fitness; };
    for (int i = 0; i < np; ++i) {
        // strict < keeps ties at the lowest index
        if (best[0] < 0 || fit(i) < fit(best[0])) {
            best[2] = best[1];
            best[1] = best[0];
            best[0] = i;
        } else if (best[1] < 0 || fit(i) < fit(best[1])) {
            best[2] = best[1];
            best[1] = i;
        } else if (best[2] < 0 || fit(i) < fit(best[2])) {
            best[2] = i;
        }
    }
    return LeaderTriple{pop.members[best[0]], pop.members[best[1]], pop.members[best[2]]};
}

namespace {

// Fused sample + move, writing into a preallocated position. Follows the
// sample_coefficients draw order exactly, so it matches the composed
// sample_coefficients + gwo_move path bit for bit.
void move_member(std::span<const double> wolf, const LeaderTriple& leaders, double u,
                 RngStream& rng, std::span<double> out) {
    const std::size_t d = wolf.size();
    for (int l = 0; l < 3; ++l) {
        const auto& wl = leaders.leader(l).position;
        for (std::size_t k = 0; k < d; ++k) {
            const double c1 = 2.0 * u * rng.uniform01() - u;
            const double c2 = 2.0 * rng.uniform01();
            const double v = std::fabs(c2 * wl[k] - wolf[k]);
            const double term = wl[k] - c1 * v;
            out[k] = (l == 0) ? term : out[k] + term;
        }
    }
    for (std::size_t k = 0; k < d; ++k) out[k] /= 3.0;
}

} // namespace

void gwo_generation_into(const Population& in, Population& out, int t, int t_max,
                         const RngStream& trial_rng, const EvalFn& objective,
                         const SearchSpace& space, ExecPolicy policy) {
    if (!in.fully_evaluated()) throw std::logic_error("gwo_generation: population not evaluated");
    const int np = in.size();
    const int d = space.dimension();
    const double u = coefficient_u(t, t_max);
    const LeaderTriple leaders = select_leaders(in);
    const std::uint64_t step = static_cast<std::uint64_t>(t) + 1;

    out.members.resize(np);
    out.generation = t + 1;

    auto member_step = [&](int m) {
        Candidate& dst = out.members[m];
        const Candidate& src = in.members[m];
        dst.position.resize(d);
        RngStream sub = trial_rng.derive(step, static_cast<std::uint64_t>(m));
        move_member(src.position, leaders, u, sub, dst.position);
        clamp_in_place(dst.position, space);
        dst.fitness = objective(dst.position);
        dst.f_param = src.f_param;
        dst.cr_param = src.cr_param;
    };

    if (policy == ExecPolicy::openmp) {
#pragma omp parallel for schedule(static)
        for (int m = 0; m < np; ++m) member_step(m);
    } else {
        for (int m = 0; m < np; ++m) member_step(m);
    }
}

Population gwo_generation(const Population& in, int t, int t_max, const RngStream& trial_rng,
                          const EvalFn& objective, const SearchSpace& space, ExecPolicy policy) {
    Population out;
    gwo_generation_into(in, out, t, t_max, trial_rng, objective, space, policy);
    return out;
}

} // namespace gwode
