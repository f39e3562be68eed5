#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernels.hpp"
#include "problem.hpp"
#include "prng.hpp"

// The three algorithms as per-iteration steps over a shared SwarmState, plus
// the run loop. Draw order is pinned per agent so a run replays bit-exactly
// from its seed:
//   WOA:     r_A, r_C, k, p, then (for the random-search branch) the index.
//   GWO:     per dimension, (r_A, r_C) for alpha, beta, delta in that order;
//            per-agent granularity draws the six scalars up front instead.
//   WOAGWO:  r_A, r_C, p; the exploration branches then draw what they need;
//            the hunt branch draws (r_A, r_C) x 3.

namespace woagwo {

enum class Algorithm { woa, gwo, woagwo };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::woa: return "WOA";
        case Algorithm::gwo: return "GWO";
        case Algorithm::woagwo: return "WOAGWO";
    }
    return "?";
}

// Gate on the hunt branch. The printed condition "(A1 > -1 || A1 < 1)" holds
// for every real, so literal means the hunt always fires on the p >= 0.5
// side; conjunctive reads the accompanying prose as -1 < Ai < 1 for all
// three. Literal is the default: it reproduces the published result tables
// markedly better (see README), which is strong evidence the original code
// executed the printed always-true gate.
enum class HuntCondition { conjunctive, literal };
// Algorithm 3 gives no action when the hunt gate fails; stay is the literal
// reading, spiral is the bubble-net move as a configurable alternative.
enum class ExploitFallback { stay, spiral };
// Reference for greedy acceptance: the agent's own previous fitness
// (pseudocode) or the global best (prose).
enum class GreedyReference { own_previous, global_best };
enum class CoeffGranularity { per_dimension, per_agent };
// How a new best point enters the alpha/beta/delta records. three_best keeps
// the three best points ever seen (a new alpha demotes the old one to beta).
// overwrite is the published reference GWO behavior: a new alpha replaces the
// old without demotion, so beta and delta lag behind; the lag keeps more
// diversity in the pull targets and reproduces the published convergence
// magnitudes.
enum class LeaderUpdate { three_best, overwrite };

struct OptimizerParams {
    std::size_t pop_size = 30;
    std::size_t max_iter = 500;
    double spiral_b = 1.0;
    HuntCondition hunt_condition = HuntCondition::literal;
    ExploitFallback exploitation_fallback = ExploitFallback::stay;
    GreedyReference greedy_reference = GreedyReference::own_previous;
    // Unset: per_dimension for GWO, per_agent for the hunt inside WOAGWO.
    std::optional<CoeffGranularity> gwo_coeff_granularity;
    LeaderUpdate leader_update = LeaderUpdate::overwrite;
    AFormula a_formula = AFormula::range_consistent;

    bool operator==(const OptimizerParams&) const = default;
};

inline void validate(const OptimizerParams& params) {
    if (params.pop_size < 2)
        throw std::invalid_argument("OptimizerParams: pop_size must be >= 2");
    if (params.max_iter < 1)
        throw std::invalid_argument("OptimizerParams: max_iter must be >= 1");
    if (!std::isfinite(params.spiral_b))
        throw std::invalid_argument("OptimizerParams: spiral_b must be finite");
}

struct LeaderRecord {
    std::vector<double> position;
    double fitness = std::numeric_limits<double>::infinity();
};

struct SwarmState {
    std::vector<std::vector<double>> positions;
    std::vector<double> fitness;
    std::array<LeaderRecord, 3> leaders; // alpha, beta, delta: best-first
    std::size_t iter = 0;
    std::uint64_t evals = 0;
    RandomStream stream;
};

namespace detail {

// Insert one observation into the alpha/beta/delta records (strict
// improvement only). three_best demotes displaced leaders so the trio is
// exactly the three best points seen so far; overwrite replicates the
// reference GWO conditions, where an improved alpha simply replaces the old
// one.
inline void absorb_leader(std::array<LeaderRecord, 3>& leaders, std::span<const double> pos,
                          double fit, LeaderUpdate mode) {
    auto record = [&] { return LeaderRecord{std::vector<double>(pos.begin(), pos.end()), fit}; };
    if (mode == LeaderUpdate::three_best) {
        if (fit < leaders[0].fitness) {
            leaders[2] = std::move(leaders[1]);
            leaders[1] = std::move(leaders[0]);
            leaders[0] = record();
        } else if (fit < leaders[1].fitness) {
            leaders[2] = std::move(leaders[1]);
            leaders[1] = record();
        } else if (fit < leaders[2].fitness) {
            leaders[2] = record();
        }
        return;
    }
    if (fit < leaders[0].fitness)
        leaders[0] = record();
    else if (fit > leaders[0].fitness && fit < leaders[1].fitness)
        leaders[1] = record();
    else if (fit > leaders[0].fitness && fit > leaders[1].fitness && fit < leaders[2].fitness)
        leaders[2] = record();
}

// Evaluate every agent in index order, refresh caches, fold into leaders.
inline void sweep_evaluate(SwarmState& state, const Problem& problem, LeaderUpdate mode) {
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        state.fitness[i] = evaluate(problem, state.positions[i], &state.stream);
        ++state.evals;
    }
    for (std::size_t i = 0; i < state.positions.size(); ++i)
        absorb_leader(state.leaders, state.positions[i], state.fitness[i], mode);
}

inline std::size_t random_index(SwarmState& state) {
    auto idx = static_cast<std::size_t>(state.stream.unit() *
                                        static_cast<double>(state.positions.size()));
    return idx < state.positions.size() ? idx : state.positions.size() - 1;
}

} // namespace detail

inline SwarmState init_swarm(const Problem& problem, const OptimizerParams& params,
                             RandomStream stream) {
    validate(params);
    SwarmState state{.positions = {}, .fitness = {}, .leaders = {}, .iter = 0, .evals = 0,
                     .stream = stream};
    const auto& space = problem.space;
    state.positions.resize(params.pop_size);
    state.fitness.assign(params.pop_size, std::numeric_limits<double>::infinity());
    for (auto& pos : state.positions) {
        pos.resize(space.dim);
        for (std::size_t d = 0; d < space.dim; ++d)
            pos[d] = state.stream.uniform(space.lower[d], space.upper[d]);
    }
    detail::sweep_evaluate(state, problem, params.leader_update);
    // Below three agents the trailing leader slots duplicate the last real one.
    if (state.leaders[1].position.empty()) state.leaders[1] = state.leaders[0];
    if (state.leaders[2].position.empty()) state.leaders[2] = state.leaders[1];
    return state;
}

inline void step_woa(SwarmState& state, const Problem& problem, const OptimizerParams& params) {
    const double a = decay_a(state.iter, params.max_iter);
    const std::vector<double> x_star = state.leaders[0].position; // fixed for the sweep
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        const auto [A, C] = coefficients(a, state.stream, params.a_formula);
        const double k = state.stream.uniform(-1.0, 1.0);
        const double p = state.stream.unit();
        std::vector<double> next;
        if (p < 0.5) {
            if (std::fabs(A) < 1.0) {
                next = encircle(state.positions[i], x_star, A, C);
            } else {
                const std::size_t j = detail::random_index(state);
                next = random_search(state.positions[i], state.positions[j], A, C);
            }
        } else {
            next = spiral(state.positions[i], x_star, params.spiral_b, k);
        }
        clamp_in_place(problem.space, next);
        state.positions[i] = std::move(next);
    }
    detail::sweep_evaluate(state, problem, params.leader_update);
    ++state.iter;
}

inline void step_gwo(SwarmState& state, const Problem& problem, const OptimizerParams& params) {
    const double a = decay_a(state.iter, params.max_iter);
    const auto gran = params.gwo_coeff_granularity.value_or(CoeffGranularity::per_dimension);
    const std::vector<double> alpha = state.leaders[0].position;
    const std::vector<double> beta = state.leaders[1].position;
    const std::vector<double> delta = state.leaders[2].position;
    const std::size_t dim = problem.space.dim;

    std::vector<double> A1(dim), A2(dim), A3(dim), C1(dim), C2(dim), C3(dim);
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        std::vector<double> next;
        if (gran == CoeffGranularity::per_dimension) {
            for (std::size_t d = 0; d < dim; ++d) {
                std::tie(A1[d], C1[d]) = coefficients(a, state.stream, params.a_formula);
                std::tie(A2[d], C2[d]) = coefficients(a, state.stream, params.a_formula);
                std::tie(A3[d], C3[d]) = coefficients(a, state.stream, params.a_formula);
            }
            next = gwo_hunt(state.positions[i], alpha, beta, delta, A1, A2, A3, C1, C2, C3);
        } else {
            const auto [a1, c1] = coefficients(a, state.stream, params.a_formula);
            const auto [a2, c2] = coefficients(a, state.stream, params.a_formula);
            const auto [a3, c3] = coefficients(a, state.stream, params.a_formula);
            next = gwo_hunt(state.positions[i], alpha, beta, delta, a1, a2, a3, c1, c2, c3);
        }
        clamp_in_place(problem.space, next);
        state.positions[i] = std::move(next);
    }
    detail::sweep_evaluate(state, problem, params.leader_update);
    ++state.iter;
}

inline void step_woagwo(SwarmState& state, const Problem& problem,
                        const OptimizerParams& params) {
    const double a = decay_a(state.iter, params.max_iter);
    const auto gran = params.gwo_coeff_granularity.value_or(CoeffGranularity::per_agent);
    const std::vector<double> alpha = state.leaders[0].position;
    const std::vector<double> beta = state.leaders[1].position;
    const std::vector<double> delta = state.leaders[2].position;
    const double alpha_fitness = state.leaders[0].fitness;
    const std::size_t dim = problem.space.dim;

    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        const auto [A, C] = coefficients(a, state.stream, params.a_formula);
        const double p = state.stream.unit();
        if (p < 0.5) {
            // WOA move turned into a greedy candidate: keep it only if it
            // improves on the reference fitness.
            std::vector<double> cand;
            if (std::fabs(A) < 1.0) {
                cand = encircle(state.positions[i], alpha, A, C);
            } else {
                const std::size_t j = detail::random_index(state);
                cand = random_search(state.positions[i], state.positions[j], A, C);
            }
            clamp_in_place(problem.space, cand);
            const double f_cand = evaluate(problem, cand, &state.stream);
            ++state.evals;
            const double ref = params.greedy_reference == GreedyReference::own_previous
                                   ? state.fitness[i]
                                   : alpha_fitness;
            if (f_cand < ref) {
                state.positions[i] = std::move(cand);
                state.fitness[i] = f_cand;
            }
        } else {
            bool hunt;
            std::vector<double> next;
            if (gran == CoeffGranularity::per_agent) {
                const auto [a1, c1] = coefficients(a, state.stream, params.a_formula);
                const auto [a2, c2] = coefficients(a, state.stream, params.a_formula);
                const auto [a3, c3] = coefficients(a, state.stream, params.a_formula);
                hunt = params.hunt_condition == HuntCondition::literal ||
                       (std::fabs(a1) < 1.0 && std::fabs(a2) < 1.0 && std::fabs(a3) < 1.0);
                if (hunt)
                    next = gwo_hunt(state.positions[i], alpha, beta, delta, a1, a2, a3, c1, c2,
                                    c3);
            } else {
                std::vector<double> A1(dim), A2(dim), A3(dim), C1(dim), C2(dim), C3(dim);
                bool all_in = true;
                for (std::size_t d = 0; d < dim; ++d) {
                    std::tie(A1[d], C1[d]) = coefficients(a, state.stream, params.a_formula);
                    std::tie(A2[d], C2[d]) = coefficients(a, state.stream, params.a_formula);
                    std::tie(A3[d], C3[d]) = coefficients(a, state.stream, params.a_formula);
                    all_in = all_in && std::fabs(A1[d]) < 1.0 && std::fabs(A2[d]) < 1.0 &&
                             std::fabs(A3[d]) < 1.0;
                }
                hunt = params.hunt_condition == HuntCondition::literal || all_in;
                if (hunt)
                    next = gwo_hunt(state.positions[i], alpha, beta, delta, A1, A2, A3, C1, C2,
                                    C3);
            }
            if (hunt) {
                state.positions[i] = std::move(next);
            } else if (params.exploitation_fallback == ExploitFallback::spiral) {
                const double k = state.stream.uniform(-1.0, 1.0);
                state.positions[i] = spiral(state.positions[i], alpha, params.spiral_b, k);
            } // stay: keep position
        }
    }
    for (auto& pos : state.positions) clamp_in_place(problem.space, pos);
    detail::sweep_evaluate(state, problem, params.leader_update);
    ++state.iter;
}

inline void step(Algorithm algorithm, SwarmState& state, const Problem& problem,
                 const OptimizerParams& params) {
    switch (algorithm) {
        case Algorithm::woa: step_woa(state, problem, params); return;
        case Algorithm::gwo: step_gwo(state, problem, params); return;
        case Algorithm::woagwo: step_woagwo(state, problem, params); return;
    }
    throw std::invalid_argument("step: unknown algorithm");
}

struct RunTrace {
    std::vector<double> best_curve; // best-so-far after each iteration
    std::vector<double> best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::uint64_t evals = 0;
    std::uint64_t seed = 0;
};

inline RunTrace run(Algorithm algorithm, const Problem& problem, const OptimizerParams& params,
                    RandomStream stream) {
    const std::uint64_t seed = stream.seed();
    SwarmState state = init_swarm(problem, params, stream);
    RunTrace trace;
    trace.seed = seed;
    trace.best_curve.reserve(params.max_iter);
    for (std::size_t it = 0; it < params.max_iter; ++it) {
        step(algorithm, state, problem, params);
        trace.best_curve.push_back(state.leaders[0].fitness);
    }
    trace.best_position = state.leaders[0].position;
    trace.best_fitness = state.leaders[0].fitness;
    trace.evals = state.evals;
    return trace;
}

} // namespace woagwo
