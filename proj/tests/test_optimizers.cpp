#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include <woagwo/benchmarks.hpp>
#include <woagwo/optimizer.hpp>

#include "step_oracles.hpp"

using namespace woagwo;

namespace {

OptimizerParams small_params(std::size_t pop, std::size_t iters) {
    OptimizerParams p;
    p.pop_size = pop;
    p.max_iter = iters;
    return p;
}

Problem counting_problem(const Problem& base, std::size_t& counter) {
    Problem wrapped = base;
    auto inner = base.evaluator;
    wrapped.evaluator = [inner, &counter](std::span<const double> x, RandomStream* rng) {
        ++counter;
        return inner(x, rng);
    };
    return wrapped;
}

} // namespace

TEST_CASE("init_swarm places agents inside the box and seeds leaders") {
    const Problem f1 = classic23(1, 5);
    const auto params = small_params(6, 10);
    SwarmState s = init_swarm(f1, params, RandomStream(3));
    CHECK(s.positions.size() == 6);
    for (const auto& pos : s.positions) CHECK(f1.space.contains(pos));
    CHECK(s.evals == 6);
    CHECK(s.leaders[0].fitness <= s.leaders[1].fitness);
    CHECK(s.leaders[1].fitness <= s.leaders[2].fitness);
    const double best = *std::min_element(s.fitness.begin(), s.fitness.end());
    CHECK(s.leaders[0].fitness == best);
}

TEST_CASE("pop below three duplicates trailing leaders") {
    const Problem f1 = classic23(1, 3);
    SwarmState s = init_swarm(f1, small_params(2, 10), RandomStream(8));
    CHECK(s.leaders[2].fitness == s.leaders[1].fitness);
    CHECK(s.leaders[2].position == s.leaders[1].position);
}

TEST_CASE("invalid params are rejected") {
    const Problem f1 = classic23(1, 3);
    OptimizerParams p = small_params(1, 10);
    CHECK_THROWS_AS(init_swarm(f1, p, RandomStream(0)), std::invalid_argument);
    p = small_params(5, 0);
    CHECK_THROWS_AS(run(Algorithm::woa, f1, p, RandomStream(0)), std::invalid_argument);
}

TEST_CASE("woa step replays deterministically and improves the best") {
    const Problem f1 = classic23(1, 2);
    const auto params = small_params(5, 10);
    SwarmState a = init_swarm(f1, params, RandomStream(42));
    SwarmState b = init_swarm(f1, params, RandomStream(42));
    const double before = a.leaders[0].fitness;
    step_woa(a, f1, params);
    step_woa(b, f1, params);
    CHECK(a.positions == b.positions);
    CHECK(a.fitness == b.fitness);
    CHECK(a.leaders[0].fitness <= before);
    CHECK(a.iter == 1);
    CHECK(a.evals == 5 + 5);
}

TEST_CASE("woa step matches the reference oracle; exploration branch fires") {
    const Problem f1 = classic23(1, 2);
    const auto params = small_params(5, 1); // a = 2 on the first step
    bool saw_random_search = false;
    bool random_search_moved_off_encircle = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SwarmState state = init_swarm(f1, params, RandomStream(seed));
        const auto pred = oracle::predict_woa_step(state, f1, params);
        step_woa(state, f1, params);
        REQUIRE(state.positions == pred.positions);
        for (std::size_t i = 0; i < pred.branch.size(); ++i) {
            if (pred.branch[i] == 1) {
                saw_random_search = true;
                if (pred.positions[i] != pred.pure_encircle[i])
                    random_search_moved_off_encircle = true;
            }
        }
    }
    CHECK(saw_random_search);
    CHECK(random_search_moved_off_encircle);
}

TEST_CASE("gwo consensus collapse at a = 0") {
    const Problem f1 = classic23(1, 2);
    OptimizerParams params = small_params(4, 5);
    SwarmState s = init_swarm(f1, params, RandomStream(7));
    const std::vector<double> opt = {0.0, 0.0};
    for (auto& l : s.leaders) l = {opt, 0.0};
    s.iter = params.max_iter; // decay_a == 0 -> every A vanishes
    step_gwo(s, f1, params);
    for (const auto& pos : s.positions) CHECK(pos == opt);
    CHECK(s.leaders[0].fitness == 0.0);
}

TEST_CASE("gwo step replays deterministically") {
    const Problem f9 = classic23(9, 4);
    const auto params = small_params(6, 20);
    SwarmState a = init_swarm(f9, params, RandomStream(17));
    SwarmState b = init_swarm(f9, params, RandomStream(17));
    for (int i = 0; i < 3; ++i) {
        step_gwo(a, f9, params);
        step_gwo(b, f9, params);
    }
    CHECK(a.positions == b.positions);
    CHECK(a.fitness == b.fitness);
    CHECK(a.evals == b.evals);
}

TEST_CASE("gwo leaders are the three best evaluated points ever") {
    std::size_t calls = 0;
    std::vector<double> log;
    Problem f5 = classic23(5, 3);
    auto inner = f5.evaluator;
    f5.evaluator = [inner, &log](std::span<const double> x, RandomStream* rng) {
        const double v = inner(x, rng);
        log.push_back(v);
        return v;
    };
    (void)calls;
    const auto params = small_params(8, 30);
    SwarmState s = init_swarm(f5, params, RandomStream(100));
    for (int i = 0; i < 10; ++i) step_gwo(s, f5, params);
    std::sort(log.begin(), log.end());
    REQUIRE(log.size() >= 3);
    CHECK(s.leaders[0].fitness == log[0]);
    CHECK(s.leaders[1].fitness == log[1]);
    CHECK(s.leaders[2].fitness == log[2]);
}

TEST_CASE("woagwo step matches the reference oracle across variants") {
    const Problem f9 = classic23(9, 3);
    std::size_t rejections = 0, acceptances = 0, hunts = 0, gate_failures = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        OptimizerParams params = small_params(6, 4); // early iterations: a > 1
        params.hunt_condition = HuntCondition::conjunctive; // exercise the gate
        SwarmState state = init_swarm(f9, params, RandomStream(seed));
        for (int it = 0; it < 3; ++it) {
            const auto pred = oracle::predict_woagwo_step(state, f9, params);
            const std::uint64_t evals_before = state.evals;
            step_woagwo(state, f9, params);
            REQUIRE(state.positions == pred.positions);
            // evals: one full sweep + one per greedy candidate
            CHECK(state.evals - evals_before == state.positions.size() + pred.candidates);
            rejections += pred.rejected;
            acceptances += pred.accepted;
            hunts += pred.hunts;
            gate_failures += pred.gate_failures;
        }
    }
    // all four behaviors must actually occur in the sample
    CHECK(rejections > 0);
    CHECK(acceptances > 0);
    CHECK(hunts > 0);
    CHECK(gate_failures > 0); // |Ai| >= 1 draw under fallback=stay leaves the agent in place
}

TEST_CASE("woagwo variant flags: literal gate, spiral fallback, global reference") {
    const Problem f9 = classic23(9, 3);
    for (auto hunt : {HuntCondition::conjunctive, HuntCondition::literal})
        for (auto fb : {ExploitFallback::stay, ExploitFallback::spiral})
            for (auto ref : {GreedyReference::own_previous, GreedyReference::global_best}) {
                OptimizerParams params = small_params(5, 4);
                params.hunt_condition = hunt;
                params.exploitation_fallback = fb;
                params.greedy_reference = ref;
                SwarmState state = init_swarm(f9, params, RandomStream(12345));
                for (int it = 0; it < 2; ++it) {
                    const auto pred = oracle::predict_woagwo_step(state, f9, params);
                    step_woagwo(state, f9, params);
                    REQUIRE(state.positions == pred.positions);
                    if (hunt == HuntCondition::literal) CHECK(pred.gate_failures == 0);
                }
            }
}

TEST_CASE("woagwo rejects candidates that do not improve") {
    // from an all-optimal population nothing can improve: a full step must
    // leave every position at the optimum
    const Problem f1 = classic23(1, 2);
    OptimizerParams params = small_params(5, 10);
    SwarmState s = init_swarm(f1, params, RandomStream(3));
    const std::vector<double> opt = {0.0, 0.0};
    for (auto& pos : s.positions) pos = opt;
    for (auto& f : s.fitness) f = 0.0;
    for (auto& l : s.leaders) l = {opt, 0.0};
    step_woagwo(s, f1, params);
    for (const auto& pos : s.positions) CHECK(pos == opt);
}

TEST_CASE("run is deterministic and traces are well-formed") {
    for (Algorithm algo : {Algorithm::woa, Algorithm::gwo, Algorithm::woagwo}) {
        const Problem f9 = classic23(9, 5);
        OptimizerParams params = small_params(8, 40);
        const RunTrace t1 = run(algo, f9, params, RandomStream(99));
        const RunTrace t2 = run(algo, f9, params, RandomStream(99));
        CHECK(t1.best_curve == t2.best_curve);
        CHECK(t1.best_position == t2.best_position);
        CHECK(t1.best_fitness == t2.best_fitness);
        CHECK(t1.evals == t2.evals);
        CHECK(t1.seed == 99);

        CHECK(t1.best_curve.size() == params.max_iter);
        CHECK(std::is_sorted(t1.best_curve.rbegin(), t1.best_curve.rend()));
        CHECK(t1.best_fitness == t1.best_curve.back());
        CHECK(t1.best_fitness == evaluate(f9, t1.best_position));
        CHECK(f9.space.contains(t1.best_position));
    }
}

TEST_CASE("evaluation accounting against a logging wrapper") {
    std::size_t calls = 0;
    const Problem base = classic23(1, 4);
    const Problem counted = counting_problem(base, calls);
    OptimizerParams params = small_params(7, 25);

    calls = 0;
    RunTrace t = run(Algorithm::woa, counted, params, RandomStream(5));
    CHECK(calls == 7 * 26);
    CHECK(t.evals == calls);

    calls = 0;
    t = run(Algorithm::gwo, counted, params, RandomStream(5));
    CHECK(calls == 7 * 26);
    CHECK(t.evals == calls);

    calls = 0;
    t = run(Algorithm::woagwo, counted, params, RandomStream(5));
    CHECK(t.evals == calls);
    CHECK(calls >= 7 * 26); // baseline plus one per greedy candidate
}

TEST_CASE("woagwo beats woa on sphere under paired seeds") {
    // full-scale paired comparison, 10 seeds: the hybrid's final best is
    // smaller at least 9 times
    const Problem f1 = classic23(1, 30);
    OptimizerParams params; // table defaults: pop 30, 500 iterations
    int wins = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const double woa = run(Algorithm::woa, f1, params, RandomStream(seed)).best_fitness;
        const double hybrid =
            run(Algorithm::woagwo, f1, params, RandomStream(seed)).best_fitness;
        if (hybrid < woa) ++wins;
    }
    CHECK(wins >= 9);
}
