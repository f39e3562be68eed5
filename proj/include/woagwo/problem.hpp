#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prng.hpp"
#include "search_space.hpp"

namespace woagwo {

enum class ProblemKind { unimodal, multimodal, fixed_dimension, constrained };

inline const char* to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::unimodal: return "unimodal";
        case ProblemKind::multimodal: return "multimodal";
        case ProblemKind::fixed_dimension: return "fixed-dimension";
        case ProblemKind::constrained: return "constrained";
    }
    return "?";
}

// A named minimization objective over a box. The evaluator is pure except for
// noisy objectives, which consume draws from the supplied stream.
struct Problem {
    std::string name;
    SearchSpace space;
    ProblemKind kind = ProblemKind::unimodal;
    std::optional<double> known_best;
    std::vector<double> known_argmin; // empty when no certified minimizer is catalogued
    bool needs_noise = false;
    std::function<double(std::span<const double>, RandomStream*)> evaluator;
};

inline double evaluate(const Problem& problem, std::span<const double> x,
                       RandomStream* noise = nullptr) {
    check_dim(problem.space, x, problem.name.c_str());
    if (problem.needs_noise && noise == nullptr)
        throw std::invalid_argument(problem.name + ": noisy objective requires a random stream");
    return problem.evaluator(x, noise);
}

} // namespace woagwo
