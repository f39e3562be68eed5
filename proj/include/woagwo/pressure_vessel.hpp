#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "problem.hpp"

// Pressure-vessel design: minimize forming + material + welding cost over
// x = (shell thickness, head thickness, inner radius, cylinder length).
//
// The published constraint set contains two evident misprints: g2 appears as
// "-x3 + 0.00954 x3 <= 0" (a tautology in x3 alone) and g4 as
// "x4 + 240 <= 0" (unsatisfiable inside the stated bounds). The corrected
// forms below are the standard ones; the literal forms stay available behind
// ConstraintForms::literal for auditing.

namespace woagwo {

enum class ConstraintForms { corrected, literal };

struct ConstraintReport {
    std::array<double, 4> g{};
    bool feasible = false;
    double violation = 0.0; // sum of positive parts
};

enum class PenaltyMode { static_penalty, death };

struct PenaltyPolicy {
    PenaltyMode mode = PenaltyMode::static_penalty;
    double coefficient = 1e6; // static mode only; must be > 0

    bool operator==(const PenaltyPolicy&) const = default;
};

// Upper bound on any cost inside the box is ~6e7; the death sentinel sits
// far above it.
inline constexpr double kDeathSentinel = 1e9;

inline double vessel_cost(std::span<const double> x) {
    if (x.size() != 4) throw std::invalid_argument("vessel_cost: expected 4 variables");
    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    return 0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3 * x3 + 3.1661 * x1 * x1 * x4 +
           19.84 * x1 * x1 * x3;
}

inline ConstraintReport vessel_constraints(std::span<const double> x,
                                           ConstraintForms forms = ConstraintForms::corrected) {
    if (x.size() != 4) throw std::invalid_argument("vessel_constraints: expected 4 variables");
    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    ConstraintReport r;
    r.g[0] = -x1 + 0.0193 * x3;
    r.g[2] = -std::numbers::pi * x3 * x3 * x4 -
             4.0 / 3.0 * std::numbers::pi * x3 * x3 * x3 + 1296000.0;
    if (forms == ConstraintForms::corrected) {
        r.g[1] = -x2 + 0.00954 * x3;
        r.g[3] = x4 - 240.0;
    } else {
        r.g[1] = -x3 + 0.00954 * x3;
        r.g[3] = x4 + 240.0;
    }
    r.violation = 0.0;
    for (double g : r.g) r.violation += std::max(0.0, g);
    r.feasible = r.violation == 0.0;
    return r;
}

inline double penalized_vessel_cost(std::span<const double> x, const PenaltyPolicy& policy,
                                    ConstraintForms forms = ConstraintForms::corrected) {
    const ConstraintReport rep = vessel_constraints(x, forms);
    const double raw = vessel_cost(x);
    if (policy.mode == PenaltyMode::static_penalty)
        return raw + policy.coefficient * rep.violation;
    return rep.feasible ? raw : kDeathSentinel;
}

inline Problem pressure_vessel(const PenaltyPolicy& policy,
                               ConstraintForms forms = ConstraintForms::corrected) {
    if (policy.mode == PenaltyMode::static_penalty && !(policy.coefficient > 0.0))
        throw std::invalid_argument("pressure_vessel: static penalty coefficient must be > 0");
    Problem p;
    p.name = "pressure_vessel";
    p.space = SearchSpace::box({0.0, 0.0, 10.0, 10.0}, {99.0, 99.0, 200.0, 200.0});
    p.kind = ProblemKind::constrained;
    p.evaluator = [policy, forms](std::span<const double> x, RandomStream*) {
        return penalized_vessel_cost(x, policy, forms);
    };
    return p;
}

} // namespace woagwo
