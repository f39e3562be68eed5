#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prng.hpp"

// Position-update kernels shared by the three algorithms. All are pure; the
// steps in optimizer.hpp draw the random coefficients and call these.

namespace woagwo {

// The published coefficient formula A = 2*a*r + a puts A in [a, 3a], which
// contradicts the described |A| < 1 / |A| >= 1 branching; the range-consistent
// form A = 2*a*r - a is the default. The literal plus form is kept for
// ablation only.
enum class AFormula { range_consistent, literal_plus };

// Linear ramp of the control scalar a from 2 down to 0.
inline double decay_a(std::size_t iter, std::size_t max_iter) {
    if (max_iter == 0 || iter > max_iter)
        throw std::invalid_argument("decay_a: iteration out of range");
    return 2.0 * (1.0 - static_cast<double>(iter) / static_cast<double>(max_iter));
}

// Draw one (A, C) pair: A = 2*a*r - a, C = 2*r' with independent r, r'.
inline std::pair<double, double> coefficients(double a, RandomStream& stream,
                                              AFormula formula = AFormula::range_consistent) {
    const double r1 = stream.unit();
    const double r2 = stream.unit();
    const double A = formula == AFormula::range_consistent ? 2.0 * a * r1 - a
                                                           : 2.0 * a * r1 + a;
    return {A, 2.0 * r2};
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// X' = X* - A * |C*X* - X|
inline std::vector<double> encircle(std::span<const double> x, std::span<const double> x_star,
                                    double A, double C) {
    require_same_dim(x.size(), x_star.size(), "encircle");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x_star[i] - A * std::fabs(C * x_star[i] - x[i]);
    return out;
}

inline std::vector<double> encircle(std::span<const double> x, std::span<const double> x_star,
                                    std::span<const double> A, std::span<const double> C) {
    require_same_dim(x.size(), x_star.size(), "encircle");
    require_same_dim(x.size(), A.size(), "encircle(A)");
    require_same_dim(x.size(), C.size(), "encircle(C)");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x_star[i] - A[i] * std::fabs(C[i] * x_star[i] - x[i]);
    return out;
}

// X' = e^{b k} cos(2 pi k) |X* - X| + X*, with k in [-1, 1].
inline std::vector<double> spiral(std::span<const double> x, std::span<const double> x_star,
                                  double b, double k) {
    require_same_dim(x.size(), x_star.size(), "spiral");
    if (k < -1.0 || k > 1.0) throw std::invalid_argument("spiral: k outside [-1, 1]");
    const double scale = std::exp(b * k) * std::cos(2.0 * std::numbers::pi * k);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = scale * std::fabs(x_star[i] - x[i]) + x_star[i];
    return out;
}

// X' = X_rand - A * |C*X_rand - X|
inline std::vector<double> random_search(std::span<const double> x,
                                         std::span<const double> x_rand, double A, double C) {
    require_same_dim(x.size(), x_rand.size(), "random_search");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x_rand[i] - A * std::fabs(C * x_rand[i] - x[i]);
    return out;
}

// X' = (X1 + X2 + X3) / 3 with X_w = x_w - A_w * |C_w*x_w - X| for the three
// leaders. Scalar-coefficient form.
inline std::vector<double> gwo_hunt(std::span<const double> x, std::span<const double> alpha,
                                    std::span<const double> beta, std::span<const double> delta,
                                    double A1, double A2, double A3, double C1, double C2,
                                    double C3) {
    require_same_dim(x.size(), alpha.size(), "gwo_hunt(alpha)");
    require_same_dim(x.size(), beta.size(), "gwo_hunt(beta)");
    require_same_dim(x.size(), delta.size(), "gwo_hunt(delta)");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x1 = alpha[i] - A1 * std::fabs(C1 * alpha[i] - x[i]);
        const double x2 = beta[i] - A2 * std::fabs(C2 * beta[i] - x[i]);
        const double x3 = delta[i] - A3 * std::fabs(C3 * delta[i] - x[i]);
        out[i] = (x1 + x2 + x3) / 3.0;
    }
    return out;
}

// Per-dimension coefficient form.
inline std::vector<double> gwo_hunt(std::span<const double> x, std::span<const double> alpha,
                                    std::span<const double> beta, std::span<const double> delta,
                                    std::span<const double> A1, std::span<const double> A2,
                                    std::span<const double> A3, std::span<const double> C1,
                                    std::span<const double> C2, std::span<const double> C3) {
    require_same_dim(x.size(), alpha.size(), "gwo_hunt(alpha)");
    require_same_dim(x.size(), beta.size(), "gwo_hunt(beta)");
    require_same_dim(x.size(), delta.size(), "gwo_hunt(delta)");
    require_same_dim(x.size(), A1.size(), "gwo_hunt(A1)");
    require_same_dim(x.size(), A2.size(), "gwo_hunt(A2)");
    require_same_dim(x.size(), A3.size(), "gwo_hunt(A3)");
    require_same_dim(x.size(), C1.size(), "gwo_hunt(C1)");
    require_same_dim(x.size(), C2.size(), "gwo_hunt(C2)");
    require_same_dim(x.size(), C3.size(), "gwo_hunt(C3)");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x1 = alpha[i] - A1[i] * std::fabs(C1[i] * alpha[i] - x[i]);
        const double x2 = beta[i] - A2[i] * std::fabs(C2[i] * beta[i] - x[i]);
        const double x3 = delta[i] - A3[i] * std::fabs(C3[i] * delta[i] - x[i]);
        out[i] = (x1 + x2 + x3) / 3.0;
    }
    return out;
}

} // namespace woagwo
