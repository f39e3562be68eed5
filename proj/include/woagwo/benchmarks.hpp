#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "problem.hpp"

// The 23 classical benchmark functions in their standard forms and bounds
// (Yao/Liu suite as used throughout the WOA/GWO literature). The catalog
// below is the single source of truth for ids, names, bounds, dimensions and
// certified optima; data/classic23.csv mirrors it and a test keeps the two
// in sync.

namespace woagwo {
namespace bench {

inline constexpr double kPi = std::numbers::pi;

inline double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

inline double schwefel_2_22(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (double v : x) {
        s += std::fabs(v);
        p *= std::fabs(v);
    }
    return s + p;
}

inline double schwefel_1_2(std::span<const double> x) {
    double s = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

inline double schwefel_2_21(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

inline double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        double a = x[i + 1] - x[i] * x[i];
        double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

// F6 "step" as printed in the WOA/GWO benchmark tables: sum(|x + 0.5|^2),
// the continuous shifted-sphere form (not the integer-valued floor variant).
inline double step(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        double f = v + 0.5;
        s += f * f;
    }
    return s;
}

// Deterministic part of the quartic; the catalog adds one uniform [0,1) draw.
inline double quartic(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * x[i] * x[i] * x[i] * x[i];
    return s;
}

inline double schwefel_2_26(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += -v * std::sin(std::sqrt(std::fabs(v)));
    return s;
}

inline double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

inline double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
           std::numbers::e;
}

inline double griewank(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

inline double u_penalty(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

inline double penalized_1(std::span<const double> x) {
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s1 = std::sin(kPi * y(0));
    double core = 10.0 * s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double si = std::sin(kPi * y(i + 1));
        core += (y(i) - 1.0) * (y(i) - 1.0) * (1.0 + 10.0 * si * si);
    }
    core += (y(n - 1) - 1.0) * (y(n - 1) - 1.0);
    double pen = 0.0;
    for (double v : x) pen += u_penalty(v, 10.0, 100.0, 4.0);
    return kPi / static_cast<double>(n) * core + pen;
}

inline double penalized_2(std::span<const double> x) {
    const std::size_t n = x.size();
    double s1 = std::sin(3.0 * kPi * x[0]);
    double core = s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double si = std::sin(3.0 * kPi * x[i + 1]);
        core += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + si * si);
    }
    double sn = std::sin(2.0 * kPi * x[n - 1]);
    core += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) * (1.0 + sn * sn);
    double pen = 0.0;
    for (double v : x) pen += u_penalty(v, 5.0, 100.0, 4.0);
    return 0.1 * core + pen;
}

inline double foxholes(std::span<const double> x) {
    static constexpr std::array<double, 25> a1 = {
        -32, -16, 0, 16, 32, -32, -16, 0, 16, 32, -32, -16, 0,
        16,  32,  -32, -16, 0, 16, 32, -32, -16, 0, 16, 32};
    static constexpr std::array<double, 25> a2 = {
        -32, -32, -32, -32, -32, -16, -16, -16, -16, -16, 0, 0, 0,
        0,   0,   16,  16,  16,  16,  16,  32,  32,  32,  32, 32};
    double s = 0.0;
    for (int j = 0; j < 25; ++j) {
        double d1 = x[0] - a1[j];
        double d2 = x[1] - a2[j];
        s += 1.0 / (j + 1 + std::pow(d1, 6) + std::pow(d2, 6));
    }
    return 1.0 / (1.0 / 500.0 + s);
}

inline double kowalik(std::span<const double> x) {
    static constexpr std::array<double, 11> a = {0.1957, 0.1947, 0.1735, 0.1600,
                                                 0.0844, 0.0627, 0.0456, 0.0342,
                                                 0.0323, 0.0235, 0.0246};
    static constexpr std::array<double, 11> binv = {0.25, 0.5, 1, 2,  4,  6,
                                                    8,    10,  12, 14, 16};
    double s = 0.0;
    for (int i = 0; i < 11; ++i) {
        double b = 1.0 / binv[i];
        double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
    }
    return s;
}

inline double six_hump_camel(std::span<const double> x) {
    double x1 = x[0], x2 = x[1];
    return 4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 -
           4.0 * x2 * x2 + 4.0 * std::pow(x2, 4);
}

inline double branin(std::span<const double> x) {
    double x1 = x[0], x2 = x[1];
    double t = x2 - 5.1 / (4.0 * kPi * kPi) * x1 * x1 + 5.0 / kPi * x1 - 6.0;
    return t * t + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

inline double goldstein_price(std::span<const double> x) {
    double x1 = x[0], x2 = x[1];
    double u = x1 + x2 + 1.0;
    double f1 = 1.0 + u * u * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                               6.0 * x1 * x2 + 3.0 * x2 * x2);
    double v = 2.0 * x1 - 3.0 * x2;
    double f2 = 30.0 + v * v * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                36.0 * x1 * x2 + 27.0 * x2 * x2);
    return f1 * f2;
}

inline double hartman_3(std::span<const double> x) {
    static constexpr double a[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
    static constexpr double c[4] = {1, 1.2, 3, 3.2};
    static constexpr double p[4][3] = {{0.3689, 0.1170, 0.2673},
                                       {0.4699, 0.4387, 0.7470},
                                       {0.1091, 0.8732, 0.5547},
                                       {0.0381, 0.5743, 0.8828}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) {
            double d = x[j] - p[i][j];
            e += a[i][j] * d * d;
        }
        s -= c[i] * std::exp(-e);
    }
    return s;
}

inline double hartman_6(std::span<const double> x) {
    static constexpr double a[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                       {0.05, 10, 17, 0.1, 8, 14},
                                       {3, 3.5, 1.7, 10, 17, 8},
                                       {17, 8, 0.05, 10, 0.1, 14}};
    static constexpr double c[4] = {1, 1.2, 3, 3.2};
    static constexpr double p[4][6] = {
        {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
        {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
        {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
        {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j) {
            double d = x[j] - p[i][j];
            e += a[i][j] * d * d;
        }
        s -= c[i] * std::exp(-e);
    }
    return s;
}

inline constexpr double kShekelA[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8},
                                           {6, 6, 6, 6}, {3, 7, 3, 7}, {2, 9, 2, 9},
                                           {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2},
                                           {7, 3.6, 7, 3.6}};
inline constexpr double kShekelC[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

inline double shekel(std::span<const double> x, int m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = 0.0;
        for (int j = 0; j < 4; ++j) {
            double t = x[j] - kShekelA[i][j];
            d += t * t;
        }
        s -= 1.0 / (d + kShekelC[i]);
    }
    return s;
}

} // namespace bench

struct CatalogEntry {
    int id;
    const char* name;
    int fixed_dim; // 0: any dimension, 30 by convention
    double lower;
    double upper;
    ProblemKind kind;
};

inline constexpr std::array<CatalogEntry, 23> kClassic23 = {{
    {1, "sphere", 0, -100, 100, ProblemKind::unimodal},
    {2, "schwefel_2_22", 0, -10, 10, ProblemKind::unimodal},
    {3, "schwefel_1_2", 0, -100, 100, ProblemKind::unimodal},
    {4, "schwefel_2_21", 0, -100, 100, ProblemKind::unimodal},
    {5, "rosenbrock", 0, -30, 30, ProblemKind::unimodal},
    {6, "step", 0, -100, 100, ProblemKind::unimodal},
    {7, "quartic_noise", 0, -1.28, 1.28, ProblemKind::unimodal},
    {8, "schwefel_2_26", 0, -500, 500, ProblemKind::multimodal},
    {9, "rastrigin", 0, -5.12, 5.12, ProblemKind::multimodal},
    {10, "ackley", 0, -32, 32, ProblemKind::multimodal},
    {11, "griewank", 0, -600, 600, ProblemKind::multimodal},
    {12, "penalized_1", 0, -50, 50, ProblemKind::multimodal},
    {13, "penalized_2", 0, -50, 50, ProblemKind::multimodal},
    {14, "foxholes", 2, -65.536, 65.536, ProblemKind::fixed_dimension},
    {15, "kowalik", 4, -5, 5, ProblemKind::fixed_dimension},
    {16, "six_hump_camel", 2, -5, 5, ProblemKind::fixed_dimension},
    {17, "branin", 2, -5, 5, ProblemKind::fixed_dimension},
    {18, "goldstein_price", 2, -2, 2, ProblemKind::fixed_dimension},
    {19, "hartman_3", 3, 0, 1, ProblemKind::fixed_dimension},
    {20, "hartman_6", 6, 0, 1, ProblemKind::fixed_dimension},
    {21, "shekel_5", 4, 0, 10, ProblemKind::fixed_dimension},
    {22, "shekel_7", 4, 0, 10, ProblemKind::fixed_dimension},
    {23, "shekel_10", 4, 0, 10, ProblemKind::fixed_dimension},
}};

// Per-coordinate optimum of -x sin(sqrt|x|) on [-500, 500].
inline constexpr double kSchwefelArg = 420.9687457508915;
inline constexpr double kSchwefelPerDim = -418.9828872724337;

inline int classic23_default_dim(int id) {
    if (id < 1 || id > 23) throw std::invalid_argument("classic23: unknown function id");
    int fd = kClassic23[static_cast<std::size_t>(id - 1)].fixed_dim;
    return fd > 0 ? fd : 30;
}

inline Problem classic23(int id, int dim) {
    if (id < 1 || id > 23) throw std::invalid_argument("classic23: unknown function id");
    const CatalogEntry& e = kClassic23[static_cast<std::size_t>(id - 1)];
    if (e.fixed_dim > 0 && dim != e.fixed_dim)
        throw std::invalid_argument(std::string("classic23: ") + e.name + " is fixed at dim " +
                                    std::to_string(e.fixed_dim));
    if (dim < 1) throw std::invalid_argument("classic23: dim must be >= 1");

    Problem p;
    p.name = e.name;
    p.space = SearchSpace::uniform_box(static_cast<std::size_t>(dim), e.lower, e.upper);
    p.kind = e.kind;

    using Span = std::span<const double>;
    auto pure = [](double (*f)(Span)) {
        return [f](Span x, RandomStream*) { return f(x); };
    };

    switch (id) {
        case 1:
            p.evaluator = pure(&bench::sphere);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 2:
            p.evaluator = pure(&bench::schwefel_2_22);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 3:
            p.evaluator = pure(&bench::schwefel_1_2);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 4:
            p.evaluator = pure(&bench::schwefel_2_21);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 5:
            p.evaluator = pure(&bench::rosenbrock);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 1.0);
            break;
        case 6:
            p.evaluator = pure(&bench::step);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, -0.5);
            break;
        case 7:
            p.evaluator = [](Span x, RandomStream* rng) {
                return bench::quartic(x) + rng->uniform(0.0, 1.0);
            };
            p.needs_noise = true;
            p.known_best = 0.0; // noise-free floor
            p.known_argmin.assign(dim, 0.0);
            break;
        case 8:
            p.evaluator = pure(&bench::schwefel_2_26);
            p.known_best = kSchwefelPerDim * dim;
            p.known_argmin.assign(dim, kSchwefelArg);
            break;
        case 9:
            p.evaluator = pure(&bench::rastrigin);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 10:
            p.evaluator = pure(&bench::ackley);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 11:
            p.evaluator = pure(&bench::griewank);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 0.0);
            break;
        case 12:
            p.evaluator = pure(&bench::penalized_1);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, -1.0);
            break;
        case 13:
            p.evaluator = pure(&bench::penalized_2);
            p.known_best = 0.0;
            p.known_argmin.assign(dim, 1.0);
            break;
        case 14:
            p.evaluator = pure(&bench::foxholes);
            p.known_best = 0.9980038377944498;
            p.known_argmin = {-31.978333379412483, -31.978334822445476};
            break;
        case 15:
            p.evaluator = pure(&bench::kowalik);
            p.known_best = 0.0003074859878056051;
            p.known_argmin = {0.19283345304274813, 0.19083624027597035, 0.12311729907598003,
                              0.13576599033984466};
            break;
        case 16:
            p.evaluator = pure(&bench::six_hump_camel);
            p.known_best = -1.0316284534898776;
            p.known_argmin = {0.08984201290407641, -0.7126564011856205};
            break;
        case 17:
            p.evaluator = pure(&bench::branin);
            p.known_best = 0.39788735772973816;
            p.known_argmin = {bench::kPi, 2.275};
            break;
        case 18:
            p.evaluator = pure(&bench::goldstein_price);
            p.known_best = 3.0;
            p.known_argmin = {0.0, -1.0};
            break;
        case 19:
            p.evaluator = pure(&bench::hartman_3);
            p.known_best = -3.862779787332663;
            p.known_argmin = {0.11458887930324516, 0.5556488952654733, 0.8525469855538348};
            break;
        case 20:
            p.evaluator = pure(&bench::hartman_6);
            p.known_best = -3.322368011415515;
            p.known_argmin = {0.20168951078006736, 0.15001069124085284, 0.4768739733706766,
                              0.2753324288543796, 0.3116516165632252, 0.6573005339215564};
            break;
        case 21:
            p.evaluator = [](Span x, RandomStream*) { return bench::shekel(x, 5); };
            p.known_best = -10.153199679058229;
            p.known_argmin = {4.000037152376549, 4.000133278618987, 4.000037151057555,
                              4.000133277090425};
            break;
        case 22:
            p.evaluator = [](Span x, RandomStream*) { return bench::shekel(x, 7); };
            p.known_best = -10.402940566818664;
            p.known_argmin = {4.00057291611626, 4.000689367181722, 3.9994897107938447,
                              3.9996061600067923};
            break;
        case 23:
            p.evaluator = [](Span x, RandomStream*) { return bench::shekel(x, 10); };
            p.known_best = -10.536409816692045;
            p.known_argmin = {4.000746530253313, 4.000592936790675, 3.9996633957714787,
                              3.9995097993299975};
            break;
    }
    return p;
}

inline Problem classic23(int id) { return classic23(id, classic23_default_dim(id)); }

} // namespace woagwo
