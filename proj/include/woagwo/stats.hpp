#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

// Descriptive statistics and the two-sample Wilcoxon rank-sum test
// (Mann-Whitney U). Quantiles use linear interpolation between closest ranks
// (the R-7 rule). The test uses midranks with tie correction and a
// continuity-corrected normal approximation; for small tie-free samples
// (min(n,m) <= 8) the two-sided p comes from exact enumeration of the
// rank-sum distribution instead.

namespace woagwo {

struct SampleStats {
    std::size_t n = 0;
    double mean = 0, std = 0, min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

namespace detail {

inline double quantile_sorted(std::span<const double> sorted, double q) {
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

inline double normal_sf_two_sided(double z) {
    // 2 * (1 - Phi(|z|)) without cancellation for large |z|
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

} // namespace detail

inline SampleStats describe(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("describe: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    SampleStats s;
    s.n = sorted.size();
    double sum = 0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(s.n);
    double ss = 0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.std = s.n > 1 ? std::sqrt(ss / static_cast<double>(s.n - 1)) : 0.0;
    s.min = sorted.front();
    s.max = sorted.back();
    s.q1 = detail::quantile_sorted(sorted, 0.25);
    s.median = detail::quantile_sorted(sorted, 0.50);
    s.q3 = detail::quantile_sorted(sorted, 0.75);
    return s;
}

struct WilcoxonOutcome {
    double u_statistic = 0; // U for the first sample
    double z = 0;           // continuity-corrected normal deviate
    double p_two_sided = 1;
    bool significant = false;
};

namespace detail {

// Number of k-subsets of ranks {1..n} by rank sum; counts fit comfortably in
// double for the sizes the exact path handles (C(16,8) = 12870).
inline std::vector<std::vector<double>> ranksum_counts(std::size_t n, std::size_t k) {
    const std::size_t max_sum = k * (2 * n - k + 1) / 2;
    std::vector<std::vector<double>> c(k + 1, std::vector<double>(max_sum + 1, 0.0));
    c[0][0] = 1.0;
    for (std::size_t rank = 1; rank <= n; ++rank)
        for (std::size_t j = std::min(rank, k); j >= 1; --j)
            for (std::size_t s = max_sum; s >= rank; --s)
                c[j][s] += c[j - 1][s - rank];
    return c;
}

inline double exact_two_sided_p(std::size_t n1, std::size_t n2, double rank_sum_1) {
    const std::size_t n = n1 + n2;
    const auto counts = ranksum_counts(n, n1);
    const auto& dist = counts[n1];
    double total = 0, le = 0, ge = 0;
    for (std::size_t s = 0; s < dist.size(); ++s) {
        total += dist[s];
        if (static_cast<double>(s) <= rank_sum_1) le += dist[s];
        if (static_cast<double>(s) >= rank_sum_1) ge += dist[s];
    }
    return std::min(1.0, 2.0 * std::min(le, ge) / total);
}

} // namespace detail

inline WilcoxonOutcome ranksum(std::span<const double> a, std::span<const double> b,
                               double alpha = 0.05) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ranksum: empty sample");
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;

    struct Tagged {
        double value;
        bool from_a;
    };
    std::vector<Tagged> pooled;
    pooled.reserve(n);
    for (double v : a) pooled.push_back({v, true});
    for (double v : b) pooled.push_back({v, false});
    std::sort(pooled.begin(), pooled.end(),
              [](const Tagged& x, const Tagged& y) { return x.value < y.value; });

    // midranks; collect tie-group sizes for the variance correction
    double rank_sum_a = 0;
    double tie_term = 0;
    bool has_ties = false;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].value == pooled[i].value) ++j;
        const auto t = static_cast<double>(j - i);
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (pooled[k].from_a) rank_sum_a += midrank;
        if (j - i > 1) {
            has_ties = true;
            tie_term += t * t * t - t;
        }
        i = j;
    }

    const double u1 = rank_sum_a - static_cast<double>(n1) * (static_cast<double>(n1) + 1) / 2.0;
    const double mu = static_cast<double>(n1) * static_cast<double>(n2) / 2.0;
    const double nn = static_cast<double>(n);
    const double var = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                       ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));

    WilcoxonOutcome out;
    out.u_statistic = u1;
    const double d = u1 - mu;
    if (var > 0.0) {
        if (d > 0)
            out.z = (d - 0.5) / std::sqrt(var);
        else if (d < 0)
            out.z = (d + 0.5) / std::sqrt(var);
        else
            out.z = 0.0;
    } else {
        out.z = 0.0; // all pooled values identical
    }

    if (!has_ties && std::min(n1, n2) <= 8) {
        out.p_two_sided = detail::exact_two_sided_p(n1, n2, rank_sum_a);
    } else {
        out.p_two_sided = std::min(1.0, detail::normal_sf_two_sided(out.z));
    }
    out.significant = out.p_two_sided < alpha;
    return out;
}

} // namespace woagwo
