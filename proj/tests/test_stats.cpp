#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <woagwo/prng.hpp>
#include <woagwo/stats.hpp>

using namespace woagwo;

namespace {

// Brute-force two-sided exact p: enumerate every n-subset of pooled ranks.
double brute_force_exact_p(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = a.size(), m = b.size(), total_n = n + m;
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<std::size_t> order(total_n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
    // rank of each element (tie-free inputs only)
    std::vector<int> rank(total_n);
    for (std::size_t pos = 0; pos < total_n; ++pos)
        rank[order[pos]] = static_cast<int>(pos + 1);
    int r_obs = 0;
    for (std::size_t i = 0; i < n; ++i) r_obs += rank[i];

    std::vector<bool> mask(total_n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
    std::sort(mask.begin(), mask.end()); // start from lexicographically first
    long long total = 0, le = 0, ge = 0;
    do {
        int s = 0;
        for (std::size_t i = 0; i < total_n; ++i)
            if (mask[i]) s += static_cast<int>(i + 1);
        ++total;
        if (s <= r_obs) ++le;
        if (s >= r_obs) ++ge;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return std::min(1.0, 2.0 * std::min(static_cast<double>(le), static_cast<double>(ge)) /
                             static_cast<double>(total));
}

std::vector<double> shifted(std::vector<double> v, double c) {
    for (double& x : v) x += c;
    return v;
}

} // namespace

TEST_CASE("describe basics") {
    const std::vector<double> constant = {5, 5, 5, 5};
    SampleStats s = describe(constant);
    CHECK(s.mean == 5.0);
    CHECK(s.std == 0.0);
    CHECK(s.min == 5.0);
    CHECK(s.q1 == 5.0);
    CHECK(s.median == 5.0);
    CHECK(s.q3 == 5.0);
    CHECK(s.max == 5.0);

    s = describe(std::vector<double>{1, 2, 3, 4, 5});
    CHECK(s.mean == 3.0);
    CHECK(s.median == 3.0);
    CHECK(s.min == 1.0);
    CHECK(s.max == 5.0);
    CHECK(s.q1 == 2.0);
    CHECK(s.q3 == 4.0);

    // hand-computed: sum of squared deviations 32, sample variance 32/7
    s = describe(std::vector<double>{2, 4, 4, 4, 5, 5, 7, 9});
    CHECK(s.mean == 5.0);
    CHECK(s.std == Catch::Approx(2.138089935299395).epsilon(1e-15));
    CHECK(s.q1 == 4.0);
    CHECK(s.median == 4.5);
    CHECK(s.q3 == 5.5);

    s = describe(std::vector<double>{7.5});
    CHECK(s.n == 1);
    CHECK(s.std == 0.0);
    CHECK(s.q1 == 7.5);

    CHECK_THROWS_AS(describe(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("describe is permutation invariant") {
    RandomStream rng(2);
    std::vector<double> v(40);
    for (double& x : v) x = rng.uniform(-10, 10);
    const SampleStats ref = describe(v);
    for (int t = 0; t < 10; ++t) {
        // deterministic shuffle via the project stream
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            auto j = static_cast<std::size_t>(rng.unit() * static_cast<double>(i + 1));
            std::swap(v[i], v[j]);
        }
        const SampleStats s = describe(v);
        CHECK(s.mean == ref.mean);
        CHECK(s.std == ref.std);
        CHECK(s.min == ref.min);
        CHECK(s.q1 == ref.q1);
        CHECK(s.median == ref.median);
        CHECK(s.q3 == ref.q3);
        CHECK(s.max == ref.max);
    }
}

TEST_CASE("ranksum on identical samples") {
    std::vector<double> a(30);
    std::iota(a.begin(), a.end(), 1.0);
    const WilcoxonOutcome w = ranksum(a, a);
    CHECK(w.z == 0.0);
    CHECK(w.p_two_sided == Catch::Approx(1.0).margin(1e-9));
    CHECK_FALSE(w.significant);
}

TEST_CASE("ranksum exact path: fully separated 3 vs 3") {
    // 2 of the C(6,3) = 20 rank assignments are as extreme
    const WilcoxonOutcome w = ranksum(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
    CHECK(w.u_statistic == 0.0);
    CHECK(w.p_two_sided == Catch::Approx(0.1).epsilon(1e-15));
    CHECK_FALSE(w.significant);
}

TEST_CASE("ranksum exact path: frozen 5 vs 4 case") {
    // cross-checked against scipy.stats.mannwhitneyu(method='exact')
    const std::vector<double> a = {1.3, 2.4, 0.7, 5.5, 3.1};
    const std::vector<double> b = {2.2, 4.4, 6.1, 0.9};
    const WilcoxonOutcome w = ranksum(a, b);
    CHECK(w.u_statistic == 8.0);
    CHECK(w.p_two_sided == Catch::Approx(0.7301587301587301).epsilon(1e-12));
}

TEST_CASE("ranksum normal path with ties: frozen case") {
    // cross-checked against scipy.stats.mannwhitneyu(method='asymptotic',
    // use_continuity=True): tie-corrected sigma, continuity-corrected z
    const std::vector<double> a = {1, 2, 2, 3, 5, 7};
    const std::vector<double> b = {2, 3, 3, 8, 9};
    const WilcoxonOutcome w = ranksum(a, b);
    CHECK(w.u_statistic == 9.0);
    CHECK(w.z == Catch::Approx(-1.0229289554014698).epsilon(1e-12));
    CHECK(w.p_two_sided == Catch::Approx(0.306341437827711).epsilon(1e-12));
    CHECK_FALSE(w.significant);
}

TEST_CASE("ranksum normal path: fully separated 30 vs 30") {
    std::vector<double> a(30), b(30);
    std::iota(a.begin(), a.end(), 1.0);
    std::iota(b.begin(), b.end(), 101.0);
    const WilcoxonOutcome w = ranksum(a, b);
    CHECK(w.u_statistic == 0.0);
    CHECK(w.z == Catch::Approx(-6.64559922588161).epsilon(1e-12));
    CHECK(w.p_two_sided == Catch::Approx(3.019859359162151e-11).epsilon(1e-9));
    CHECK(w.p_two_sided < 1e-10);
    CHECK(w.significant);
}

TEST_CASE("ranksum rejects empty samples") {
    CHECK_THROWS_AS(ranksum(std::vector<double>{}, std::vector<double>{1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ranksum(std::vector<double>{1.0}, std::vector<double>{}),
                    std::invalid_argument);
}

TEST_CASE("ranksum symmetry and translation invariance") {
    RandomStream rng(33);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> a(10), b(14);
        for (double& x : a) x = rng.uniform(-5, 5);
        for (double& x : b) x = rng.uniform(-4, 6);
        const WilcoxonOutcome ab = ranksum(a, b);
        const WilcoxonOutcome ba = ranksum(b, a);
        CHECK(ab.p_two_sided == ba.p_two_sided);
        CHECK(ab.significant == ba.significant);

        for (double c : {-3.0, 0.25, 1000.0}) {
            const WilcoxonOutcome shifted_both = ranksum(shifted(a, c), shifted(b, c));
            CHECK(shifted_both.u_statistic == ab.u_statistic);
            CHECK(shifted_both.z == ab.z);
            CHECK(shifted_both.p_two_sided == ab.p_two_sided);
        }
    }
}

TEST_CASE("shifting b upward never strengthens the evidence that b < a") {
    // z orients with u = wins of a over b; raising b can only lower it
    RandomStream rng(91);
    for (int t = 0; t < 10; ++t) {
        std::vector<double> a(12), b(12);
        for (double& x : a) x = rng.uniform(0, 10);
        for (double& x : b) x = rng.uniform(-6, 4);
        const double z0 = ranksum(a, shifted(b, 0)).z;
        const double z1 = ranksum(a, shifted(b, 1)).z;
        const double z10 = ranksum(a, shifted(b, 10)).z;
        CHECK(z0 >= z1);
        CHECK(z1 >= z10);
    }
}

TEST_CASE("exact path equals the brute-force enumeration oracle") {
    RandomStream rng(7);
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t m = 2; m <= 6; ++m)
            for (int t = 0; t < 8; ++t) {
                std::vector<double> a(n), b(m);
                for (double& x : a) x = rng.uniform(0, 1);
                for (double& x : b) x = rng.uniform(0, 1);
                const WilcoxonOutcome w = ranksum(a, b);
                CHECK(w.p_two_sided == brute_force_exact_p(a, b));
            }
}
