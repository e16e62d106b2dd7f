#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "randgraph/errors.hpp"
#include "randgraph/grg.hpp"
#include "randgraph/verify.hpp"

using namespace randgraph;

#define CHECK_NEAR(a, b, tol) CHECK(std::fabs((a) - (b)) <= (tol))

TEST_CASE("weight sampling") {
    RandomStream rng(11);
    const auto constant = grg::sample_weights(MixingLaw::point_mass(2.0), 3, 1.0, rng);
    CHECK(constant.weights == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(constant.scaling_exponent == 1.0);

    const auto expo = grg::sample_weights(MixingLaw::exponential(1.0), 1000000, 1.0, rng);
    CHECK_NEAR(expo.sum() / 1e6, 1.0, 0.005);  // 5 standard errors
}

TEST_CASE("grg_exact degenerate cases") {
    RandomStream rng(12);
    grg::WeightSequence zeros{std::vector<double>(50, 0.0), 1.0};
    CHECK(grg::grg_exact(zeros, rng).edge_count() == 0);
    CHECK(grg::grg_fast(zeros, rng).edge_count() == 0);
}

TEST_CASE("grg_exact edge probability r/(1+r)") {
    // n = 2, W = [1,1], beta = 0: r = 1, so the single edge appears w.p. 1/2
    RandomStream rng(13);
    const grg::WeightSequence w{{1.0, 1.0}, 0.0};
    const int runs = 20000;
    int present = 0;
    for (int i = 0; i < runs; ++i) {
        present += grg::grg_exact(w, rng).edge_count() > 0 ? 1 : 0;
    }
    CHECK_NEAR(static_cast<double>(present) / runs, 0.5, 0.015);
}

TEST_CASE("conditional uniformity: graphs with equal degree multisets are equally likely") {
    // n = 3, W = [1,1,1], beta = 0: every edge has p = 1/2. Bin the 8
    // possible graphs by sorted degree sequence; within the two size-3 bins
    // (single edge, two edges) the three graphs must be uniform.
    RandomStream rng(14);
    const grg::WeightSequence w{{1.0, 1.0, 1.0}, 0.0};
    const int runs = 20000;
    std::vector<std::int64_t> one_edge(3, 0);
    std::vector<std::int64_t> two_edge(3, 0);
    for (int i = 0; i < runs; ++i) {
        const auto g = grg::grg_exact(w, rng);
        const bool e01 = g.has_edge(0, 1);
        const bool e02 = g.has_edge(0, 2);
        const bool e12 = g.has_edge(1, 2);
        const int count = int(e01) + int(e02) + int(e12);
        if (count == 1) ++one_edge[e01 ? 0 : e02 ? 1 : 2];
        if (count == 2) ++two_edge[!e01 ? 0 : !e02 ? 1 : 2];
    }
    auto chi2_uniform3 = [](const std::vector<std::int64_t>& bins) {
        const double total = static_cast<double>(bins[0] + bins[1] + bins[2]);
        double stat = 0.0;
        for (const auto b : bins) {
            const double diff = static_cast<double>(b) - total / 3.0;
            stat += diff * diff / (total / 3.0);
        }
        return stat;
    };
    CHECK(chi2_uniform3(one_edge) < 9.210340);  // chi-square, 2 df, 1% level
    CHECK(chi2_uniform3(two_edge) < 9.210340);
}

TEST_CASE("degrees of distinct vertices are nearly uncorrelated") {
    RandomStream rng(15);
    const grg::WeightSequence w{std::vector<double>(1000, 1.0), 1.0};
    const int runs = 5000;
    double s1 = 0.0, s2 = 0.0, s11 = 0.0, s22 = 0.0, s12 = 0.0;
    for (int i = 0; i < runs; ++i) {
        const auto g = grg::grg_exact(w, rng);
        const auto d1 = static_cast<double>(g.degree(0));
        const auto d2 = static_cast<double>(g.degree(1));
        s1 += d1;
        s2 += d2;
        s11 += d1 * d1;
        s22 += d2 * d2;
        s12 += d1 * d2;
    }
    const double m1 = s1 / runs;
    const double m2 = s2 / runs;
    const double cov = s12 / runs - m1 * m2;
    const double v1 = s11 / runs - m1 * m1;
    const double v2 = s22 / runs - m2 * m2;
    const double rho = cov / std::sqrt(v1 * v2);
    CHECK(std::fabs(rho) < 0.05);
}

TEST_CASE("gamma constant") {
    CHECK_NEAR(grg::gamma_constant(0.5, 1.0), std::numbers::pi / 2.0, 1e-8);
    const double base = grg::gamma_constant(0.3, 1.0);
    CHECK_NEAR(grg::gamma_constant(0.3, 2.0), 2.0 * base, 1e-10);
    CHECK_THROWS_AS(grg::gamma_constant(1.0, 1.0), InvalidParameterError);
    CHECK_THROWS_AS(grg::gamma_constant(0.0, 1.0), InvalidParameterError);

    // Monte Carlo cross-check of the alpha = 0.5 integral: split at 1 and
    // map both halves onto [0, 1] with bounded integrands.
    RandomStream rng(16);
    const double alpha = 0.5;
    double acc = 0.0;
    const int samples = 1000000;
    for (int i = 0; i < samples; ++i) {
        const double x = std::pow(rng.next_double(), 1.0 / (1.0 - alpha));
        acc += 1.0 / ((1.0 + x) * (1.0 + x)) / (1.0 - alpha);
        const double y = rng.next_double();
        acc += std::pow(y, alpha) / ((1.0 + y) * (1.0 + y));
    }
    CHECK_NEAR(acc / samples, std::numbers::pi / 2.0, 3e-3);
}

TEST_CASE("limit pmf in the finite-mean regime") {
    const auto pm = grg_limit_pmf(MixingLaw::point_mass(1.5), grg::FiniteMeanRegime{});
    const auto po = DegreeDistribution::poisson(1.5 * 1.5);
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(pm.pmf_at(k), po.pmf_at(k), 1e-10);

    const auto two =
        grg_limit_pmf(MixingLaw::discrete({{1.0, 0.5}, {3.0, 0.5}}), grg::FiniteMeanRegime{});
    CHECK_NEAR(two.pmf_at(0), 0.5 * (std::exp(-2.0) + std::exp(-6.0)), 1e-12);

    CHECK_THROWS_AS(grg_limit_pmf(MixingLaw::pareto(0.5, 1.0), grg::FiniteMeanRegime{}),
                    InvalidParameterError);
}

TEST_CASE("limit pmf in the heavy-tail regime has a tau = 2 tail") {
    const auto law = grg_limit_pmf(MixingLaw::pareto(0.5, 1.0), grg::HeavyTailRegime{0.5, 1.0});
    CHECK_FALSE(law.mean_is_finite());
    // power law with exponent tau = 2 means a ccdf slope of -1
    const double slope = verify::tail_exponent(law, 10, 100);
    CHECK_NEAR(slope, -1.0, 0.15);
}

TEST_CASE("empirical degrees approach the limit law") {
    struct Case {
        MixingLaw law;
        const char* name;
    };
    const Case cases[] = {
        {MixingLaw::point_mass(2.0), "constant"},
        {MixingLaw::discrete({{1.0, 0.5}, {3.0, 0.5}}), "two-point"},
        {MixingLaw::exponential(1.0), "exponential"},
    };
    std::uint64_t seed = 17;
    for (const auto& c : cases) {
        CAPTURE(c.name);
        RandomStream rng(seed++);
        const auto w = grg::sample_weights(c.law, 10000, 1.0, rng);
        const auto g = grg::grg_exact(w, rng);
        const auto limit = grg_limit_pmf(c.law, grg::FiniteMeanRegime{});
        CHECK(verify::tv_distance(verify::empirical_distribution(g), limit) < 0.03);
    }
}

TEST_CASE("fast approximation agrees with the exact model") {
    RandomStream rng(20);
    const auto law = MixingLaw::point_mass(2.0);
    const auto w1 = grg::sample_weights(law, 10000, 1.0, rng);
    const auto exact = grg::grg_exact(w1, rng);
    RandomStream rng2(21);
    const auto w2 = grg::sample_weights(law, 10000, 1.0, rng2);
    const auto fast = grg::grg_fast(w2, rng2);
    CHECK(verify::tv_distance(verify::empirical_distribution(exact),
                              verify::empirical_distribution(fast)) < 0.03);
}

TEST_CASE("parallel sweep output is independent of thread count") {
    RandomStream rng(22);
    const auto w = grg::sample_weights(MixingLaw::exponential(1.5), 500, 1.0, rng);
    const auto a = grg::grg_exact_parallel(w, 77, 1);
    const auto b = grg::grg_exact_parallel(w, 77, 2);
    REQUIRE(a.edge_count() == b.edge_count());
    for (std::int64_t v = 0; v < 500; ++v) {
        const auto na = a.neighbors(static_cast<VertexId>(v));
        const auto nb = b.neighbors(static_cast<VertexId>(v));
        REQUIRE(na.size() == nb.size());
        for (std::size_t i = 0; i < na.size(); ++i) CHECK(na[i] == nb[i]);
    }
}

TEST_CASE("fast approximation beats the extrapolated exact cost at n = 1e6") {
    const auto law = MixingLaw::exponential(1.0);
    RandomStream rng(24);
    const auto w_small = grg::sample_weights(law, 20000, 1.0, rng);
    const auto t0 = std::chrono::steady_clock::now();
    const auto g_small = grg::grg_exact(w_small, rng);
    const auto t1 = std::chrono::steady_clock::now();
    // quadratic extrapolation 2e4 -> 1e6 multiplies pair count by 2500
    const double exact_extrapolated =
        std::chrono::duration<double>(t1 - t0).count() * 2500.0;

    const auto w_big = grg::sample_weights(law, 1000000, 1.0, rng);
    const auto t2 = std::chrono::steady_clock::now();
    const auto g_big = grg::grg_fast(w_big, rng);
    const auto t3 = std::chrono::steady_clock::now();
    const double fast = std::chrono::duration<double>(t3 - t2).count();

    CHECK(g_small.edge_count() > 0);
    CHECK(g_big.edge_count() > 0);
    CHECK(exact_extrapolated >= 20.0 * fast);
}

TEST_CASE("weights round-trip through the text format") {
    RandomStream rng(23);
    const auto w = grg::sample_weights(MixingLaw::exponential(1.0), 100, 2.0, rng);
    std::ostringstream os;
    grg::write_weights(os, w);
    std::istringstream is(os.str());
    const auto back = grg::read_weights(is, 2.0);
    REQUIRE(back.size() == w.size());
    for (std::size_t i = 0; i < w.weights.size(); ++i) CHECK(back.weights[i] == w.weights[i]);
}
