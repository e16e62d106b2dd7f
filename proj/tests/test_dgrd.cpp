#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "randgraph/dgrd.hpp"
#include "randgraph/errors.hpp"
#include "randgraph/verify.hpp"

using namespace randgraph;

#define CHECK_NEAR(a, b, tol) CHECK(std::fabs((a) - (b)) <= (tol))

TEST_CASE("degenerate out-degree laws") {
    RandomStream rng(41);
    CHECK(dgrd::generate(DegreeDistribution::point_mass(0), 12, rng).edge_count() == 0);

    const auto complete = dgrd::generate(DegreeDistribution::point_mass(5), 6, rng);
    CHECK(complete.edge_count() == 15);

    const auto pair = dgrd::generate(DegreeDistribution::point_mass(1), 2, rng);
    CHECK(pair.edge_count() == 1);
    CHECK(pair.has_edge(0, 1));
}

TEST_CASE("degree decomposition D = Y + Z holds exactly") {
    RandomStream rng(42);
    dgrd::Trace trace;
    const auto n = 200;
    const auto g = dgrd::generate_traced(DegreeDistribution::poisson(1.5), n, rng, trace);
    REQUIRE(trace.out_degrees.size() == n);

    for (VertexId i = 0; i < n; ++i) {
        // Z_i: in-edges from vertices i does not point at
        std::int64_t z = 0;
        for (VertexId j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto& out_j = trace.out_targets[j];
            const bool j_points_at_i = std::binary_search(out_j.begin(), out_j.end(), i);
            if (!j_points_at_i) continue;
            const auto& out_i = trace.out_targets[i];
            if (!std::binary_search(out_i.begin(), out_i.end(), j)) ++z;
        }
        CHECK(g.degree(i) == trace.out_degrees[i] + z);
    }
}

TEST_CASE("out-degrees follow the capped law") {
    // point mass at 10 capped at n = 3 turns into out-degree 2 everywhere
    RandomStream rng(43);
    const auto g = dgrd::generate(DegreeDistribution::point_mass(10), 3, rng);
    CHECK(g.edge_count() == 3);  // complete graph on 3 vertices
}

TEST_CASE("target law") {
    const auto pm0 = dgrd::target(DegreeDistribution::point_mass(0));
    CHECK(pm0.pmf_at(0) == 1.0);

    // Poisson(mu/2) source doubles to Poisson(mu)
    const auto doubled = dgrd::target(DegreeDistribution::poisson(2.0));
    const auto po4 = DegreeDistribution::poisson(4.0);
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(doubled.pmf_at(k), po4.pmf_at(k), 1e-10);

    const auto shifted = dgrd::target(DegreeDistribution::point_mass(1));
    CHECK_NEAR(shifted.pmf_at(1), std::exp(-1.0), 1e-12);
}

TEST_CASE("poisson recipe") {
    const auto g = dgrd::poisson_source(4.0);
    const auto po2 = DegreeDistribution::poisson(2.0);
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(g.pmf_at(k), po2.pmf_at(k), 1e-12);

    CHECK(dgrd::poisson_source(0.0).pmf_at(0) == 1.0);

    const auto round = dgrd::target(dgrd::poisson_source(3.0));
    CHECK_NEAR(round.pmf_at(0), std::exp(-3.0), 1e-10);

    CHECK_THROWS_AS(dgrd::poisson_source(-1.0), InvalidParameterError);
}

TEST_CASE("mixed poisson recipe") {
    // point-mass parameter law reduces to the poisson recipe
    const auto from_pm = dgrd::mixed_poisson_source(MixingLaw::point_mass(3.0));
    const auto po15 = DegreeDistribution::poisson(1.5);
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(from_pm.pmf_at(k), po15.pmf_at(k), 1e-10);

    // Q uniform on [2,3]: xi = 2 > mu/2 = 1.25; G mixes over [0.75, 1.75]
    const auto source = dgrd::mixed_poisson_source(MixingLaw::uniform_interval(2.0, 3.0));
    const auto expected = mixed_poisson(MixingLaw::uniform_interval(0.75, 1.75), 1.0);
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(source.pmf_at(k), expected.pmf_at(k), 1e-9);

    CHECK_THROWS_AS(dgrd::mixed_poisson_source(MixingLaw::exponential(1.0)),
                    RecipeInfeasibleError);
    // exact boundary (xi = mu/2) is infeasible too: uniform on [1,3]
    CHECK_THROWS_AS(dgrd::mixed_poisson_source(MixingLaw::uniform_interval(1.0, 3.0)),
                    RecipeInfeasibleError);
}

TEST_CASE("compound poisson recipe") {
    // R = point mass at 1: R' = {0: 1/2, 1: 1/2}, G = Poisson(lambda/2)
    const auto g1 = dgrd::compound_poisson_source(1.0, DegreeDistribution::point_mass(1));
    const auto po_half = DegreeDistribution::poisson(0.5);
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(g1.pmf_at(k), po_half.pmf_at(k), 1e-10);

    // R = {1: .8, 2: .2}: R' = {0: .6, 1: .2, 2: .2}
    const auto g2 =
        dgrd::compound_poisson_source(1.3, DegreeDistribution::from_pmf({0.0, 0.8, 0.2}));
    const auto expected =
        compound_poisson(1.3, DegreeDistribution::from_pmf({0.6, 0.2, 0.2}));
    for (int k = 0; k <= 30; ++k) CHECK_NEAR(g2.pmf_at(k), expected.pmf_at(k), 1e-12);

    CHECK_THROWS_AS(dgrd::compound_poisson_source(1.0, DegreeDistribution::point_mass(2)),
                    RecipeInfeasibleError);
    CHECK_THROWS_AS(dgrd::compound_poisson_source(0.0, DegreeDistribution::point_mass(1)),
                    InvalidParameterError);
}

TEST_CASE("power-law tails survive the poisson convolution") {
    // The exact ratio is 1 + tau mu_G / k + O(1/k^2), i.e. ~1.109 at k = 50
    // and below 1.10 from k = 56 on; check the approach to 1 from there.
    const auto pl = DegreeDistribution::power_law(2.5, 1);
    const auto tgt = dgrd::target(pl);
    for (std::int64_t k = 60; k <= 1000; k += 20) {
        CHECK_NEAR(tgt.pmf_at(k) / pl.pmf_at(k), 1.0, 0.10);
    }
    CHECK_NEAR(tgt.pmf_at(1000) / pl.pmf_at(1000), 1.0, 0.006);
}

TEST_CASE("generated graphs are simple across out-degree laws") {
    RandomStream rng(44);
    const DegreeDistribution laws[] = {
        DegreeDistribution::poisson(2.0),
        DegreeDistribution::power_law(2.5, 1),
        DegreeDistribution::point_mass(3),
        DegreeDistribution::geometric(0.5),
    };
    for (const auto& law : laws) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto n = 2 + static_cast<std::int64_t>(rng.next_below(499));
            const auto g = dgrd::generate(law, n, rng);
            for (std::int64_t u = 0; u < n; ++u) {
                const auto nb = g.neighbors(static_cast<VertexId>(u));
                for (std::size_t i = 0; i < nb.size(); ++i) {
                    CHECK(nb[i] != u);
                    if (i > 0) CHECK(nb[i] > nb[i - 1]);
                }
            }
        }
    }
}

TEST_CASE("empirical degrees approach the target law") {
    RandomStream rng(45);
    const auto G = DegreeDistribution::geometric(0.5);
    const auto g = dgrd::generate(G, 20000, rng);
    const double tv = verify::tv_distance(verify::empirical_distribution(g), dgrd::target(G));
    CHECK(tv < 0.03);
}
