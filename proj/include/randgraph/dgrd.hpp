#pragma once

#include <cstdint>
#include <vector>

#include "randgraph/distribution.hpp"
#include "randgraph/graph.hpp"
#include "randgraph/rng.hpp"

namespace randgraph::dgrd {

/// Directed graph with removed directions: each vertex draws an out-degree
/// from cap_truncate(G, n), shoots that many edges at distinct random
/// targets other than itself, and the undirected result keeps {i, j} as
/// soon as either direction exists.
SimpleGraph generate(const DegreeDistribution& G, std::int64_t n, RandomStream& rng);

/// Directed-phase telemetry for instrumented runs.
struct Trace {
    std::vector<std::int64_t> out_degrees;            // Y_i
    std::vector<std::vector<VertexId>> out_targets;   // sorted target lists
};

SimpleGraph generate_traced(const DegreeDistribution& G, std::int64_t n, RandomStream& rng,
                            Trace& trace);

/// The asymptotic degree law of the construction: G convolved with a
/// Poisson of mean mean(G).
DegreeDistribution target(const DegreeDistribution& G);

/// Source G producing a Poisson(mu_f) degree law: Poisson(mu_f / 2).
DegreeDistribution poisson_source(double mu_f);

/// Source G for a mixed Poisson degree law with parameter law Q: mixed
/// Poisson with Q shifted left by mean(Q)/2. Feasible only when the
/// support infimum of Q strictly exceeds mean(Q)/2 (checked without slack;
/// exact equality is an error).
DegreeDistribution mixed_poisson_source(const MixingLaw& Q);

/// Source G for a compound Poisson degree law with rate lambda and summand
/// law R: compound Poisson with summand R' obtained by moving mass
/// mean(R)/2 from the point 1 to the point 0. Feasible only when
/// r_1 > mean(R)/2 strictly.
DegreeDistribution compound_poisson_source(double lambda, const DegreeDistribution& R);

}  // namespace randgraph::dgrd
