#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "randgraph/distribution.hpp"
#include "randgraph/graph.hpp"
#include "randgraph/rng.hpp"

namespace randgraph::grg {

/// The i.i.d. weights driving the generalized random graph. Edge odds are
/// r_ij = W_i W_j / n^beta; beta = 1 is the finite-mean scaling, beta =
/// 1/alpha the heavy-tail one. The scaling exponent is explicit so the two
/// regimes cannot be mixed up silently.
struct WeightSequence {
    std::vector<double> weights;
    double scaling_exponent = 1.0;

    std::int64_t size() const { return static_cast<std::int64_t>(weights.size()); }
    double sum() const;
};

WeightSequence sample_weights(const MixingLaw& law, std::int64_t n, double beta,
                              RandomStream& rng);

/// Exact model: each pair {i, j} gets an edge independently with
/// probability r / (1 + r), r = W_i W_j / n^beta. Theta(n^2) pair sweeps.
SimpleGraph grg_exact(const WeightSequence& w, RandomStream& rng);

/// Same output law as grg_exact but with one stream per row
/// (row_stream(seed, i)), evaluated on `threads` workers. The result
/// depends only on (weights, seed), not on the thread count.
SimpleGraph grg_exact_parallel(const WeightSequence& w, std::uint64_t seed, int threads);

/// O(n + m) approximation: draw a Poisson number of edge slots with mean
/// (sum W)^2 / (2 n^beta), pick each endpoint weight-proportionally via an
/// alias table, then discard loops and duplicates. Per-vertex conditional
/// degree mean before discarding is W_i sum(W) / n^beta, matching the exact
/// model to first order; the discards bias degrees down by O(1/n).
SimpleGraph grg_fast(const WeightSequence& w, RandomStream& rng);

/// gamma = c * integral_0^inf (1+x)^-2 x^-alpha dx, alpha in (0, 1).
/// Adaptive quadrature split at x = 1 with substitutions that remove the
/// endpoint singularities; absolute error <= 1e-8.
double gamma_constant(double alpha, double c);

struct FiniteMeanRegime {};
struct HeavyTailRegime {
    double alpha;  // tail exponent of P(W > w) ~ c w^{-alpha}
    double c;
};

/// Limiting degree law: mixed Poisson with parameter x * mu_W.
DegreeDistribution grg_limit_pmf(const MixingLaw& law, FiniteMeanRegime);
/// Limiting degree law: mixed Poisson with parameter gamma * x^alpha.
DegreeDistribution grg_limit_pmf(const MixingLaw& law, HeavyTailRegime regime);

/// One decimal weight per line, full round-trip precision.
void write_weights(std::ostream& os, const WeightSequence& w);
WeightSequence read_weights(std::istream& is, double beta);

}  // namespace randgraph::grg
