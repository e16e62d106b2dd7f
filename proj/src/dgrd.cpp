#include "randgraph/dgrd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "randgraph/errors.hpp"

namespace randgraph::dgrd {

namespace {

// Y distinct targets from {0..n-1} \ {self}. Partial Fisher-Yates over a
// materialized candidate array when Y is a sizable fraction of n, rejection
// sampling with a seen-set otherwise; O(Y) expected either way.
std::vector<VertexId> draw_targets(std::int64_t n, VertexId self, std::int64_t y,
                                   RandomStream& rng) {
    std::vector<VertexId> targets;
    targets.reserve(y);
    if (y > n / 16) {
        std::vector<VertexId> candidates;
        candidates.reserve(n - 1);
        for (std::int64_t v = 0; v < n; ++v) {
            if (v != self) candidates.push_back(static_cast<VertexId>(v));
        }
        for (std::int64_t t = 0; t < y; ++t) {
            const auto pick = t + static_cast<std::int64_t>(
                                      rng.next_below(candidates.size() - t));
            std::swap(candidates[t], candidates[pick]);
            targets.push_back(candidates[t]);
        }
    } else {
        std::unordered_set<VertexId> seen;
        seen.reserve(y * 2);
        while (static_cast<std::int64_t>(targets.size()) < y) {
            auto v = static_cast<VertexId>(rng.next_below(n - 1));
            if (v >= self) ++v;  // skip self
            if (seen.insert(v).second) targets.push_back(v);
        }
    }
    return targets;
}

SimpleGraph generate_impl(const DegreeDistribution& G, std::int64_t n, RandomStream& rng,
                          Trace* trace) {
    if (n < 2) throw InvalidParameterError("dgrd needs n >= 2");
    if (!G.mean_is_finite()) {
        throw InvalidParameterError("dgrd needs an out-degree law with finite mean");
    }
    const auto capped = cap_truncate(G, n);

    std::vector<EdgePair> pairs;
    if (trace) {
        trace->out_degrees.assign(n, 0);
        trace->out_targets.assign(n, {});
    }
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t y = capped.sample(rng);
        auto targets = draw_targets(n, static_cast<VertexId>(i), y, rng);
        for (const auto t : targets) {
            pairs.emplace_back(static_cast<VertexId>(i), t);
        }
        if (trace) {
            trace->out_degrees[i] = y;
            std::sort(targets.begin(), targets.end());
            trace->out_targets[i] = std::move(targets);
        }
    }
    // Dropping directions and fusing duplicates is the graph core's
    // sort + dedup build.
    return SimpleGraph::from_pairs(n, std::move(pairs));
}

}  // namespace

SimpleGraph generate(const DegreeDistribution& G, std::int64_t n, RandomStream& rng) {
    return generate_impl(G, n, rng, nullptr);
}

SimpleGraph generate_traced(const DegreeDistribution& G, std::int64_t n, RandomStream& rng,
                            Trace& trace) {
    return generate_impl(G, n, rng, &trace);
}

DegreeDistribution target(const DegreeDistribution& G) {
    if (!G.mean_is_finite()) {
        throw InvalidParameterError("dgrd target needs a finite-mean out-degree law");
    }
    return convolve_poisson(G, G.mean());
}

DegreeDistribution poisson_source(double mu_f) {
    if (mu_f < 0.0) throw InvalidParameterError("poisson recipe needs mu >= 0");
    if (mu_f == 0.0) return DegreeDistribution::point_mass(0);
    return DegreeDistribution::poisson(mu_f / 2.0);
}

DegreeDistribution mixed_poisson_source(const MixingLaw& Q) {
    if (!Q.mean_is_finite()) {
        throw InvalidParameterError("mixed poisson recipe needs a finite-mean parameter law");
    }
    const double shift = Q.mean() / 2.0;
    if (!(Q.support_infimum() > shift)) {
        std::ostringstream msg;
        msg << "mixed poisson recipe infeasible: requires xi_Q - mu_Q/2 > 0, got xi_Q="
            << Q.support_infimum() << ", mu_Q/2=" << shift;
        throw RecipeInfeasibleError(msg.str());
    }
    return mixed_poisson(Q.shifted_left(shift), 1.0);
}

DegreeDistribution compound_poisson_source(double lambda, const DegreeDistribution& R) {
    if (!(lambda > 0.0)) throw InvalidParameterError("compound recipe needs lambda > 0");
    const double half_mean = R.mean() / 2.0;
    const double r1 = R.pmf_at(1);
    if (!(r1 > half_mean)) {
        std::ostringstream msg;
        msg << "compound poisson recipe infeasible: requires r_1 > mu_R/2, got r_1=" << r1
            << ", mu_R/2=" << half_mean;
        throw RecipeInfeasibleError(msg.str());
    }
    // Move mass mu_R/2 from the point 1 to the point 0.
    std::vector<double> shifted(R.materialized_pmf().begin(), R.materialized_pmf().end());
    if (shifted.size() < 2) shifted.resize(2, 0.0);
    shifted[0] += half_mean;
    shifted[1] -= half_mean;
    return compound_poisson(lambda, DegreeDistribution::from_pmf(std::move(shifted)));
}

}  // namespace randgraph::dgrd
