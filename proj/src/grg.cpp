#include "randgraph/grg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

#include "randgraph/alias.hpp"
#include "randgraph/errors.hpp"
#include "randgraph/quadrature.hpp"

namespace randgraph::grg {

double WeightSequence::sum() const {
    double s = 0.0;
    for (const double w : weights) s += w;
    return s;
}

WeightSequence sample_weights(const MixingLaw& law, std::int64_t n, double beta,
                              RandomStream& rng) {
    if (n < 0) throw InvalidParameterError("weight count must be >= 0");
    WeightSequence w;
    w.scaling_exponent = beta;
    w.weights.resize(n);
    for (auto& x : w.weights) x = law.sample(rng);
    return w;
}

namespace {

// Rows [row_begin, row_end) of the pair sweep; appends the sampled edges.
void sweep_rows(const WeightSequence& w, double inv_scale, std::int64_t row_begin,
                std::int64_t row_end, RandomStream& rng, std::vector<EdgePair>& out) {
    const auto n = w.size();
    for (std::int64_t i = row_begin; i < row_end; ++i) {
        const double wi = w.weights[i] * inv_scale;
        if (wi == 0.0) continue;
        for (std::int64_t j = i + 1; j < n; ++j) {
            const double r = wi * w.weights[j];
            double p = r / (1.0 + r);
            if (r > 1e15 || !std::isfinite(r)) p = 1.0;
            if (rng.next_double() < p) {
                out.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        }
    }
}

}  // namespace

SimpleGraph grg_exact(const WeightSequence& w, RandomStream& rng) {
    const auto n = w.size();
    if (n < 1) throw InvalidParameterError("grg needs n >= 1");
    const double inv_scale = std::pow(static_cast<double>(n), -w.scaling_exponent);
    std::vector<EdgePair> edges;
    sweep_rows(w, inv_scale, 0, n, rng, edges);
    return SimpleGraph::from_pairs(n, std::move(edges));
}

SimpleGraph grg_exact_parallel(const WeightSequence& w, std::uint64_t seed, int threads) {
    const auto n = w.size();
    if (n < 1) throw InvalidParameterError("grg needs n >= 1");
    if (threads < 1) threads = 1;
    const double inv_scale = std::pow(static_cast<double>(n), -w.scaling_exponent);

    std::vector<std::vector<EdgePair>> per_row(n);
    std::vector<std::thread> pool;
    std::atomic<std::int64_t> next_row{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t i = next_row.fetch_add(1);
            if (i >= n) return;
            RandomStream rs = row_stream(seed, static_cast<std::uint64_t>(i));
            sweep_rows(w, inv_scale, i, i + 1, rs, per_row[i]);
        }
    };
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<EdgePair> edges;
    for (auto& row : per_row) edges.insert(edges.end(), row.begin(), row.end());
    return SimpleGraph::from_pairs(n, std::move(edges));
}

SimpleGraph grg_fast(const WeightSequence& w, RandomStream& rng) {
    const auto n = w.size();
    if (n < 2) throw InvalidParameterError("grg_fast needs n >= 2");
    const double total = w.sum();
    if (!(total > 0.0)) return SimpleGraph::empty(n);

    const double inv_scale = std::pow(static_cast<double>(n), -w.scaling_exponent);
    const double mu = 0.5 * total * total * inv_scale;
    const std::int64_t slots = sample_poisson(mu, rng);

    const AliasTable endpoint(w.weights);
    std::vector<EdgePair> edges;
    edges.reserve(slots);
    for (std::int64_t s = 0; s < slots; ++s) {
        const auto i = endpoint.sample(rng);
        const auto j = endpoint.sample(rng);
        if (i != j) edges.emplace_back(i, j);
    }
    return SimpleGraph::from_pairs(n, std::move(edges));
}

double gamma_constant(double alpha, double c) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw InvalidParameterError("gamma constant needs alpha in (0, 1)");
    }
    // Split at x = 1 and substitute away the endpoint singularities:
    //   int_0^1 x^-a (1+x)^-2 dx    -> x = t^{1/(1-a)} gives the first form;
    //   int_1^inf x^-a (1+x)^-2 dx  -> x = 1/y, then y = s^{1/(1+a)}.
    const double e1 = 1.0 / (1.0 - alpha);
    const double head = e1 * adaptive_simpson(
                                 [e1](double t) {
                                     const double x = std::pow(t, e1);
                                     const double one_plus = 1.0 + x;
                                     return 1.0 / (one_plus * one_plus);
                                 },
                                 0.0, 1.0, 1e-12);
    const double e2 = 1.0 / (1.0 + alpha);
    const double tail = e2 * adaptive_simpson(
                                 [e2](double s) {
                                     const double y = std::pow(s, e2);
                                     const double one_plus = 1.0 + y;
                                     return 1.0 / (one_plus * one_plus);
                                 },
                                 0.0, 1.0, 1e-12);
    return c * (head + tail);
}

DegreeDistribution grg_limit_pmf(const MixingLaw& law, FiniteMeanRegime) {
    if (!law.mean_is_finite()) {
        throw InvalidParameterError("finite-mean limit needs a finite-mean weight law");
    }
    return mixed_poisson(law, law.mean());
}

DegreeDistribution grg_limit_pmf(const MixingLaw& law, HeavyTailRegime regime) {
    const double gamma = gamma_constant(regime.alpha, regime.c);
    const double alpha = regime.alpha;
    // Parameter gamma * W^alpha has a tail of index 1, hence infinite mean.
    const auto rate = MixingLaw::transformed(
        law, [gamma, alpha](double x) { return gamma * std::pow(x, alpha); },
        std::numeric_limits<double>::infinity(),
        gamma * std::pow(law.support_infimum(), alpha), false);
    return mixed_poisson(rate, 1.0);
}

void write_weights(std::ostream& os, const WeightSequence& w) {
    os.precision(17);
    for (const double x : w.weights) os << x << "\n";
}

WeightSequence read_weights(std::istream& is, double beta) {
    WeightSequence w;
    w.scaling_exponent = beta;
    double x = 0.0;
    while (is >> x) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw InvalidInputError("weights must be finite and >= 0");
        }
        w.weights.push_back(x);
    }
    return w;
}

}  // namespace randgraph::grg
