#include "randgraph/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "randgraph/errors.hpp"

namespace randgraph::config_model {

std::vector<std::int64_t> sample_degree_sequence(const DegreeDistribution& F, std::int64_t n,
                                                 ParityPolicy parity, RandomStream& rng,
                                                 bool* odd_sum_fixed) {
    if (n < 1) throw InvalidParameterError("vertex count must be >= 1");
    if (odd_sum_fixed) *odd_sum_fixed = false;

    std::vector<std::int64_t> degrees(n);
    auto draw = [&] {
        std::int64_t sum = 0;
        for (auto& d : degrees) {
            d = F.sample(rng);
            sum += d;
        }
        return sum;
    };

    std::int64_t sum = draw();
    if (sum % 2 == 0) return degrees;

    if (parity == ParityPolicy::regenerate) {
        for (std::int64_t redraw = 0; redraw < kRegenerateLimit; ++redraw) {
            sum = draw();
            if (sum % 2 == 0) return degrees;
        }
        throw NonConvergenceError(
            "degree sum stayed odd after " + std::to_string(kRegenerateLimit) +
            " redraws (is the law concentrated on odd values with n odd?)");
    }

    // remove_stub: drop one stub chosen uniformly among all stubs, i.e.
    // vertex i with probability d_i / sum.
    std::int64_t target = static_cast<std::int64_t>(rng.next_below(sum));
    for (auto& d : degrees) {
        if (target < d) {
            --d;
            break;
        }
        target -= d;
    }
    if (odd_sum_fixed) *odd_sum_fixed = true;
    return degrees;
}

Multigraph pair_stubs(std::span<const std::int64_t> degrees, RandomStream& rng) {
    std::int64_t total = 0;
    for (const auto d : degrees) {
        if (d < 0) throw InvalidInputError("negative degree");
        total += d;
    }
    if (total % 2 != 0) throw InvalidInputError("stub total must be even");

    std::vector<VertexId> stubs;
    stubs.reserve(total);
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        stubs.insert(stubs.end(), degrees[v], static_cast<VertexId>(v));
    }
    // A uniform shuffle followed by pairing consecutive entries is equal in
    // law to drawing uniform stub pairs sequentially.
    rng.shuffle(stubs);

    std::vector<EdgePair> edges;
    edges.reserve(total / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    return Multigraph(static_cast<std::int64_t>(degrees.size()), std::move(edges));
}

std::pair<SimpleGraph, GenerationReport> erased(const DegreeDistribution& F, std::int64_t n,
                                                ParityPolicy parity, RandomStream& rng) {
    bool odd_fixed = false;
    const auto degrees = sample_degree_sequence(F, n, parity, rng, &odd_fixed);
    const auto mg = pair_stubs(degrees, rng);
    auto [graph, report] = erase(mg);
    report.odd_sum_fixed = odd_fixed;
    report.seed = rng.seed();
    return {std::move(graph), std::move(report)};
}

std::pair<SimpleGraph, GenerationReport> truncated_erased(const DegreeDistribution& F,
                                                          std::int64_t n, double a,
                                                          ParityPolicy parity,
                                                          RandomStream& rng) {
    if (!(a > 0.0) || !(a < 1.0)) {
        throw InvalidParameterError("truncation exponent a must lie in (0, 1)");
    }
    const auto cutoff =
        static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n), a)));
    const auto truncated = conditional_truncate(F, cutoff);
    return erased(truncated, n, parity, rng);
}

std::pair<SimpleGraph, GenerationReport> repeated(const DegreeDistribution& F, std::int64_t n,
                                                  ParityPolicy parity, RepeatedOptions options,
                                                  RandomStream& rng) {
    if (options.max_attempts < 1) throw InvalidParameterError("max_attempts must be >= 1");

    bool odd_fixed = false;
    std::vector<std::int64_t> degrees;
    if (!options.redraw_degrees) {
        degrees = sample_degree_sequence(F, n, parity, rng, &odd_fixed);
    }
    for (std::int64_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
        if (options.redraw_degrees) {
            degrees = sample_degree_sequence(F, n, parity, rng, &odd_fixed);
        }
        const auto mg = pair_stubs(degrees, rng);
        if (!is_simple(mg)) continue;
        auto [graph, report] = erase(mg);
        report.odd_sum_fixed = odd_fixed;
        report.attempts = attempt;
        report.seed = rng.seed();
        return {std::move(graph), std::move(report)};
    }
    throw TooManyAttemptsError(
        options.max_attempts,
        "no simple pairing after " + std::to_string(options.max_attempts) + " attempts");
}

}  // namespace randgraph::config_model
