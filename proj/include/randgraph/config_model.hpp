#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "randgraph/distribution.hpp"
#include "randgraph/graph.hpp"
#include "randgraph/rng.hpp"

namespace randgraph::config_model {

/// How an odd stub total is repaired: remove one stub chosen uniformly
/// among all stubs, or redraw the whole degree sequence until the sum is
/// even. The second policy cannot terminate when n is odd and the degree
/// law is concentrated on the odd numbers; it gives up after 1000 redraws.
enum class ParityPolicy { remove_stub, regenerate };

inline constexpr std::int64_t kRegenerateLimit = 1000;

/// n i.i.d. degrees from F, adjusted so their sum is even.
std::vector<std::int64_t> sample_degree_sequence(const DegreeDistribution& F, std::int64_t n,
                                                 ParityPolicy parity, RandomStream& rng,
                                                 bool* odd_sum_fixed = nullptr);

/// Uniformly random perfect matching on the stubs: one stub array entry per
/// unit of degree, shuffled, paired consecutively. Requires an even total.
Multigraph pair_stubs(std::span<const std::int64_t> degrees, RandomStream& rng);

/// Erased variant: degrees -> pairing -> loop removal + edge merging.
std::pair<SimpleGraph, GenerationReport> erased(const DegreeDistribution& F, std::int64_t n,
                                                ParityPolicy parity, RandomStream& rng);

/// Erased variant with degrees conditioned on D <= floor(n^a), a in (0, 1).
std::pair<SimpleGraph, GenerationReport> truncated_erased(const DegreeDistribution& F,
                                                          std::int64_t n, double a,
                                                          ParityPolicy parity,
                                                          RandomStream& rng);

struct RepeatedOptions {
    std::int64_t max_attempts = 10000;
    /// Redraw the degree sequence on every attempt (matches conditioning
    /// the empirical law of fresh i.i.d. degrees on simplicity). When
    /// false, degrees are drawn once and only the pairing is repeated.
    bool redraw_degrees = true;
};

/// Repeated variant: re-run the pairing until it is simple by chance.
/// Throws TooManyAttemptsError past max_attempts.
std::pair<SimpleGraph, GenerationReport> repeated(const DegreeDistribution& F, std::int64_t n,
                                                  ParityPolicy parity, RepeatedOptions options,
                                                  RandomStream& rng);

}  // namespace randgraph::config_model
