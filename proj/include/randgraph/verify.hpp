#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "randgraph/distribution.hpp"
#include "randgraph/graph.hpp"
#include "randgraph/rng.hpp"

namespace randgraph::verify {

/// Empirical degree law: pmf(j) = N_j / n.
DegreeDistribution empirical_distribution(const SimpleGraph& g);

/// Total variation distance: half the L1 distance over the union of
/// supports, analytic tails included.
double tv_distance(const DegreeDistribution& p, const DegreeDistribution& q);

/// Share of vertices that lost at least one stub to erasure.
double erasure_fraction(const GenerationReport& report);

struct SimpleProbability {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::int64_t trials = 0;
};

/// Fraction of independent stub pairings (fresh degrees each trial) that
/// come out simple, with the binomial standard error.
SimpleProbability estimate_simple_probability(const DegreeDistribution& F, std::int64_t n,
                                              std::int64_t trials, RandomStream& rng);

/// Least-squares slope of log ccdf(k) against log k over integer
/// k in [k_lo, k_hi]; the ccdf must stay positive on the range.
double tail_exponent(const DegreeDistribution& p, std::int64_t k_lo, std::int64_t k_hi);

/// Flat key=value report block; keys in fixed order, absent keys omitted.
struct ReportFields {
    std::optional<std::string> model;
    std::optional<std::int64_t> n;
    std::optional<std::uint64_t> seed;
    std::optional<double> tv;
    std::optional<double> erasure_fraction;
    std::optional<std::int64_t> attempts;
    std::optional<double> tail_slope;
};

void write_report(std::ostream& os, const ReportFields& fields);

}  // namespace randgraph::verify
