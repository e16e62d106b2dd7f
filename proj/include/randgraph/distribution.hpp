#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "randgraph/rng.hpp"

namespace randgraph {

/// Mass below which the dense materialization of a pmf is allowed to stop.
inline constexpr double kTailTolerance = 1e-12;
/// Hard cap on the number of dense pmf entries (heavy-tailed laws cannot
/// reach kTailTolerance and instead keep an analytic tail past the cap).
inline constexpr std::int64_t kMaxMaterialized = std::int64_t{1} << 20;

/// A nonnegative-real-valued mixing law for mixed Poisson distributions:
/// either a finite set of atoms, or a continuous density represented by a
/// fixed 2048-node quadrature grid (256 log-spaced panels x 8-point
/// Gauss-Legendre) spanning the [1e-9, 1-1e-9] quantile range, with node
/// weights renormalized to unit mass. Sampling uses exact quantile
/// inversion, not the grid.
class MixingLaw {
public:
    struct Node {
        double value;
        double weight;
    };

    struct ParetoTail {
        double alpha;  // P(W > w) = c * w^{-alpha} for w >= x_min
        double c;
    };

    static MixingLaw point_mass(double w);
    /// Atoms need not be sorted; weights must sum to 1 within 1e-9.
    static MixingLaw discrete(std::vector<Node> atoms);
    static MixingLaw exponential(double mean);
    static MixingLaw uniform_interval(double a, double b);
    static MixingLaw pareto(double alpha, double x_min);

    double mean() const { return mean_; }
    bool mean_is_finite() const { return mean_ < std::numeric_limits<double>::infinity(); }
    bool second_moment_finite() const { return second_moment_finite_; }
    double support_infimum() const { return support_inf_; }
    bool is_discrete() const { return discrete_; }
    std::span<const Node> nodes() const { return nodes_; }

    double sample(RandomStream& rng) const;

    /// The law of (X - delta); requires support_infimum() >= delta.
    MixingLaw shifted_left(double delta) const;

    /// Monotone transform Y = f(X); the caller supplies the moments f does
    /// not preserve.
    static MixingLaw transformed(const MixingLaw& base, std::function<double(double)> f,
                                 double mean, double support_inf, bool second_moment_finite);

    std::optional<ParetoTail> pareto_tail() const { return pareto_tail_; }

private:
    MixingLaw() = default;

    std::vector<Node> nodes_;
    std::function<double(double)> quantile_;  // null for discrete laws
    double mean_ = 0.0;
    double support_inf_ = 0.0;
    bool discrete_ = true;
    bool second_moment_finite_ = true;
    std::optional<ParetoTail> pareto_tail_;
};

/// A probability mass function on the non-negative integers together with
/// its moment summary.
///
/// The pmf is materialized densely from k = 0 up to the smallest K whose
/// remaining tail mass drops below kTailTolerance, capped at
/// kMaxMaterialized entries. Laws that hit the cap (power laws with small
/// exponent, heavy-tailed mixed Poisson) either carry an analytic tail so
/// that pmf/cdf queries stay exact beyond the cap, or account the missing
/// mass in mass_beyond().
///
/// Immutable after construction and safe to share across threads; sampling
/// is CDF inversion (binary search) against an externally supplied stream,
/// one stream per thread.
class DegreeDistribution {
public:
    static DegreeDistribution point_mass(std::int64_t k);
    static DegreeDistribution poisson(double mu);
    /// pmf(k) = p (1-p)^k on k = 0, 1, 2, ...
    static DegreeDistribution geometric(double success_prob);
    /// pmf(k) proportional to k^{-tau} for k >= k_min; requires tau > 1.
    /// Mean is flagged infinite iff tau <= 2; second moment finite iff tau > 3.
    static DegreeDistribution power_law(double tau, std::int64_t k_min);
    /// Explicit finite-support pmf starting at k = 0; must sum to 1 within 1e-9.
    static DegreeDistribution from_pmf(std::vector<double> pmf);

    double pmf_at(std::int64_t k) const;
    /// P(X <= k).
    double cdf_at(std::int64_t k) const;
    /// P(X >= k).
    double ccdf_at(std::int64_t k) const { return k <= 0 ? total_mass() : mass_beyond(k - 1); }
    /// P(X > k), including analytic tail / unmaterialized residual.
    double mass_beyond(std::int64_t k) const;

    std::int64_t sample(RandomStream& rng) const;

    /// Mean over the evaluated support; +infinity marker when the law has
    /// no finite mean.
    double mean() const { return mean_; }
    bool mean_is_finite() const { return mean_ < std::numeric_limits<double>::infinity(); }
    bool second_moment_finite() const { return second_moment_finite_; }
    std::optional<std::int64_t> support_upper() const { return support_upper_; }

    std::int64_t materialized_size() const { return static_cast<std::int64_t>(pmf_.size()); }
    double materialized_mass() const { return cdf_.empty() ? 0.0 : cdf_.back(); }
    /// Materialized mass plus analytic tail; 1 up to rounding for all laws.
    double total_mass() const;
    std::span<const double> materialized_pmf() const { return pmf_; }

    friend DegreeDistribution conditional_truncate(const DegreeDistribution&, std::int64_t);
    friend DegreeDistribution cap_truncate(const DegreeDistribution&, std::int64_t);
    friend DegreeDistribution convolve_poisson(const DegreeDistribution&, double);
    friend DegreeDistribution compound_poisson(double, const DegreeDistribution&);
    friend DegreeDistribution mixed_poisson(const MixingLaw&, double);

private:
    DegreeDistribution() = default;
    void finalize();  // builds cdf_, mean_ from pmf_

    std::vector<double> pmf_;
    std::vector<double> cdf_;
    // Analytic tail for k >= materialized_size(): pmf value and P(X > k).
    std::function<double(std::int64_t)> tail_pmf_;
    std::function<double(std::int64_t)> tail_beyond_;
    double residual_mass_ = 0.0;  // unmaterialized mass with no analytic form
    double mean_ = 0.0;
    bool second_moment_finite_ = true;
    std::optional<std::int64_t> support_upper_;
};

/// Condition on X <= cutoff: pmf'(j) = pmf(j) / CDF(cutoff) for j <= cutoff.
/// Errors if the law has no mass at or below the cutoff.
DegreeDistribution conditional_truncate(const DegreeDistribution& dist, std::int64_t cutoff);

/// Lump the tail: pmf'(k) = pmf(k) for k <= n-2, pmf'(n-1) = P(X >= n-1).
/// Mass is moved, not renormalized. Requires n >= 2.
DegreeDistribution cap_truncate(const DegreeDistribution& dist, std::int64_t n);

/// Law of X + Po(mu), X ~ dist independent of the Poisson summand.
DegreeDistribution convolve_poisson(const DegreeDistribution& dist, double mu);

/// Law of the sum of Po(lambda) i.i.d. copies of the summand, evaluated by
/// the standard recursion p_0 = e^{lambda (r_0 - 1)},
/// p_k = (lambda / k) sum_{j=1..k} j r_j p_{k-j}.
DegreeDistribution compound_poisson(double lambda, const DegreeDistribution& summand);

/// Mixed Poisson: pmf(k) = E_mix[ Po(scale * X) pmf at k ], exact summation
/// for discrete mixing laws, quadrature-grid summation for continuous ones.
DegreeDistribution mixed_poisson(const MixingLaw& mix, double scale);

/// Poisson sample by inversion over a banded materialization of the pmf;
/// handles arbitrary large mu.
std::int64_t sample_poisson(double mu, RandomStream& rng);

}  // namespace randgraph
