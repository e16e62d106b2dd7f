#include "randgraph/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "randgraph/errors.hpp"
#include "randgraph/quadrature.hpp"

namespace randgraph {

namespace {

constexpr int kGridPanels = 256;  // x 8 Gauss-Legendre points = 2048 nodes
constexpr double kQuantileEps = 1e-9;

// Quadrature grid for a continuous density on (0, inf): log-spaced panels
// between the 1e-9 and 1-1e-9 quantiles, 8-point Gauss-Legendre per panel,
// node weights renormalized to unit mass.
std::vector<MixingLaw::Node> build_grid(const std::function<double(double)>& quantile,
                                        const std::function<double(double)>& density) {
    const double x_lo = quantile(kQuantileEps);
    const double x_hi = quantile(1.0 - kQuantileEps);
    if (!(x_lo > 0.0) || !(x_hi > x_lo)) {
        throw InvalidParameterError("mixing law quantile range is degenerate");
    }
    const double y_lo = std::log(x_lo);
    const double y_hi = std::log(x_hi);
    const double panel = (y_hi - y_lo) / kGridPanels;

    std::vector<MixingLaw::Node> grid;
    grid.reserve(static_cast<std::size_t>(kGridPanels) * 8);
    double total = 0.0;
    for (int p = 0; p < kGridPanels; ++p) {
        const double ya = y_lo + p * panel;
        const double mid = ya + 0.5 * panel;
        const double half = 0.5 * panel;
        for (std::size_t i = 0; i < 8; ++i) {
            const double y = mid + half * GaussLegendre8::nodes[i];
            const double x = std::exp(y);
            // d/dy mass = density(x) * x under the substitution x = e^y
            const double w = GaussLegendre8::weights[i] * half * density(x) * x;
            grid.push_back({x, w});
            total += w;
        }
    }
    for (auto& node : grid) node.weight /= total;
    return grid;
}

// Adds weight * Po(lambda) into acc, growing acc as needed. The pmf is
// evaluated by multiplicative recursion outward from the mode, restricted
// to a +-12 sigma band (mass outside is < 1e-30). Returns the mass
// actually deposited; nodes whose band starts past the materialization cap
// deposit nothing.
double accumulate_poisson(std::vector<double>& acc, double weight, double lambda) {
    if (weight <= 0.0) return 0.0;
    if (lambda <= 0.0) {
        if (acc.empty()) acc.resize(1, 0.0);
        acc[0] += weight;
        return weight;
    }
    const double sd = std::sqrt(lambda);
    std::int64_t lo = 0;
    if (lambda > 400.0) lo = static_cast<std::int64_t>(lambda - 12.0 * sd - 50.0);
    if (lo >= kMaxMaterialized) return 0.0;
    std::int64_t hi = static_cast<std::int64_t>(lambda + 12.0 * sd + 50.0);
    hi = std::min(hi, kMaxMaterialized - 1);

    const std::int64_t mode = std::clamp(static_cast<std::int64_t>(lambda), lo, hi);
    const double log_pm = -lambda + static_cast<double>(mode) * std::log(lambda) -
                          std::lgamma(static_cast<double>(mode) + 1.0);
    const double pm = std::exp(log_pm);

    if (static_cast<std::int64_t>(acc.size()) < hi + 1) acc.resize(hi + 1, 0.0);

    double deposited = 0.0;
    double p = pm;
    for (std::int64_t k = mode; k <= hi; ++k) {
        acc[k] += weight * p;
        deposited += weight * p;
        p *= lambda / static_cast<double>(k + 1);
    }
    p = pm;
    for (std::int64_t k = mode; k > lo; --k) {
        p *= static_cast<double>(k) / lambda;
        acc[k - 1] += weight * p;
        deposited += weight * p;
    }
    return deposited;
}

// Drops trailing pmf entries as long as the dropped mass stays below
// kTailTolerance.
void trim_tail(std::vector<double>& pmf) {
    double dropped = 0.0;
    std::size_t k = pmf.size();
    while (k > 1 && dropped + pmf[k - 1] <= kTailTolerance) {
        dropped += pmf[k - 1];
        --k;
    }
    pmf.resize(k);
}

// sum_{k >= m} k^{-tau}: direct terms up to max(m, 4096), Euler-Maclaurin
// for the remainder. Accurate to ~1e-15 relative for tau in (1, 8].
double power_tail_from(double tau, double m) {
    const double boundary = std::max(m, 4096.0);
    double s = 0.0;
    for (double k = m; k < boundary; k += 1.0) s += std::pow(k, -tau);
    const double b1 = std::pow(boundary, 1.0 - tau) / (tau - 1.0);
    const double b2 = 0.5 * std::pow(boundary, -tau);
    const double b3 = tau * std::pow(boundary, -tau - 1.0) / 12.0;
    const double b4 = tau * (tau + 1.0) * (tau + 2.0) * std::pow(boundary, -tau - 3.0) / 720.0;
    return s + b1 + b2 + b3 - b4;
}

}  // namespace

// ---------------------------------------------------------------------------
// MixingLaw

MixingLaw MixingLaw::point_mass(double w) {
    return discrete({{w, 1.0}});
}

MixingLaw MixingLaw::discrete(std::vector<Node> atoms) {
    if (atoms.empty()) throw InvalidParameterError("discrete mixing law needs atoms");
    std::sort(atoms.begin(), atoms.end(),
              [](const Node& a, const Node& b) { return a.value < b.value; });
    double total = 0.0;
    double mean = 0.0;
    for (const auto& a : atoms) {
        if (a.value < 0.0 || a.weight < 0.0) {
            throw InvalidParameterError("mixing atoms need value >= 0, weight >= 0");
        }
        total += a.weight;
        mean += a.weight * a.value;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
        throw InvalidParameterError("mixing atom weights must sum to 1");
    }
    MixingLaw law;
    law.nodes_ = std::move(atoms);
    law.mean_ = mean;
    law.support_inf_ = law.nodes_.front().value;
    law.discrete_ = true;
    law.second_moment_finite_ = true;
    return law;
}

MixingLaw MixingLaw::exponential(double mean) {
    if (!(mean > 0.0)) throw InvalidParameterError("exponential mean must be positive");
    MixingLaw law;
    law.quantile_ = [mean](double u) { return -mean * std::log1p(-u); };
    law.nodes_ = build_grid(law.quantile_,
                            [mean](double x) { return std::exp(-x / mean) / mean; });
    law.mean_ = mean;
    law.support_inf_ = 0.0;
    law.discrete_ = false;
    law.second_moment_finite_ = true;
    return law;
}

MixingLaw MixingLaw::uniform_interval(double a, double b) {
    if (!(a >= 0.0) || !(b > a)) {
        throw InvalidParameterError("uniform mixing law needs 0 <= a < b");
    }
    MixingLaw law;
    law.quantile_ = [a, b](double u) { return a + (b - a) * u; };
    const double dens = 1.0 / (b - a);
    law.nodes_ = build_grid(law.quantile_, [dens](double) { return dens; });
    law.mean_ = 0.5 * (a + b);
    law.support_inf_ = a;
    law.discrete_ = false;
    law.second_moment_finite_ = true;
    return law;
}

MixingLaw MixingLaw::pareto(double alpha, double x_min) {
    if (!(alpha > 0.0) || !(x_min > 0.0)) {
        throw InvalidParameterError("pareto mixing law needs alpha > 0 and x_min > 0");
    }
    MixingLaw law;
    law.quantile_ = [alpha, x_min](double u) {
        return x_min * std::pow(1.0 - u, -1.0 / alpha);
    };
    const double scale = alpha * std::pow(x_min, alpha);
    law.nodes_ = build_grid(law.quantile_, [alpha, scale](double x) {
        return scale * std::pow(x, -alpha - 1.0);
    });
    law.mean_ = alpha > 1.0 ? alpha * x_min / (alpha - 1.0)
                            : std::numeric_limits<double>::infinity();
    law.support_inf_ = x_min;
    law.discrete_ = false;
    law.second_moment_finite_ = alpha > 2.0;
    law.pareto_tail_ = ParetoTail{alpha, std::pow(x_min, alpha)};
    return law;
}

double MixingLaw::sample(RandomStream& rng) const {
    const double u = rng.next_double();
    if (!discrete_) return quantile_(u);
    double cum = 0.0;
    for (const auto& node : nodes_) {
        cum += node.weight;
        if (u < cum) return node.value;
    }
    return nodes_.back().value;
}

MixingLaw MixingLaw::shifted_left(double delta) const {
    if (support_inf_ < delta) {
        throw InvalidParameterError("shift would move mixing mass below zero");
    }
    MixingLaw law;
    law.nodes_ = nodes_;
    for (auto& node : law.nodes_) node.value = std::max(0.0, node.value - delta);
    if (quantile_) {
        auto base = quantile_;
        law.quantile_ = [base, delta](double u) { return base(u) - delta; };
    }
    law.mean_ = mean_ - delta;
    law.support_inf_ = support_inf_ - delta;
    law.discrete_ = discrete_;
    law.second_moment_finite_ = second_moment_finite_;
    return law;
}

MixingLaw MixingLaw::transformed(const MixingLaw& base, std::function<double(double)> f,
                                 double mean, double support_inf,
                                 bool second_moment_finite) {
    MixingLaw law;
    law.nodes_ = base.nodes_;
    for (auto& node : law.nodes_) node.value = f(node.value);
    if (base.quantile_) {
        auto q = base.quantile_;
        law.quantile_ = [q, f](double u) { return f(q(u)); };
    }
    law.mean_ = mean;
    law.support_inf_ = support_inf;
    law.discrete_ = base.discrete_;
    law.second_moment_finite_ = second_moment_finite;
    return law;
}

// ---------------------------------------------------------------------------
// DegreeDistribution

void DegreeDistribution::finalize() {
    cdf_.resize(pmf_.size());
    double cum = 0.0;
    double mean = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
        cum += pmf_[k];
        cdf_[k] = cum;
        mean += static_cast<double>(k) * pmf_[k];
    }
    mean_ = mean;
}

DegreeDistribution DegreeDistribution::point_mass(std::int64_t k) {
    if (k < 0) throw InvalidParameterError("point mass location must be >= 0");
    DegreeDistribution d;
    d.pmf_.assign(static_cast<std::size_t>(k) + 1, 0.0);
    d.pmf_.back() = 1.0;
    d.support_upper_ = k;
    d.finalize();
    return d;
}

DegreeDistribution DegreeDistribution::poisson(double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw InvalidParameterError("poisson mean must be finite and >= 0");
    }
    DegreeDistribution d;
    accumulate_poisson(d.pmf_, 1.0, mu);
    trim_tail(d.pmf_);
    d.finalize();
    d.residual_mass_ = std::max(0.0, 1.0 - d.cdf_.back());
    return d;
}

DegreeDistribution DegreeDistribution::geometric(double success_prob) {
    if (!(success_prob > 0.0) || success_prob > 1.0) {
        throw InvalidParameterError("geometric success probability must be in (0, 1]");
    }
    DegreeDistribution d;
    if (success_prob == 1.0) {
        d.pmf_ = {1.0};
    } else {
        const double q = 1.0 - success_prob;
        const std::int64_t len = std::min<std::int64_t>(
            kMaxMaterialized,
            static_cast<std::int64_t>(std::log(kTailTolerance) / std::log(q)) + 2);
        d.pmf_.resize(len);
        double p = success_prob;
        for (auto& v : d.pmf_) {
            v = p;
            p *= q;
        }
    }
    d.finalize();
    d.residual_mass_ = std::max(0.0, 1.0 - d.cdf_.back());
    return d;
}

DegreeDistribution DegreeDistribution::power_law(double tau, std::int64_t k_min) {
    if (!(tau > 1.0)) {
        throw InvalidParameterError("power law exponent must exceed 1 (not normalizable)");
    }
    if (k_min < 1) throw InvalidParameterError("power law k_min must be >= 1");

    const double z = power_tail_from(tau, static_cast<double>(k_min));

    // Smallest K whose remaining tail drops below kTailTolerance, capped.
    const double k_need =
        std::pow((tau - 1.0) * z * kTailTolerance, 1.0 / (1.0 - tau));
    std::int64_t last = kMaxMaterialized - 1;
    if (k_need < static_cast<double>(last)) {
        last = std::max<std::int64_t>(k_min, static_cast<std::int64_t>(k_need) + 4);
    }

    DegreeDistribution d;
    d.pmf_.assign(static_cast<std::size_t>(last) + 1, 0.0);
    for (std::int64_t k = k_min; k <= last; ++k) {
        d.pmf_[k] = std::pow(static_cast<double>(k), -tau) / z;
    }
    d.finalize();
    d.tail_pmf_ = [tau, z, k_min](std::int64_t k) {
        return k < k_min ? 0.0 : std::pow(static_cast<double>(k), -tau) / z;
    };
    d.tail_beyond_ = [tau, z](std::int64_t k) {
        return power_tail_from(tau, static_cast<double>(k) + 1.0) / z;
    };
    if (tau <= 2.0) d.mean_ = std::numeric_limits<double>::infinity();
    d.second_moment_finite_ = tau > 3.0;
    return d;
}

DegreeDistribution DegreeDistribution::from_pmf(std::vector<double> pmf) {
    if (pmf.empty()) throw InvalidParameterError("pmf must be non-empty");
    double total = 0.0;
    for (double v : pmf) {
        if (v < 0.0 || v > 1.0 + 1e-12) {
            throw InvalidParameterError("pmf values must lie in [0, 1]");
        }
        total += v;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
        throw InvalidParameterError("pmf must sum to 1 within 1e-9");
    }
    DegreeDistribution d;
    d.pmf_ = std::move(pmf);
    d.support_upper_ = static_cast<std::int64_t>(d.pmf_.size()) - 1;
    d.finalize();
    return d;
}

double DegreeDistribution::pmf_at(std::int64_t k) const {
    if (k < 0) return 0.0;
    if (support_upper_ && k > *support_upper_) return 0.0;
    if (k < materialized_size()) return pmf_[static_cast<std::size_t>(k)];
    if (tail_pmf_) return tail_pmf_(k);
    return 0.0;
}

double DegreeDistribution::cdf_at(std::int64_t k) const {
    if (k < 0) return 0.0;
    if (k < materialized_size()) return cdf_[static_cast<std::size_t>(k)];
    if (tail_beyond_) return 1.0 - tail_beyond_(k);
    return cdf_.back();
}

double DegreeDistribution::total_mass() const {
    if (tail_beyond_) return cdf_.back() + tail_beyond_(materialized_size() - 1);
    return cdf_.back() + residual_mass_;
}

double DegreeDistribution::mass_beyond(std::int64_t k) const {
    if (k < 0) return total_mass();
    return std::max(0.0, total_mass() - cdf_at(k));
}

std::int64_t DegreeDistribution::sample(RandomStream& rng) const {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) return materialized_size() - 1;
    return static_cast<std::int64_t>(it - cdf_.begin());
}

// ---------------------------------------------------------------------------
// Distribution algebra

DegreeDistribution conditional_truncate(const DegreeDistribution& dist, std::int64_t cutoff) {
    if (cutoff < 0) throw InvalidParameterError("truncation cutoff must be >= 0");
    const double c = dist.cdf_at(cutoff);
    if (!(c > 0.0)) {
        throw InvalidParameterError("distribution has no mass at or below the cutoff");
    }

    std::int64_t last;
    if (cutoff < dist.materialized_size()) {
        last = cutoff;
    } else if (dist.tail_pmf_) {
        last = std::min(cutoff, kMaxMaterialized - 1);
    } else {
        last = dist.materialized_size() - 1;
    }

    DegreeDistribution d;
    d.pmf_.resize(static_cast<std::size_t>(last) + 1);
    for (std::int64_t k = 0; k <= last; ++k) d.pmf_[k] = dist.pmf_at(k) / c;
    d.support_upper_ = cutoff;
    d.finalize();
    if (cutoff > last && dist.tail_pmf_) {
        auto base_pmf = dist.tail_pmf_;
        auto base_beyond = dist.tail_beyond_;
        d.tail_pmf_ = [base_pmf, c, cutoff](std::int64_t k) {
            return k > cutoff ? 0.0 : base_pmf(k) / c;
        };
        d.tail_beyond_ = [base_beyond, c, cutoff](std::int64_t k) {
            if (k >= cutoff) return 0.0;
            return std::max(0.0, (base_beyond(k) - base_beyond(cutoff)) / c);
        };
    }
    return d;
}

DegreeDistribution cap_truncate(const DegreeDistribution& dist, std::int64_t n) {
    if (n < 2) throw InvalidParameterError("cap truncation needs n >= 2");
    DegreeDistribution d;
    d.pmf_.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k + 1 < n; ++k) d.pmf_[k] = dist.pmf_at(k);
    d.pmf_[n - 1] = dist.mass_beyond(n - 2);
    d.support_upper_ = n - 1;
    d.finalize();
    return d;
}

DegreeDistribution convolve_poisson(const DegreeDistribution& dist, double mu) {
    if (!(mu >= 0.0)) throw InvalidParameterError("poisson convolution mean must be >= 0");
    if (!dist.mean_is_finite()) {
        throw InvalidParameterError("poisson convolution needs a finite-mean distribution");
    }
    if (mu == 0.0) return dist;

    const DegreeDistribution po = DegreeDistribution::poisson(mu);
    DegreeDistribution d;
    d.pmf_.assign(dist.pmf_.size() + po.pmf_.size() - 1, 0.0);
    for (std::size_t j = 0; j < dist.pmf_.size(); ++j) {
        const double dj = dist.pmf_[j];
        if (dj == 0.0) continue;
        for (std::size_t i = 0; i < po.pmf_.size(); ++i) {
            d.pmf_[j + i] += dj * po.pmf_[i];
        }
    }
    trim_tail(d.pmf_);
    d.finalize();
    d.residual_mass_ = std::max(0.0, 1.0 - d.cdf_.back());
    d.second_moment_finite_ = dist.second_moment_finite_;
    return d;
}

DegreeDistribution compound_poisson(double lambda, const DegreeDistribution& summand) {
    if (!(lambda > 0.0)) throw InvalidParameterError("compound poisson rate must be positive");
    const auto& r = summand.materialized_pmf();

    DegreeDistribution d;
    d.pmf_.push_back(std::exp(lambda * (r[0] - 1.0)));
    double cum = d.pmf_[0];
    for (std::int64_t k = 1; k < kMaxMaterialized; ++k) {
        double s = 0.0;
        const std::int64_t j_hi = std::min<std::int64_t>(k, static_cast<std::int64_t>(r.size()) - 1);
        for (std::int64_t j = 1; j <= j_hi; ++j) {
            s += static_cast<double>(j) * r[j] * d.pmf_[k - j];
        }
        const double pk = lambda / static_cast<double>(k) * s;
        d.pmf_.push_back(pk);
        cum += pk;
        if (1.0 - cum <= kTailTolerance) break;
        if (k > 16 && pk < 1e-17 && d.pmf_[k - 1] < 1e-17) break;
    }
    d.finalize();
    d.residual_mass_ = std::max(0.0, 1.0 - d.cdf_.back());
    d.second_moment_finite_ = summand.second_moment_finite();
    return d;
}

DegreeDistribution mixed_poisson(const MixingLaw& mix, double scale) {
    if (!(scale >= 0.0)) throw InvalidParameterError("mixed poisson scale must be >= 0");
    DegreeDistribution d;
    for (const auto& node : mix.nodes()) {
        accumulate_poisson(d.pmf_, node.weight, scale * node.value);
    }
    if (d.pmf_.empty()) d.pmf_ = {1.0};
    trim_tail(d.pmf_);
    d.finalize();
    d.residual_mass_ = std::max(0.0, 1.0 - d.cdf_.back());
    if (scale > 0.0 && !mix.mean_is_finite()) {
        d.mean_ = std::numeric_limits<double>::infinity();
    }
    d.second_moment_finite_ = scale == 0.0 || mix.second_moment_finite();
    return d;
}

std::int64_t sample_poisson(double mu, RandomStream& rng) {
    if (mu <= 0.0) return 0;
    // Inversion over a +-12 sigma band around the mode; unlike the pmf
    // materialization above this is not capped, so arbitrary means work.
    const double sd = std::sqrt(mu);
    std::int64_t lo = 0;
    if (mu > 400.0) lo = static_cast<std::int64_t>(mu - 12.0 * sd - 50.0);
    const std::int64_t hi = static_cast<std::int64_t>(mu + 12.0 * sd + 50.0);
    const std::int64_t mode = std::clamp(static_cast<std::int64_t>(mu), lo, hi);
    const double log_pm = -mu + static_cast<double>(mode) * std::log(mu) -
                          std::lgamma(static_cast<double>(mode) + 1.0);
    const double pm = std::exp(log_pm);

    std::vector<double> band(hi - lo + 1, 0.0);
    double p = pm;
    for (std::int64_t k = mode; k <= hi; ++k) {
        band[k - lo] = p;
        p *= mu / static_cast<double>(k + 1);
    }
    p = pm;
    for (std::int64_t k = mode; k > lo; --k) {
        p *= static_cast<double>(k) / mu;
        band[k - 1 - lo] = p;
    }

    double cum = 0.0;
    const double u = rng.next_double();
    for (std::size_t i = 0; i < band.size(); ++i) {
        cum += band[i];
        if (u < cum) return lo + static_cast<std::int64_t>(i);
    }
    return hi;
}

}  // namespace randgraph
