#include "randgraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "randgraph/config_model.hpp"
#include "randgraph/errors.hpp"

namespace randgraph::verify {

DegreeDistribution empirical_distribution(const SimpleGraph& g) {
    const auto n = g.vertex_count();
    if (n < 1) throw InvalidParameterError("empirical distribution needs n >= 1");
    std::int64_t max_degree = 0;
    for (std::int64_t v = 0; v < n; ++v) {
        max_degree = std::max(max_degree, g.degree(static_cast<VertexId>(v)));
    }
    std::vector<std::int64_t> counts(max_degree + 1, 0);
    for (std::int64_t v = 0; v < n; ++v) {
        ++counts[g.degree(static_cast<VertexId>(v))];
    }
    std::vector<double> pmf(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) {
        pmf[j] = static_cast<double>(counts[j]) / static_cast<double>(n);
    }
    return DegreeDistribution::from_pmf(std::move(pmf));
}

double tv_distance(const DegreeDistribution& p, const DegreeDistribution& q) {
    const std::int64_t len = std::max(p.materialized_size(), q.materialized_size());
    double sum = 0.0;
    for (std::int64_t k = 0; k < len; ++k) {
        sum += std::fabs(p.pmf_at(k) - q.pmf_at(k));
    }
    sum += p.mass_beyond(len - 1) + q.mass_beyond(len - 1);
    return 0.5 * sum;
}

double erasure_fraction(const GenerationReport& report) {
    if (report.n < 1) throw InvalidParameterError("erasure fraction needs n >= 1");
    return static_cast<double>(report.affected_vertices) / static_cast<double>(report.n);
}

SimpleProbability estimate_simple_probability(const DegreeDistribution& F, std::int64_t n,
                                              std::int64_t trials, RandomStream& rng) {
    if (trials < 1) throw InvalidParameterError("need at least one trial");
    std::int64_t simple = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto degrees = config_model::sample_degree_sequence(
            F, n, config_model::ParityPolicy::remove_stub, rng);
        if (is_simple(config_model::pair_stubs(degrees, rng))) ++simple;
    }
    SimpleProbability result;
    result.trials = trials;
    result.estimate = static_cast<double>(simple) / static_cast<double>(trials);
    result.standard_error =
        std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(trials));
    return result;
}

double tail_exponent(const DegreeDistribution& p, std::int64_t k_lo, std::int64_t k_hi) {
    if (k_lo < 1 || k_lo >= k_hi) {
        throw InvalidParameterError("tail exponent needs 1 <= k_lo < k_hi");
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    const double m = static_cast<double>(k_hi - k_lo + 1);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const double ccdf = p.ccdf_at(k);
        if (!(ccdf > 0.0)) {
            throw InvalidParameterError("ccdf vanishes inside the fit range");
        }
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(ccdf);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

void write_report(std::ostream& os, const ReportFields& fields) {
    char buf[64];
    auto real = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    if (fields.model) os << "model=" << *fields.model << "\n";
    if (fields.n) os << "n=" << *fields.n << "\n";
    if (fields.seed) os << "seed=" << *fields.seed << "\n";
    if (fields.tv) os << "tv=" << real(*fields.tv) << "\n";
    if (fields.erasure_fraction) {
        os << "erasure_fraction=" << real(*fields.erasure_fraction) << "\n";
    }
    if (fields.attempts) os << "attempts=" << *fields.attempts << "\n";
    if (fields.tail_slope) os << "tail_slope=" << real(*fields.tail_slope) << "\n";
}

}  // namespace randgraph::verify
