#pragma once

#include <cstdint>
#include <vector>

#include "randgraph/errors.hpp"
#include "randgraph/rng.hpp"

namespace randgraph {

/// Walker/Vose alias table for O(1) draws from a fixed weight vector.
class AliasTable {
public:
    explicit AliasTable(const std::vector<double>& weights) {
        const std::size_t n = weights.size();
        if (n == 0) throw InvalidInputError("alias table needs at least one weight");
        double total = 0.0;
        for (const double w : weights) {
            if (w < 0.0) throw InvalidInputError("alias weights must be >= 0");
            total += w;
        }
        if (!(total > 0.0)) throw InvalidInputError("alias weights must not all be zero");

        prob_.resize(n);
        alias_.resize(n);
        std::vector<double> scaled(n);
        std::vector<std::uint32_t> small;
        std::vector<std::uint32_t> large;
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = weights[i] / total * static_cast<double>(n);
            (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
        }
        while (!small.empty() && !large.empty()) {
            const auto s = small.back();
            const auto l = large.back();
            small.pop_back();
            large.pop_back();
            prob_[s] = scaled[s];
            alias_[s] = l;
            scaled[l] -= 1.0 - scaled[s];
            (scaled[l] < 1.0 ? small : large).push_back(l);
        }
        for (const auto i : small) prob_[i] = 1.0;
        for (const auto i : large) prob_[i] = 1.0;
    }

    std::uint32_t sample(RandomStream& rng) const {
        const auto i = static_cast<std::uint32_t>(rng.next_below(prob_.size()));
        return rng.next_double() < prob_[i] ? i : alias_[i];
    }

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

}  // namespace randgraph
