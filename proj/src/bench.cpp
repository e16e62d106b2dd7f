#include "randgraph/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "randgraph/config_model.hpp"
#include "randgraph/dgrd.hpp"
#include "randgraph/errors.hpp"
#include "randgraph/grg.hpp"

namespace randgraph::bench {

namespace {

// Per-model benchmark distributions. The repeated model needs a sparse law
// so the geometric number of retries stays small; the others use the
// heavier Poisson(5).
std::int64_t generate_edges(const std::string& model, std::int64_t n, RandomStream& rng) {
    using config_model::ParityPolicy;
    if (model == "erased-config") {
        const auto F = DegreeDistribution::poisson(5.0);
        return config_model::erased(F, n, ParityPolicy::remove_stub, rng).first.edge_count();
    }
    if (model == "repeated-config") {
        const auto F = DegreeDistribution::poisson(0.5);
        return config_model::repeated(F, n, ParityPolicy::remove_stub, {}, rng)
            .first.edge_count();
    }
    if (model == "dgrd") {
        const auto G = DegreeDistribution::poisson(2.5);
        return dgrd::generate(G, n, rng).edge_count();
    }
    if (model == "grg") {
        const auto law = MixingLaw::point_mass(2.0);
        const auto w = grg::sample_weights(law, n, 1.0, rng);
        return grg::grg_exact(w, rng).edge_count();
    }
    if (model == "grg-fast") {
        const auto law = MixingLaw::point_mass(2.0);
        const auto w = grg::sample_weights(law, n, 1.0, rng);
        return grg::grg_fast(w, rng).edge_count();
    }
    throw UsageError("unknown bench model `" + model + "`");
}

}  // namespace

Row run_once(const std::string& model, std::int64_t n, std::uint64_t seed, int reps) {
    if (reps < 1) reps = 1;
    Row row;
    row.model = model;
    row.n = n;
    // best-of-reps: insensitive to scheduler noise and, for the repeated
    // model, to the geometric retry count
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
        RandomStream rng = substream(seed + static_cast<std::uint64_t>(r), streams::kBench);
        const auto start = std::chrono::steady_clock::now();
        row.edges = generate_edges(model, n, rng);
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    row.seconds = best;
    return row;
}

std::vector<std::int64_t> default_grid(const std::string& model) {
    if (model == "grg") return {5000, 10000, 20000};
    return {250000, 500000, 1000000};
}

std::vector<std::string> known_models() {
    return {"erased-config", "repeated-config", "dgrd", "grg", "grg-fast"};
}

}  // namespace randgraph::bench
