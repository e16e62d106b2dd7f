#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace randgraph::bench {

struct Row {
    std::string model;
    std::int64_t n = 0;
    double seconds = 0.0;
    std::int64_t edges = 0;
};

/// Times one generation run (median wall-clock over `reps`). Models:
/// erased-config, repeated-config, dgrd (Poisson degrees), grg, grg-fast
/// (each with its default benchmark distribution).
Row run_once(const std::string& model, std::int64_t n, std::uint64_t seed, int reps);

/// Default grid per model, geometric in n.
std::vector<std::int64_t> default_grid(const std::string& model);

std::vector<std::string> known_models();

}  // namespace randgraph::bench
