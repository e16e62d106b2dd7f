#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace randgraph {

// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic random stream.
///
/// The engine is pinned to std::mt19937_64, whose output sequence is fully
/// specified by the C++ standard, so a given seed reproduces the same draws
/// on every platform. Every variate in the library is produced through the
/// primitives below; the std::<distribution> adapters are never used because
/// their output is implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), unbiased (rejection sampling).
    std::uint64_t next_below(std::uint64_t bound) {
        for (;;) {
            const std::uint64_t x = engine_();
            const std::uint64_t r = x % bound;
            if (x - r <= ~std::uint64_t{0} - (bound - 1)) return r;
        }
    }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

// Per-purpose constants XORed into the global seed to derive submodule
// streams: stream(purpose) = RandomStream(seed ^ purpose).
namespace streams {
inline constexpr std::uint64_t kDegrees = 0x6465677265657321ull;
inline constexpr std::uint64_t kPairing = 0x70616972696e6721ull;
inline constexpr std::uint64_t kWeights = 0x7765696768747321ull;
inline constexpr std::uint64_t kEdges   = 0x6564676573212121ull;
inline constexpr std::uint64_t kTargets = 0x7461726765747321ull;
inline constexpr std::uint64_t kTrials  = 0x747269616c732121ull;
inline constexpr std::uint64_t kBench   = 0x62656e6368212121ull;
}  // namespace streams

inline RandomStream substream(std::uint64_t seed, std::uint64_t purpose) {
    return RandomStream(seed ^ purpose);
}

/// Stream for one row of a partitioned parallel sweep. Independent of the
/// thread count, so parallel output depends only on (seed, row).
inline RandomStream row_stream(std::uint64_t seed, std::uint64_t row) {
    return RandomStream(splitmix64(splitmix64(seed ^ streams::kEdges) + row));
}

}  // namespace randgraph
