#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace randgraph {

using VertexId = std::uint32_t;
// Stored normalized: first <= second.
using EdgePair = std::pair<VertexId, VertexId>;

/// Raw pairing output; loops and parallel edges allowed.
class Multigraph {
public:
    Multigraph(std::int64_t n, std::vector<EdgePair> edges);

    std::int64_t vertex_count() const { return n_; }
    const std::vector<EdgePair>& edges() const { return edges_; }
    std::int64_t loop_count() const { return loop_count_; }
    /// Edges beyond the first copy of each non-loop pair.
    std::int64_t parallel_excess() const { return parallel_excess_; }
    /// Stub counts per vertex; a loop contributes 2 to its vertex.
    std::vector<std::int64_t> degrees() const;

private:
    std::int64_t n_;
    std::vector<EdgePair> edges_;  // sorted
    std::int64_t loop_count_ = 0;
    std::int64_t parallel_excess_ = 0;
};

bool is_simple(const Multigraph& mg);

/// Loop-free, duplicate-free undirected graph, adjacency in CSR form with
/// sorted neighbor lists. Immutable after construction.
class SimpleGraph {
public:
    static SimpleGraph empty(std::int64_t n);
    /// Builds from undirected pairs by sort + dedup; loops are rejected.
    static SimpleGraph from_pairs(std::int64_t n, std::vector<EdgePair> pairs);

    std::int64_t vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }
    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::int64_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

private:
    SimpleGraph() = default;
    std::int64_t n_ = 0;
    std::vector<std::int64_t> offsets_;
    std::vector<VertexId> adj_;
};

/// Per-run telemetry for the stub-pairing models.
struct GenerationReport {
    std::int64_t n = 0;
    std::vector<std::int32_t> erased_stub_counts;  // E_i
    std::int64_t affected_vertices = 0;            // #{i : E_i >= 1}
    std::int64_t attempts = 1;
    bool odd_sum_fixed = false;
    std::uint64_t seed = 0;
};

/// Removes loops and merges parallel edges. A loop charges 2 erased stubs
/// to its vertex; every copy beyond the first of a non-loop pair charges 1
/// erased stub to each endpoint.
std::pair<SimpleGraph, GenerationReport> erase(const Multigraph& mg);

std::map<std::int64_t, std::int64_t> degree_counts(const SimpleGraph& g);

/// Text format: first line `# n=<n>`, then one `u v` line per edge with
/// u < v, sorted lexicographically, LF endings, no trailing blank line.
void write_edge_list(std::ostream& os, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& is);

}  // namespace randgraph
