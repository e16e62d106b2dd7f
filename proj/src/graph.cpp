#include "randgraph/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "randgraph/errors.hpp"

namespace randgraph {

Multigraph::Multigraph(std::int64_t n, std::vector<EdgePair> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.second >= static_cast<VertexId>(n_)) {
            throw InvalidInputError("edge endpoint out of range");
        }
        if (e.first == e.second) ++loop_count_;
    }
    std::sort(edges_.begin(), edges_.end());
    std::int64_t distinct_non_loop = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].first == edges_[i].second) continue;
        if (i == 0 || edges_[i] != edges_[i - 1]) ++distinct_non_loop;
    }
    parallel_excess_ =
        static_cast<std::int64_t>(edges_.size()) - loop_count_ - distinct_non_loop;
}

std::vector<std::int64_t> Multigraph::degrees() const {
    std::vector<std::int64_t> deg(n_, 0);
    for (const auto& e : edges_) {
        deg[e.first] += 1;
        deg[e.second] += 1;  // a loop hits both branches, contributing 2
    }
    return deg;
}

bool is_simple(const Multigraph& mg) {
    return mg.loop_count() == 0 && mg.parallel_excess() == 0;
}

SimpleGraph SimpleGraph::empty(std::int64_t n) {
    SimpleGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    return g;
}

SimpleGraph SimpleGraph::from_pairs(std::int64_t n, std::vector<EdgePair> pairs) {
    for (auto& e : pairs) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.second >= static_cast<VertexId>(n)) {
            throw InvalidInputError("edge endpoint out of range");
        }
        if (e.first == e.second) throw InvalidInputError("loop in simple graph input");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    SimpleGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : pairs) {
        ++g.offsets_[e.first + 1];
        ++g.offsets_[e.second + 1];
    }
    for (std::int64_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(pairs.size() * 2);

    // Pairs are sorted by (u, v); filling both directions in one sweep
    // leaves every neighbor list sorted.
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : pairs) {
        g.adj_[cursor[e.first]++] = e.second;
        g.adj_[cursor[e.second]++] = e.first;
    }
    return g;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::pair<SimpleGraph, GenerationReport> erase(const Multigraph& mg) {
    GenerationReport report;
    report.n = mg.vertex_count();
    report.erased_stub_counts.assign(mg.vertex_count(), 0);

    std::vector<EdgePair> kept;
    kept.reserve(mg.edges().size());
    const auto& edges = mg.edges();  // sorted
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && edges[j] == edges[i]) ++j;
        const auto [u, v] = edges[i];
        const auto copies = static_cast<std::int32_t>(j - i);
        if (u == v) {
            report.erased_stub_counts[u] += 2 * copies;
        } else {
            kept.push_back(edges[i]);
            if (copies > 1) {
                report.erased_stub_counts[u] += copies - 1;
                report.erased_stub_counts[v] += copies - 1;
            }
        }
        i = j;
    }
    for (const auto e : report.erased_stub_counts) {
        if (e > 0) ++report.affected_vertices;
    }
    return {SimpleGraph::from_pairs(mg.vertex_count(), std::move(kept)), std::move(report)};
}

std::map<std::int64_t, std::int64_t> degree_counts(const SimpleGraph& g) {
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t v = 0; v < g.vertex_count(); ++v) {
        ++counts[g.degree(static_cast<VertexId>(v))];
    }
    return counts;
}

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
    os << "# n=" << g.vertex_count() << "\n";
    for (std::int64_t u = 0; u < g.vertex_count(); ++u) {
        for (const VertexId v : g.neighbors(static_cast<VertexId>(u))) {
            if (v > u) os << u << " " << v << "\n";
        }
    }
}

SimpleGraph read_edge_list(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# n=", 0) != 0) {
        throw InvalidInputError("edge list must start with `# n=<n>`");
    }
    const std::int64_t n = std::stoll(header.substr(4));
    std::vector<EdgePair> pairs;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint32_t u = 0;
        std::uint32_t v = 0;
        if (!(ls >> u >> v)) throw InvalidInputError("bad edge line: " + line);
        pairs.emplace_back(u, v);
    }
    return SimpleGraph::from_pairs(n, std::move(pairs));
}

}  // namespace randgraph
