#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include <json.hpp>

#include "qcut/graph.hpp"
#include "qcut/rng.hpp"

namespace qcut {

// Snapshot of per-query-type tallies.
struct QueryCounts {
    std::uint64_t degree = 0;
    std::uint64_t neighbor = 0;
    std::uint64_t adjacency = 0;
    std::uint64_t random_edge = 0;

    std::uint64_t total() const { return degree + neighbor + adjacency + random_edge; }
    bool operator==(const QueryCounts&) const = default;
};

nlohmann::json to_json(const QueryCounts& c);

// Query facade over a hidden graph: Degree, Neighbor, Adjacency and
// Random-Edge, each with an exact counter. This is the only access path the
// estimation pipeline may use. Queries never mutate the graph; counters are
// atomic so concurrent workers may share one oracle.
class Oracle {
public:
    explicit Oracle(Graph g, std::uint64_t seed = 0) : g_(std::move(g)), rng_(seed) {}

    // The vertex set is public knowledge in this model; only E is hidden.
    std::size_t vertex_count() const { return g_.vertex_count(); }

    std::uint32_t q_degree(Vertex u) {
        require_vertex(u);
        degree_.fetch_add(1, std::memory_order_relaxed);
        return g_.degree(u);
    }

    // j-th neighbor of u (1-based); nullopt past the degree. Counted either way.
    std::optional<Vertex> q_neighbor(Vertex u, std::uint32_t j) {
        require_vertex(u);
        neighbor_.fetch_add(1, std::memory_order_relaxed);
        return g_.neighbor_at(u, j);
    }

    bool q_adjacency(Vertex u, Vertex v) {
        require_vertex(u);
        require_vertex(v);
        adjacency_.fetch_add(1, std::memory_order_relaxed);
        return g_.has_edge(u, v);
    }

    // Uniformly random physical edge (parallel copies each counted once).
    // Implemented as a uniform slot pick: vertex proportional to degree,
    // then a uniform slot, which weights each edge by its two slots.
    Edge q_random_edge();

    // Canonical identity of the physical edge behind slot (u, j). Structural
    // bookkeeping for the sampler's pair de-duplication, not a query type;
    // does not touch any counter.
    std::uint64_t edge_id(Vertex u, std::uint32_t j) const {
        const std::uint64_t s = g_.global_slot(u, j);
        return std::min(s, g_.twin_of(s));
    }

    QueryCounts counts() const {
        return {degree_.load(), neighbor_.load(), adjacency_.load(), random_edge_.load()};
    }

private:
    void require_vertex(Vertex u) const;

    Graph g_;
    std::atomic<std::uint64_t> degree_{0};
    std::atomic<std::uint64_t> neighbor_{0};
    std::atomic<std::uint64_t> adjacency_{0};
    std::atomic<std::uint64_t> random_edge_{0};
    RngStream rng_;
};

} // namespace qcut
