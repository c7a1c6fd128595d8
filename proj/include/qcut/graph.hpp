#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcut {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// One position in one vertex's neighbor list (slot index is 1-based, as in
// the query interface). Each physical edge owns exactly two twin slots.
struct SlotRef {
    Vertex v;
    std::uint32_t slot;

    bool operator==(const SlotRef&) const = default;
};

// Immutable undirected multigraph. Parallel edges appear as repeated
// adjacency entries, each with its own twin slot at the other endpoint;
// self-loops are rejected. Neighbor order is the order edges were given at
// construction and is frozen thereafter, so the j-th neighbor of a vertex
// is well defined and runs are replayable.
class Graph {
public:
    Graph() = default;

    // Builds from an explicit edge list on vertices 0..n-1. Throws
    // std::invalid_argument on self-loops or out-of-range endpoints.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_list_.size(); } // m, parallel counted

    std::uint32_t degree(Vertex u) const {
        return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
    }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }

    // j-th neighbor of u, 1-based; nullopt when j exceeds degree(u).
    std::optional<Vertex> neighbor_at(Vertex u, std::uint32_t j) const {
        if (j < 1 || j > degree(u)) return std::nullopt;
        return adjacency_[offsets_[u] + j - 1];
    }

    // Global slot index in [0, 2m) of (u, j); j must be within degree.
    std::uint64_t global_slot(Vertex u, std::uint32_t j) const {
        return offsets_[u] + j - 1;
    }

    std::uint64_t twin_of(std::uint64_t gslot) const { return twin_[gslot]; }

    // Neighbor stored at a global slot. The owner of slot s is
    // slot_value(twin_of(s)).
    Vertex slot_value(std::uint64_t gslot) const { return adjacency_[gslot]; }

    // The matching slot at the other endpoint of the same physical edge.
    SlotRef slot_twin(SlotRef s) const;

    std::uint64_t slot_count() const { return adjacency_.size(); } // 2m

    // Edges in construction order; this is what save/round-trip preserve.
    const std::vector<Edge>& edges() const { return edge_list_; }

    bool has_edge(Vertex u, Vertex v) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> offsets_;  // n+1
    std::vector<Vertex> adjacency_;       // 2m, file order per vertex
    std::vector<std::uint64_t> twin_;     // involution over global slots
    std::vector<Edge> edge_list_;         // m, construction order
};

using DegreeSequence = std::vector<std::uint32_t>;

DegreeSequence degree_sequence(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v" (0-indexed);
// lines starting with '#' are ignored; duplicate "u v" lines create
// parallel edges. Parse errors report the offending line number.
Graph read_edge_list(std::istream& in, const std::string& name = "<stream>");
void write_edge_list(const Graph& g, std::ostream& out);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);

} // namespace qcut
