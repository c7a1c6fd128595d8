#pragma once

#include <cstdint>
#include <vector>

#include "qcut/graph.hpp"

namespace qcut {

// A global cut: its size (counting parallel edges) and one side of the
// bipartition.
struct CutResult {
    std::uint64_t size = 0;
    std::vector<Vertex> partition;
};

struct RWayCutResult {
    std::uint32_t r = 0;
    std::uint64_t size = 0;
    std::vector<std::vector<Vertex>> parts;
};

// Deterministic global minimum cut via maximum-adjacency (Stoer–Wagner)
// ordering; parallel edges are folded into integer weights. O(n^3).
// Disconnected input yields size 0 with one component as the listed side.
// Requires n >= 2.
CutResult min_cut_exact(const Graph& g);

// Exact minimum over all proper bipartitions, enumerated with a Gray-code
// sweep. Independent of min_cut_exact; intended as a test oracle. Simple
// graphs up to n = 33, multigraphs up to n = 20.
CutResult min_cut_brute(const Graph& g);

struct BruteCutStats {
    std::uint64_t size = 0;
    std::uint64_t optimal_count = 0; // bipartitions achieving the minimum
    std::vector<Vertex> partition;
};

// Size, multiplicity and a witness partition from one enumeration sweep;
// optimal_count == 1 certifies a unique minimum cut.
BruteCutStats min_cut_brute_stats(const Graph& g);

// Number of proper bipartitions achieving the brute-force minimum (1 means
// the minimum cut is unique). Same limits as min_cut_brute.
std::uint64_t count_min_cuts(const Graph& g);

// Number of bipartition cuts of size at most j * |Cut(g)|. Requires a
// connected graph with n <= 20.
std::uint64_t count_cuts_below(const Graph& g, double j);

// Exact minimum r-way cut by enumerating all partitions of V into r
// nonempty parts (restricted-growth strings). Requires 2 <= r <= n <= 12.
RWayCutResult min_rcut_brute(const Graph& g, std::uint32_t r);

// Crossing-edge count of an explicit partition; shared by tests to confirm
// reported sizes.
std::uint64_t crossing_edges(const Graph& g, const std::vector<Vertex>& side);

} // namespace qcut
