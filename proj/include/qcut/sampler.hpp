#pragma once

#include <cstdint>
#include <vector>

#include "qcut/graph.hpp"
#include "qcut/oracle.hpp"
#include "qcut/rng.hpp"

namespace qcut {

// Explicit edge multiset on the hidden graph's vertex set, produced by
// sample(). Every entry is a real physical edge of G; parallel edges of G
// are independently present.
struct SampledSubgraph {
    std::size_t n = 0;
    std::vector<Edge> edges;
};

// Per-slot selection probability q with 1 - (1-q)^2 = p, so an edge is kept
// with probability p when each of its two twin slots fires independently
// with probability q. Throws std::invalid_argument for p outside (0, 1].
double slot_probability(double p);

// Draws a subgraph H of the oracle's hidden graph in which each physical
// edge appears independently with probability p, using only Neighbor
// queries (one per selected slot; none for unselected slots). D is the
// caller's degree sequence; a selected slot answering "absent" means D does
// not match the hidden graph and raises an error.
SampledSubgraph sample(Oracle& oracle, const DegreeSequence& degrees, double p, RngStream rng);

std::size_t component_count(const SampledSubgraph& h);

// True iff one component spans all n vertices. Pure scan of H's explicit
// edges; no oracle queries.
bool is_connected(const SampledSubgraph& h);

Graph to_graph(const SampledSubgraph& h);

} // namespace qcut
