#include "qcut/oracle.hpp"

#include <stdexcept>

namespace qcut {

nlohmann::json to_json(const QueryCounts& c) {
    return {{"degree", c.degree},
            {"neighbor", c.neighbor},
            {"adjacency", c.adjacency},
            {"random_edge", c.random_edge}};
}

void Oracle::require_vertex(Vertex u) const {
    // Out-of-range ids are harness bugs, not algorithmic outcomes.
    if (u >= g_.vertex_count())
        throw std::logic_error("oracle query with out-of-range vertex " + std::to_string(u));
}

Edge Oracle::q_random_edge() {
    const std::uint64_t slots = g_.slot_count();
    if (slots == 0) throw std::runtime_error("random-edge query: graph has no edges");
    random_edge_.fetch_add(1, std::memory_order_relaxed);
    const std::uint64_t s = rng_.below(slots);
    const Vertex v = g_.slot_value(s);              // neighbor stored at s
    const Vertex u = g_.slot_value(g_.twin_of(s)); // owner of s
    return {u, v};
}

} // namespace qcut
