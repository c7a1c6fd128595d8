#include "qcut/sampler.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace qcut {

double slot_probability(double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("sampling probability must lie in (0, 1], got " +
                                    std::to_string(p));
    return 1.0 - std::sqrt(1.0 - p);
}

SampledSubgraph sample(Oracle& oracle, const DegreeSequence& degrees, double p, RngStream rng) {
    const std::size_t n = oracle.vertex_count();
    if (degrees.size() != n)
        throw std::invalid_argument("degree sequence length does not match the graph");
    const double q = slot_probability(p);

    SampledSubgraph h;
    h.n = n;

    // Slot selection is decided by geometric skipping, so unselected slots
    // cost neither time nor queries; the walk is statistically identical to
    // an independent Bernoulli(q) per slot. When both twin slots of one
    // physical edge fire, edge_id de-duplicates: the edge enters once.
    std::unordered_set<std::uint64_t> taken;
    for (Vertex u = 0; u < n; ++u) {
        const std::uint64_t d = degrees[u];
        std::uint64_t pos = 0;
        while (pos < d) {
            pos += geometric_gap(rng, q, d - pos);
            if (pos >= d) break;
            const auto j = static_cast<std::uint32_t>(pos + 1); // 1-based slot
            const auto neighbor = oracle.q_neighbor(u, j);
            if (!neighbor)
                throw std::runtime_error(
                    "degree sequence inconsistent with the oracle: vertex " + std::to_string(u) +
                    " has no slot " + std::to_string(j));
            if (taken.insert(oracle.edge_id(u, j)).second)
                h.edges.emplace_back(u, *neighbor);
            ++pos;
        }
    }
    return h;
}

namespace {

// Weighted quick-union with path halving.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
    }

    std::size_t components() const { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

} // namespace

std::size_t component_count(const SampledSubgraph& h) {
    DisjointSets ds(h.n);
    for (const auto& [u, v] : h.edges) ds.unite(u, v);
    return ds.components();
}

bool is_connected(const SampledSubgraph& h) {
    return h.n <= 1 || component_count(h) == 1;
}

Graph to_graph(const SampledSubgraph& h) { return Graph::from_edges(h.n, h.edges); }

} // namespace qcut
