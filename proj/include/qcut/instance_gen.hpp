#pragma once

#include <cstdint>
#include <vector>

#include "qcut/graph.hpp"

namespace qcut {

// Two dense sides joined by a known bridge set. Sides are cliques when
// side_edges is 0, otherwise uniform random with that many edges. The
// planted cut size is bridge_pairs * bridge_multiplicity; it is the actual
// minimum cut only when the sides are internally better connected, which
// callers check post-hoc on small instances.
struct PlantedCutParams {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::uint64_t side_edges1 = 0; // 0 = clique
    std::uint64_t side_edges2 = 0; // 0 = clique
    std::uint64_t bridge_pairs = 0;
    std::uint32_t bridge_multiplicity = 1;
    std::uint64_t seed = 0;

    std::uint64_t planted_cut() const {
        return bridge_pairs * bridge_multiplicity;
    }
};

Graph gen_planted(const PlantedCutParams& params);

// Parameters of the lower-bound construction G(x,y): four blocks of size s
// plus a core C, where s = t + ceil(sqrt(t^2 + (m - n t)/2)) and the
// intersection bits of x and y decide which edges cross the planted cut.
// When x and y are left empty they are derived from the seed with
// intersection size exactly t/2.
struct HardInstanceParams {
    std::size_t n = 0;
    std::uint64_t m = 0; // requested; the realized count is reported back
    std::uint64_t t = 0; // planted cut size, even
    std::uint64_t seed = 0;
    std::vector<std::uint8_t> x; // length s^2 when given
    std::vector<std::uint8_t> y;
};

struct HardInstance {
    Graph graph;
    std::vector<std::uint8_t> x, y;
    std::size_t s = 0;
    std::uint64_t realized_m = 0;
};

// Vertex layout: S_A = [0,s), T_A = [s,2s), S_B = [2s,3s), T_B = [3s,4s),
// C = [4s,n). Core vertex k attaches to S_A indices {(2tk + l) mod s}
// for l in [0, 2t), which balances S_A degrees and never depends on (x, y).
HardInstance gen_hard_instance(const HardInstanceParams& params);

Graph gen_random_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);
Graph gen_random_multigraph(std::size_t n, std::uint64_t m, std::uint64_t seed);

} // namespace qcut
