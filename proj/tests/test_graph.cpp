#include <doctest.h>

#include <sstream>

#include "qcut/graph.hpp"
#include "qcut/instance_gen.hpp"
#include "test_support.hpp"

using namespace qcut;
using test::parse_graph;
using test::render_graph;

TEST_CASE("triangle loads with file-order neighbors") {
    const Graph g = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(degree_sequence(g) == DegreeSequence{2, 2, 2});
    // file order: edge "0 1" fills 0's first slot, "2 0" the second
    CHECK(g.neighbor_at(0, 1) == 1);
    CHECK(g.neighbor_at(0, 2) == 2);
    CHECK(g.neighbor_at(0, 3) == std::nullopt);
}

TEST_CASE("disconnected pair of edges") {
    const Graph g = parse_graph("4 2\n0 1\n2 3\n");
    CHECK(g.edge_count() == 2);
    CHECK(degree_sequence(g) == DegreeSequence{1, 1, 1, 1});
}

TEST_CASE("parallel edges occupy separate slots") {
    const Graph g = parse_graph("2 2\n0 1\n0 1\n");
    CHECK(degree_sequence(g) == DegreeSequence{2, 2});
    CHECK(g.neighbor_at(0, 2) == 1);
    // the two copies twin slot-wise: (0, 1) <-> (1, 1) and (0, 2) <-> (1, 2)
    CHECK(g.slot_twin({0, 1}) == SlotRef{1, 1});
    CHECK(g.slot_twin({0, 2}) == SlotRef{1, 2});
}

TEST_CASE("degree sequence of a star") {
    CHECK(degree_sequence(test::star_graph(4)) == DegreeSequence{4, 1, 1, 1, 1});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 0\n"), doctest::Contains("<test>:2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 7\n"), doctest::Contains("out of range"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph("nonsense\n"), doctest::Contains("header"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n"), doctest::Contains("promises 2"),
                         std::runtime_error);
    CHECK_THROWS(parse_graph(""));
}

TEST_CASE("comments and blank lines are skipped") {
    const Graph g = parse_graph("# corpus entry\n3 2\n\n# bridge\n0 1\n1 2\n");
    CHECK(g.edge_count() == 2);
}

TEST_CASE("round-trip preserves adjacency order exactly") {
    const std::string text = "5 6\n3 4\n0 1\n1 2\n0 2\n0 3\n3 4\n";
    const Graph g = parse_graph(text);
    CHECK(render_graph(g) == text);
    const Graph again = parse_graph(render_graph(g));
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (std::uint32_t j = 1; j <= g.degree(u); ++j)
            CHECK(again.neighbor_at(u, j) == g.neighbor_at(u, j));
}

TEST_CASE("slot twins form an involution and degrees sum to 2m") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = seed % 2 == 0 ? gen_random_gnm(11, 20, seed)
                                      : gen_random_multigraph(9, 25, seed);
        std::uint64_t degree_sum = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            degree_sum += g.degree(u);
            for (std::uint32_t j = 1; j <= g.degree(u); ++j) {
                const SlotRef twin = g.slot_twin({u, j});
                CHECK(g.slot_twin(twin) == SlotRef{u, j});
                CHECK(g.neighbor_at(twin.v, twin.slot) == u); // twin stores us back
            }
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("adjacency symmetry: u appears in v's list as often as v in u's") {
    const Graph g = gen_random_multigraph(7, 30, 42);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto count = [&](Vertex a, Vertex b) {
                std::size_t c = 0;
                for (Vertex w : g.neighbors(a)) c += w == b;
                return c;
            };
            CHECK(count(u, v) == count(v, u));
        }
    }
}

TEST_CASE("from_edges rejects self-loops and bad endpoints") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}
