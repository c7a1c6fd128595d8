#include "qcut/instance_gen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "qcut/rng.hpp"

namespace qcut {

namespace {

std::uint64_t pairs_of(std::size_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Robert Floyd's uniform m-subset of [0, N); deterministic insertion order.
std::vector<std::uint64_t> floyd_sample(RngStream& rng, std::uint64_t universe,
                                        std::uint64_t count) {
    std::unordered_set<std::uint64_t> chosen;
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t j = universe - count; j < universe; ++j) {
        std::uint64_t r = rng.below(j + 1);
        if (!chosen.insert(r).second) {
            chosen.insert(j);
            r = j;
        }
        out.push_back(r);
    }
    return out;
}

// index k in [0, C(n,2)) -> pair (i, j) with i < j and k = j(j-1)/2 + i
Edge decode_pair(std::uint64_t k) {
    auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
    while (j * (j - 1) / 2 > k) --j;
    while ((j + 1) * j / 2 <= k) ++j;
    const std::uint64_t i = k - j * (j - 1) / 2;
    return {static_cast<Vertex>(i), static_cast<Vertex>(j)};
}

void append_side_edges(std::vector<Edge>& edges, std::size_t side_n, std::uint64_t side_edges,
                       Vertex base, RngStream& rng) {
    if (side_n < 2) {
        if (side_edges > 0)
            throw std::invalid_argument("side with fewer than 2 vertices cannot carry edges");
        return;
    }
    const std::uint64_t all = pairs_of(side_n);
    if (side_edges == 0) { // clique
        for (Vertex i = 0; i + 1 < side_n; ++i)
            for (Vertex j = i + 1; j < side_n; ++j)
                edges.emplace_back(base + i, base + j);
        return;
    }
    if (side_edges > all)
        throw std::invalid_argument("side edge count exceeds C(n, 2)");
    for (std::uint64_t k : floyd_sample(rng, all, side_edges)) {
        auto [i, j] = decode_pair(k);
        edges.emplace_back(base + i, base + j);
    }
}

} // namespace

Graph gen_planted(const PlantedCutParams& params) {
    if (params.n1 == 0 || params.n2 == 0)
        throw std::invalid_argument("both sides must be nonempty");
    if (params.bridge_pairs > static_cast<std::uint64_t>(params.n1) * params.n2)
        throw std::invalid_argument("more bridge pairs than cross pairs available");

    RngStream rng(params.seed);
    RngStream side1_rng = rng.derive(1);
    RngStream side2_rng = rng.derive(2);
    RngStream bridge_rng = rng.derive(3);

    std::vector<Edge> edges;
    append_side_edges(edges, params.n1, params.side_edges1, 0, side1_rng);
    append_side_edges(edges, params.n2, params.side_edges2, static_cast<Vertex>(params.n1),
                      side2_rng);

    const std::uint64_t cross = static_cast<std::uint64_t>(params.n1) * params.n2;
    for (std::uint64_t k : floyd_sample(bridge_rng, cross, params.bridge_pairs)) {
        const auto a = static_cast<Vertex>(k % params.n1);
        const auto b = static_cast<Vertex>(params.n1 + k / params.n1);
        for (std::uint32_t c = 0; c < params.bridge_multiplicity; ++c) edges.emplace_back(a, b);
    }
    return Graph::from_edges(params.n1 + params.n2, edges);
}

HardInstance gen_hard_instance(const HardInstanceParams& params) {
    const std::size_t n = params.n;
    const std::uint64_t t = params.t;

    auto reject = [](const std::string& inequality) {
        throw std::invalid_argument("hard-instance parameters violate " + inequality);
    };

    if (t < 2 || t % 2 != 0) reject("t even and t >= 2");
    if (t > n - 1) reject("t <= n - 1");
    const double inner =
        static_cast<double>(t) * t +
        (static_cast<double>(params.m) - static_cast<double>(n) * t) / 2.0;
    if (inner < 0) reject("m >= n t - 2 t^2 (s must be real)");
    const auto s = static_cast<std::size_t>(
        t + static_cast<std::uint64_t>(std::ceil(std::sqrt(inner))));
    if (s < 2 * t) reject("2 t <= s");
    if (4 * s > n) reject("4 s <= n");

    const std::uint64_t bit_count = static_cast<std::uint64_t>(s) * s; // N = s^2

    std::vector<std::uint8_t> x = params.x, y = params.y;
    if (x.empty() && y.empty()) {
        // derive bitstrings with intersection exactly t/2
        x.assign(bit_count, 0);
        y.assign(bit_count, 0);
        RngStream rng = RngStream(params.seed).derive(7);
        for (std::uint64_t pos : floyd_sample(rng, bit_count, t / 2)) x[pos] = y[pos] = 1;
        for (std::uint64_t i = 0; i < bit_count; ++i) {
            if (x[i]) continue;
            switch (rng.below(3)) { // 00, 01, 10: never adds intersection
                case 1: x[i] = 1; break;
                case 2: y[i] = 1; break;
                default: break;
            }
        }
    }
    if (x.size() != bit_count || y.size() != bit_count)
        reject("|x| = |y| = s^2");
    std::uint64_t intersection = 0;
    for (std::uint64_t i = 0; i < bit_count; ++i) intersection += (x[i] & y[i]) != 0;
    if (intersection != t / 2) reject("sum x_i y_i = t / 2");

    // S_A = [0,s), T_A = [s,2s), S_B = [2s,3s), T_B = [3s,4s), C = [4s,n)
    std::vector<Edge> edges;
    const std::size_t core = n - 4 * s;
    edges.reserve(core * 2 * t + 2 * bit_count);

    // core attachments first, so core neighbors occupy the leading slots
    for (std::size_t k = 0; k < core; ++k) {
        const auto c = static_cast<Vertex>(4 * s + k);
        for (std::uint64_t l = 0; l < 2 * t; ++l)
            edges.emplace_back(c, static_cast<Vertex>((2 * t * k + l) % s));
    }

    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            const std::uint64_t bit = static_cast<std::uint64_t>(i) * s + j;
            const auto s_a = static_cast<Vertex>(i);
            const auto t_a = static_cast<Vertex>(s + j);
            const auto s_b = static_cast<Vertex>(2 * s + i);
            const auto t_b = static_cast<Vertex>(3 * s + j);
            if (x[bit] && y[bit]) {
                edges.emplace_back(s_a, t_b);
                edges.emplace_back(s_b, t_a);
            } else {
                edges.emplace_back(s_a, t_a);
                edges.emplace_back(s_b, t_b);
            }
        }
    }

    HardInstance out;
    out.graph = Graph::from_edges(n, edges);
    out.x = std::move(x);
    out.y = std::move(y);
    out.s = s;
    out.realized_m = edges.size();
    return out;
}

Graph gen_random_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (m > pairs_of(n))
        throw std::invalid_argument("simple graph cannot have more than C(n, 2) edges");
    RngStream rng = RngStream(seed).derive(11);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t k : floyd_sample(rng, pairs_of(n), m)) edges.push_back(decode_pair(k));
    return Graph::from_edges(n, edges);
}

Graph gen_random_multigraph(std::size_t n, std::uint64_t m, std::uint64_t seed) {
    if (n < 2 && m > 0)
        throw std::invalid_argument("need at least two vertices to place an edge");
    RngStream rng = RngStream(seed).derive(13);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t k = 0; k < m; ++k) {
        const auto u = static_cast<Vertex>(rng.below(n));
        auto v = static_cast<Vertex>(rng.below(n - 1));
        if (v >= u) ++v;
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

} // namespace qcut
