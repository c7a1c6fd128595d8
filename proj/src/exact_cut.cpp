#include "qcut/exact_cut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcut {

namespace {

std::vector<std::vector<Vertex>> components_of(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return out;
}

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

} // namespace

CutResult min_cut_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("min cut needs at least 2 vertices");

    auto comps = components_of(g);
    if (comps.size() > 1) {
        auto side = comps.front();
        std::sort(side.begin(), side.end());
        return {0, side};
    }

    // integer weight matrix; parallel edges fold into weights
    std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& [u, v] : g.edges()) {
        ++w[u][v];
        ++w[v][u];
    }

    std::vector<std::vector<Vertex>> members(n);
    for (Vertex v = 0; v < n; ++v) members[v] = {v};
    std::vector<bool> alive(n, true);

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<Vertex> best_side;

    std::vector<std::uint64_t> conn(n);
    std::vector<bool> added(n);

    for (std::size_t remaining = n; remaining > 1; --remaining) {
        std::fill(conn.begin(), conn.end(), 0);
        std::fill(added.begin(), added.end(), false);

        Vertex prev = kNone, last = kNone;
        std::uint64_t last_conn = 0;
        for (std::size_t step = 0; step < remaining; ++step) {
            // most strongly connected unadded vertex; smallest id on ties
            Vertex pick = kNone;
            for (Vertex v = 0; v < n; ++v) {
                if (!alive[v] || added[v]) continue;
                if (pick == kNone || conn[v] > conn[pick]) pick = v;
            }
            added[pick] = true;
            prev = last;
            last = pick;
            last_conn = conn[pick];
            for (Vertex v = 0; v < n; ++v)
                if (alive[v] && !added[v]) conn[v] += w[pick][v];
        }

        // cut of the phase separates `last`'s merged set from the rest
        if (last_conn < best) {
            best = last_conn;
            best_side = members[last];
        }

        // merge last into prev
        alive[last] = false;
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        members[last].clear();
        for (Vertex v = 0; v < n; ++v) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
    }

    std::sort(best_side.begin(), best_side.end());
    return {best, best_side};
}

namespace {

struct BruteScan {
    std::uint64_t min_size = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t optimal_count = 0;
    std::uint64_t best_mask = 0;          // over vertices 0..n-2
    std::vector<std::uint64_t> histogram; // empty unless requested
};

// Gray-code sweep over all 2^(n-1) - 1 proper bipartitions, vertex n-1
// pinned to the complement side so each cut is visited exactly once. The
// sweep flips one vertex per step, updating the crossing count
// incrementally: simple graphs via bitset rows and popcount, multigraphs
// via weighted rows.
BruteScan brute_scan(const Graph& g, bool with_histogram) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("min cut needs at least 2 vertices");

    bool simple = true;
    std::vector<std::vector<std::pair<Vertex, std::int64_t>>> rows(n);
    {
        std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
        for (const auto& [u, v] : g.edges()) {
            if (++w[u][v] > 1) simple = false;
            ++w[v][u];
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (w[u][v] > 0) rows[u].emplace_back(v, w[u][v]);
    }

    const std::size_t max_n = simple ? 33 : 20;
    if (n > max_n)
        throw std::invalid_argument("brute-force cut enumeration limited to n <= " +
                                    std::to_string(max_n) + " here, got n = " +
                                    std::to_string(n));
    if (with_histogram && n > 20)
        throw std::invalid_argument("cut histogram limited to n <= 20");

    BruteScan out;
    if (with_histogram) out.histogram.assign(g.edge_count() + 1, 0);

    const std::uint64_t total = 1ULL << (n - 1);
    std::uint64_t mask = 0;   // current side S
    std::int64_t cut = 0;     // crossing count of S

    auto record = [&](std::uint64_t size) {
        if (with_histogram) ++out.histogram[size];
        if (size < out.min_size) {
            out.min_size = size;
            out.optimal_count = 1;
            out.best_mask = mask;
        } else if (size == out.min_size) {
            ++out.optimal_count;
        }
    };

    if (simple) {
        std::vector<std::uint64_t> adj(n, 0);
        std::vector<std::int64_t> deg(n, 0);
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= 1ULL << v;
            adj[v] |= 1ULL << u;
            ++deg[u];
            ++deg[v];
        }
        for (std::uint64_t k = 1; k < total; ++k) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(k));
            const std::uint64_t bit = 1ULL << b;
            mask ^= bit;
            // edges from b into S are unchanged by b's own bit (no loops)
            const auto to_s = static_cast<std::int64_t>(std::popcount(adj[b] & mask));
            cut += (mask & bit) ? deg[b] - 2 * to_s : 2 * to_s - deg[b];
            record(static_cast<std::uint64_t>(cut));
        }
    } else {
        std::vector<std::int64_t> wdeg(n, 0);
        for (Vertex u = 0; u < n; ++u)
            for (const auto& [v, wt] : rows[u]) wdeg[u] += wt;
        for (std::uint64_t k = 1; k < total; ++k) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(k));
            const std::uint64_t bit = 1ULL << b;
            mask ^= bit;
            std::int64_t to_s = 0;
            for (const auto& [v, wt] : rows[b])
                if (mask & (1ULL << v)) to_s += wt;
            cut += (mask & bit) ? wdeg[b] - 2 * to_s : 2 * to_s - wdeg[b];
            record(static_cast<std::uint64_t>(cut));
        }
    }
    return out;
}

} // namespace

BruteCutStats min_cut_brute_stats(const Graph& g) {
    auto scan = brute_scan(g, false);
    BruteCutStats out;
    out.size = scan.min_size;
    out.optimal_count = scan.optimal_count;
    for (Vertex v = 0; v + 1 < g.vertex_count(); ++v)
        if (scan.best_mask & (1ULL << v)) out.partition.push_back(v);
    return out;
}

CutResult min_cut_brute(const Graph& g) {
    auto stats = min_cut_brute_stats(g);
    return {stats.size, std::move(stats.partition)};
}

std::uint64_t count_min_cuts(const Graph& g) { return brute_scan(g, false).optimal_count; }

std::uint64_t count_cuts_below(const Graph& g, double j) {
    if (j <= 0) throw std::invalid_argument("cut-size factor must be positive");
    if (components_of(g).size() != 1)
        throw std::invalid_argument("count_cuts_below requires a connected graph");
    auto scan = brute_scan(g, true);
    const double threshold = j * static_cast<double>(scan.min_size) + 1e-9;
    std::uint64_t count = 0;
    for (std::size_t size = 0; size < scan.histogram.size(); ++size)
        if (static_cast<double>(size) <= threshold) count += scan.histogram[size];
    return count;
}

std::uint64_t crossing_edges(const Graph& g, const std::vector<Vertex>& side) {
    std::vector<char> in_side(g.vertex_count(), 0);
    for (Vertex v : side) in_side[v] = 1;
    std::uint64_t crossing = 0;
    for (const auto& [u, v] : g.edges())
        if (in_side[u] != in_side[v]) ++crossing;
    return crossing;
}

RWayCutResult min_rcut_brute(const Graph& g, std::uint32_t r) {
    const std::size_t n = g.vertex_count();
    if (r < 2 || r > n) throw std::invalid_argument("part count must satisfy 2 <= r <= n");
    if (n > 12) throw std::invalid_argument("r-way enumeration limited to n <= 12");

    std::vector<std::uint32_t> assign(n, 0), best_assign;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

    const auto& edges = g.edges();
    auto crossing = [&] {
        std::uint64_t c = 0;
        for (const auto& [u, v] : edges) c += assign[u] != assign[v];
        return c;
    };

    // restricted growth strings: assign[0] = 0, assign[i] <= max(prefix)+1,
    // capped at r parts; every r-partition is visited exactly once
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
        if (n - i < r - used) return; // cannot fill the remaining parts
        if (i == n) {
            const std::uint64_t c = crossing();
            if (c < best) {
                best = c;
                best_assign = assign;
            }
            return;
        }
        const std::uint32_t limit = std::min(used, r - 1);
        for (std::uint32_t part = 0; part <= limit; ++part) {
            assign[i] = part;
            self(self, i + 1, std::max(used, part + 1));
        }
    };
    rec(rec, 0, 0);

    RWayCutResult out;
    out.r = r;
    out.size = best;
    out.parts.assign(r, {});
    for (Vertex v = 0; v < n; ++v) out.parts[best_assign[v]].push_back(v);
    return out;
}

} // namespace qcut
