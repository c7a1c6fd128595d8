#include "qcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcut {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    g.edge_list_ = edges;

    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

    const std::uint64_t slots = 2 * edges.size();
    g.adjacency_.resize(slots);
    g.twin_.resize(slots);

    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        const std::uint64_t su = fill[u]++;
        const std::uint64_t sv = fill[v]++;
        g.adjacency_[su] = v;
        g.adjacency_[sv] = u;
        g.twin_[su] = sv;
        g.twin_[sv] = su;
    }
    return g;
}

SlotRef Graph::slot_twin(SlotRef s) const {
    const std::uint64_t t = twin_[global_slot(s.v, s.slot)];
    const Vertex v = adjacency_[twin_[t]]; // owner of slot t = neighbor stored at its twin
    return {v, static_cast<std::uint32_t>(t - offsets_[v] + 1)};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    // scan the shorter list
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) d[u] = g.degree(u);
    return d;
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

} // namespace

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        if (!have_header) {
            long long ln, lm;
            if (!(ss >> ln >> lm) || ln < 0 || lm < 0)
                parse_fail(name, lineno, "expected header \"n m\"");
            n = static_cast<std::size_t>(ln);
            m = static_cast<std::size_t>(lm);
            edges.reserve(m);
            have_header = true;
            continue;
        }
        long long u, v;
        if (!(ss >> u >> v)) parse_fail(name, lineno, "expected edge \"u v\"");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            parse_fail(name, lineno, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v) parse_fail(name, lineno, "self-loop rejected");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!have_header) parse_fail(name, lineno, "missing header \"n m\"");
    if (edges.size() != m)
        parse_fail(name, lineno,
                   "header promises " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_edge_list(in, path.string());
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace qcut
