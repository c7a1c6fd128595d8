// qcut: estimate global minimum cut sizes through local graph queries, plus
// exact solvers, instance generators and a benchmark sweep around them.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcut/estimator.hpp"
#include "qcut/exact_cut.hpp"
#include "qcut/graph.hpp"
#include "qcut/instance_gen.hpp"
#include "qcut/oracle.hpp"
#include "qcut/sampler.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2; // the estimator itself returned Fail

struct CommonFlags {
    double eps = 0.25;
    std::optional<std::uint64_t> seed;
    std::string mode = "scaled";
    double c_p = 0.05;
    double c_kappa = 0.25;
    double c_gamma = 4.0;
    std::string log_base = "e";
    std::string format; // per-command default when empty
    std::string out_path;
};

void add_estimator_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--eps", flags.eps, "accuracy parameter in (0,1)");
    cmd->add_option("--seed", flags.seed, "master RNG seed (default: from entropy)");
    cmd->add_option("--mode", flags.mode, "constant pack: paper or scaled")
        ->check(CLI::IsMember({"paper", "scaled"}));
    cmd->add_option("--c-p", flags.c_p, "scaled-mode numerator constant of p");
    cmd->add_option("--c-kappa", flags.c_kappa, "scaled-mode shrink constant kappa");
    cmd->add_option("--c-gamma", flags.c_gamma, "scaled-mode repetition constant Gamma");
    cmd->add_option("--log-base", flags.log_base, "log convention: e or 2")
        ->check(CLI::IsMember({"e", "2"}));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

qcut::EstimatorConfig make_config(const CommonFlags& flags, std::uint64_t seed) {
    qcut::EstimatorConfig cfg =
        flags.mode == "paper"
            ? qcut::EstimatorConfig::paper_faithful(flags.eps, seed)
            : qcut::EstimatorConfig::scaled(flags.eps, seed, flags.c_p, flags.c_kappa,
                                            flags.c_gamma);
    cfg.log_base = flags.log_base == "2" ? qcut::LogBase::log2 : qcut::LogBase::natural;
    return cfg;
}

// Reports go to stdout (or --out); everything else is a diagnostic.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
}

const char* kCsvHeader = "n,m,t_true,eps,seed,estimate,rel_err,degree_q,neighbor_q,ms\n";

// the estimate/rel_err cells stay empty on Fail and rel_err also without
// ground truth; a Disconnected outcome is the t = 0 answer
void append_csv_row(std::ostringstream& csv, std::size_t n, std::size_t m,
                    std::optional<std::uint64_t> t_true, double eps,
                    const qcut::EstimateReport& report) {
    csv << n << ',' << m << ',';
    if (t_true) csv << *t_true;
    csv << ',' << eps << ',' << report.seed << ',';
    std::optional<double> value;
    if (report.outcome == qcut::EstimateReport::Outcome::estimate)
        value = *report.value;
    else if (report.outcome == qcut::EstimateReport::Outcome::disconnected)
        value = 0.0;
    if (value) csv << *value;
    csv << ',';
    if (value && t_true) {
        const double t = static_cast<double>(*t_true);
        csv << (t == 0.0 ? (*value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                         : std::abs(*value - t) / t);
    }
    csv << ',' << report.queries.degree << ',' << report.queries.neighbor << ','
        << report.elapsed_ms << '\n';
}

int cmd_estimate(const std::string& path, const CommonFlags& flags, std::uint32_t r,
                 std::uint32_t retries) {
    const qcut::Graph g = qcut::load_graph(path);
    std::uint64_t seed = resolve_seed(flags.seed);

    qcut::EstimateReport report;
    for (std::uint32_t attempt = 0;; ++attempt) {
        qcut::Oracle oracle(g, seed);
        const auto cfg = make_config(flags, seed);
        report = r == 2 ? qcut::estimate_mincut(oracle, cfg) : qcut::estimate_rcut(oracle, r, cfg);
        if (report.outcome != qcut::EstimateReport::Outcome::fail || attempt >= retries) break;
        seed = qcut::RngStream(seed).derive(attempt + 1).seed();
        std::cerr << "estimate failed, retrying with seed " << seed << "\n";
    }

    if (flags.format == "csv") {
        std::ostringstream csv;
        csv << kCsvHeader;
        append_csv_row(csv, g.vertex_count(), g.edge_count(), std::nullopt, flags.eps, report);
        emit(csv.str(), flags.out_path);
    } else {
        emit(report.to_json().dump(2) + "\n", flags.out_path);
    }
    return report.outcome == qcut::EstimateReport::Outcome::fail ? kExitFail : kExitOk;
}

int cmd_exact(const std::string& path, bool with_partition, const std::string& out_path) {
    const qcut::Graph g = qcut::load_graph(path);
    const auto cut = qcut::min_cut_exact(g);
    json report = {{"mincut", cut.size}};
    if (with_partition) report["partition"] = cut.partition;
    emit(report.dump() + "\n", out_path);
    return kExitOk;
}

int cmd_rcut(const std::string& path, std::uint32_t r, const std::string& out_path) {
    const qcut::Graph g = qcut::load_graph(path);
    const auto cut = qcut::min_rcut_brute(g, r);
    json report = {{"r", cut.r}, {"rcut", cut.size}, {"parts", cut.parts}};
    emit(report.dump() + "\n", out_path);
    return kExitOk;
}

std::string render_edge_list(const qcut::Graph& g, const std::string& header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    qcut::write_edge_list(g, out);
    return out.str();
}

int cmd_sample(const std::string& path, double p, const CommonFlags& flags) {
    const qcut::Graph g = qcut::load_graph(path);
    const std::uint64_t seed = resolve_seed(flags.seed);
    qcut::Oracle oracle(g, seed);
    const auto degrees = qcut::degree_sequence(g);
    const auto h = qcut::sample(oracle, degrees, p, qcut::RngStream(seed));
    const json header = {{"p", p},
                         {"q", qcut::slot_probability(p)},
                         {"seed", seed},
                         {"neighbor_queries", oracle.counts().neighbor}};
    emit(render_edge_list(qcut::to_graph(h), header.dump()), flags.out_path);
    return kExitOk;
}

struct GenFlags {
    std::optional<std::uint64_t> seed;
    std::string out_path;
    // planted
    std::size_t n1 = 0, n2 = 0;
    std::uint64_t side_edges1 = 0, side_edges2 = 0;
    std::uint64_t bridges = 0;
    std::uint32_t bridge_mult = 1;
    // gnm / multi / hard
    std::size_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t t = 0;
};

int cmd_gen(const std::string& kind, const GenFlags& gf) {
    const std::uint64_t seed = resolve_seed(gf.seed);
    if (kind == "planted") {
        qcut::PlantedCutParams params{gf.n1, gf.n2,        gf.side_edges1, gf.side_edges2,
                                      gf.bridges, gf.bridge_mult, seed};
        const auto g = qcut::gen_planted(params);
        const json header = {{"kind", "planted"},
                             {"planted_cut", params.planted_cut()},
                             {"seed", seed}};
        emit(render_edge_list(g, header.dump()), gf.out_path);
        return kExitOk;
    }
    if (kind == "gnm" || kind == "multi") {
        const auto g = kind == "gnm" ? qcut::gen_random_gnm(gf.n, gf.m, seed)
                                     : qcut::gen_random_multigraph(gf.n, gf.m, seed);
        emit(render_edge_list(g, json({{"kind", kind}, {"seed", seed}}).dump()), gf.out_path);
        return kExitOk;
    }
    if (kind == "hard") {
        qcut::HardInstanceParams params;
        params.n = gf.n;
        params.m = gf.m;
        params.t = gf.t;
        params.seed = seed;
        const auto inst = qcut::gen_hard_instance(params);
        const json header = {{"kind", "hard"},
                             {"s", inst.s},
                             {"t", gf.t},
                             {"realized_m", inst.realized_m},
                             {"seed", seed}};
        emit(render_edge_list(inst.graph, header.dump()), gf.out_path);
        return kExitOk;
    }
    throw CLI::ValidationError("gen", "unknown instance kind: " + kind);
}

int cmd_bench(const std::string& dir, const CommonFlags& flags, std::uint32_t runs) {
    std::vector<fs::path> entries;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".el") entries.push_back(e.path());
    std::sort(entries.begin(), entries.end());

    const std::uint64_t master_seed = resolve_seed(flags.seed);
    std::ostringstream csv;
    csv << kCsvHeader;
    json rows = json::array();

    std::size_t entry_index = 0;
    for (const auto& path : entries) {
        fs::path truth_path = path;
        truth_path.replace_extension(".truth");
        std::ifstream truth_in(truth_path);
        std::uint64_t t_true = 0;
        if (!(truth_in >> t_true)) {
            std::cerr << "warning: skipping " << path.string() << " (no sidecar "
                      << truth_path.filename().string() << ")\n";
            ++entry_index;
            continue;
        }

        const qcut::Graph g = qcut::load_graph(path);
        for (std::uint32_t run = 0; run < runs; ++run) {
            const std::uint64_t seed =
                qcut::RngStream(master_seed).derive(entry_index).derive(run).seed();
            qcut::Oracle oracle(g, seed);
            const auto report = qcut::estimate_mincut(oracle, make_config(flags, seed));
            append_csv_row(csv, g.vertex_count(), g.edge_count(), t_true, flags.eps, report);
            if (flags.format == "json") {
                auto row = report.to_json();
                row["n"] = g.vertex_count();
                row["m"] = g.edge_count();
                row["t_true"] = t_true;
                rows.push_back(row);
            }
        }
        ++entry_index;
    }
    emit(flags.format == "json" ? rows.dump(2) + "\n" : csv.str(), flags.out_path);
    return kExitOk;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"Minimum cut estimation through local graph queries"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path;
    std::uint32_t r = 2;
    std::uint32_t retries = 0;

    auto* estimate = app.add_subcommand("estimate", "estimate the minimum cut of a graph file");
    estimate->add_option("path", path, "edge-list file")->required();
    add_estimator_flags(estimate, flags);
    estimate->add_option("--r", r, "estimate the minimum r-way cut instead (r >= 2)");
    estimate->add_option("--retries", retries, "rerun with fresh seeds on Fail");
    estimate->add_option("--format", flags.format, "report format: json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    estimate->add_option("--out", flags.out_path, "write the report here instead of stdout");

    bool with_partition = false;
    auto* exact = app.add_subcommand("exact", "exact minimum cut of a graph file");
    exact->add_option("path", path, "edge-list file")->required();
    exact->add_flag("--partition", with_partition, "include one side of the cut");
    exact->add_option("--out", flags.out_path, "write the report here instead of stdout");

    std::uint32_t rcut_r = 2;
    auto* rcut = app.add_subcommand("rcut", "exact minimum r-way cut (n <= 12)");
    rcut->add_option("path", path, "edge-list file")->required();
    rcut->add_option("--r", rcut_r, "number of parts")->required();
    rcut->add_option("--out", flags.out_path, "write the report here instead of stdout");

    double sample_p = 1.0;
    auto* sample_cmd = app.add_subcommand("sample", "draw an edge-sampled subgraph");
    sample_cmd->add_option("path", path, "edge-list file")->required();
    sample_cmd->add_option("--p", sample_p, "edge inclusion probability in (0,1]")->required();
    sample_cmd->add_option("--seed", flags.seed, "RNG seed (default: from entropy)");
    sample_cmd->add_option("--out", flags.out_path, "write the subgraph here instead of stdout");

    GenFlags gf;
    std::string gen_kind;
    auto* gen = app.add_subcommand("gen", "generate a test instance");
    gen->add_option("kind", gen_kind, "planted | gnm | multi | hard")->required();
    gen->add_option("--seed", gf.seed, "generator seed");
    gen->add_option("--out", gf.out_path, "write the edge list here instead of stdout");
    gen->add_option("--n1", gf.n1, "planted: left side size");
    gen->add_option("--n2", gf.n2, "planted: right side size");
    gen->add_option("--side-edges1", gf.side_edges1, "planted: left side edges (0 = clique)");
    gen->add_option("--side-edges2", gf.side_edges2, "planted: right side edges (0 = clique)");
    gen->add_option("--bridges", gf.bridges, "planted: distinct bridge pairs");
    gen->add_option("--bridge-mult", gf.bridge_mult, "planted: parallel copies per bridge");
    gen->add_option("--n", gf.n, "gnm/multi/hard: vertex count");
    gen->add_option("--m", gf.m, "gnm/multi/hard: edge count (hard: requested)");
    gen->add_option("--t", gf.t, "hard: planted cut size (even)");

    std::string bench_dir;
    std::uint32_t bench_runs = 1;
    auto* bench = app.add_subcommand("bench", "sweep a corpus directory, CSV per run");
    bench->add_option("dir", bench_dir, "directory of .el files with .truth sidecars")
        ->required();
    add_estimator_flags(bench, flags);
    bench->add_option("--runs", bench_runs, "seeded runs per corpus entry");
    bench->add_option("--format", flags.format, "report format: csv (default) or json")
        ->check(CLI::IsMember({"json", "csv"}));
    bench->add_option("--out", flags.out_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (estimate->parsed()) return cmd_estimate(path, flags, r, retries);
    if (exact->parsed()) return cmd_exact(path, with_partition, flags.out_path);
    if (rcut->parsed()) return cmd_rcut(path, rcut_r, flags.out_path);
    if (sample_cmd->parsed()) return cmd_sample(path, sample_p, flags);
    if (gen->parsed()) return cmd_gen(gen_kind, gf);
    if (bench->parsed()) return cmd_bench(bench_dir, flags, bench_runs);
    return kExitUsage;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
