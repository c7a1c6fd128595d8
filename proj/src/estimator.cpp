#include "qcut/estimator.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qcut/exact_cut.hpp"
#include "qcut/sampler.hpp"

namespace qcut {

EstimatorConfig EstimatorConfig::paper_faithful(double eps, std::uint64_t seed) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.seed = seed;
    cfg.mode = Mode::paper;
    cfg.validate();
    return cfg;
}

EstimatorConfig EstimatorConfig::scaled(double eps, std::uint64_t seed, double c_p,
                                        double c_kappa, double c_gamma) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.seed = seed;
    cfg.mode = Mode::scaled;
    cfg.c_p = c_p;
    cfg.c_kappa = c_kappa;
    cfg.c_gamma = c_gamma;
    cfg.validate();
    return cfg;
}

void EstimatorConfig::validate() const {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::invalid_argument("eps must lie in (0, 1)");
    if (!(c_p > 0.0) || !(c_kappa > 0.0) || !(c_gamma > 0.0))
        throw std::invalid_argument("estimator constants must be positive");
    if (mode == Mode::paper && (c_p != 200.0 || c_kappa != 2000.0 || c_gamma != 100.0))
        throw std::invalid_argument(
            "paper-faithful mode pins (c_p, c_kappa, c_gamma) = (200, 2000, 100)");
}

double EstimatorConfig::log_n(std::size_t n) const {
    const double ln = std::log(static_cast<double>(n < 2 ? 2 : n));
    return log_base == LogBase::natural ? ln : ln / std::log(2.0);
}

double EstimatorConfig::sampling_probability(std::size_t n, double t_hat, double mult) const {
    return std::min(c_p * mult * log_n(n) / (eps * eps * t_hat), 1.0);
}

std::uint64_t EstimatorConfig::gamma(std::size_t n) const {
    return static_cast<std::uint64_t>(std::ceil(c_gamma * log_n(n)));
}

double EstimatorConfig::kappa(std::size_t n) const { return c_kappa * log_n(n) / (eps * eps); }

const char* to_string(GuessVerdict::Kind k) {
    switch (k) {
        case GuessVerdict::Kind::accept: return "accept";
        case GuessVerdict::Kind::reject: return "reject";
        case GuessVerdict::Kind::fail: return "fail";
    }
    return "?";
}

nlohmann::json EstimateReport::to_json() const {
    nlohmann::json guesses_json = nlohmann::json::array();
    for (const auto& [t_hat, kind] : guesses)
        guesses_json.push_back({t_hat, std::string(qcut::to_string(kind))});
    const char* outcome_str = outcome == Outcome::estimate      ? "estimate"
                              : outcome == Outcome::disconnected ? "disconnected"
                                                                 : "fail";
    return {{"outcome", outcome_str},
            {"value", value ? nlohmann::json(*value) : nlohmann::json(nullptr)},
            {"queries", qcut::to_json(queries)},
            {"guesses", guesses_json},
            {"seed", seed},
            {"elapsed_ms", elapsed_ms}};
}

namespace {

std::uint64_t half_degree_sum(const DegreeSequence& degrees) {
    std::uint64_t sum = 0;
    for (auto d : degrees) sum += d;
    if (sum % 2 != 0)
        throw std::invalid_argument("degree sequence sums to an odd value; not a graph");
    return sum / 2;
}

// Shared Verify-Guess body. `parts` is 2 for the plain estimator; the r-way
// variant rejects on >= r components and scores an exact r-cut instead.
GuessVerdict verify_guess_impl(Oracle& oracle, const DegreeSequence& degrees, double t_hat,
                               const EstimatorConfig& cfg, RngStream rng, std::uint32_t parts) {
    const std::size_t n = oracle.vertex_count();
    if (degrees.size() != n)
        throw std::invalid_argument("degree sequence length does not match the graph");
    const std::uint64_t m = half_degree_sum(degrees);
    if (!(t_hat >= 1.0) || !(t_hat <= static_cast<double>(n) / 2.0))
        throw std::invalid_argument("guess must satisfy 1 <= t_hat <= n/2");
    if (static_cast<double>(m) < static_cast<double>(n) - static_cast<double>(parts) + 1.0)
        throw std::invalid_argument("too few edges: m >= n - r + 1 required");

    const double mult = parts == 2 ? 1.0 : static_cast<double>(parts);
    const double p = cfg.sampling_probability(n, t_hat, mult);
    const std::uint64_t gamma = cfg.gamma(n);

    std::uint64_t short_of_parts = 0; // samples with fewer than `parts` components
    std::uint64_t split = 0;          // samples with at least `parts` components
    SampledSubgraph first_whole;      // first sample, kept for the accept branch
    bool have_first = false;

    for (std::uint64_t i = 0; i < gamma; ++i) {
        SampledSubgraph h = sample(oracle, degrees, p, rng.derive(i));
        if (component_count(h) >= parts) {
            ++split;
        } else {
            ++short_of_parts;
            if (!have_first) {
                first_whole = std::move(h);
                have_first = true;
            }
        }
    }

    if (2 * split >= gamma) return {GuessVerdict::Kind::reject, std::nullopt};
    if (short_of_parts == gamma) {
        // all samples hang together: accept and score the first one
        double cut_size;
        if (parts == 2) {
            cut_size = static_cast<double>(min_cut_exact(to_graph(first_whole)).size);
        } else {
            if (first_whole.n > 12)
                throw std::runtime_error(
                    "r-way accept branch needs an exact r-cut, only available for n <= 12 "
                    "(got n = " +
                    std::to_string(first_whole.n) + ")");
            cut_size = static_cast<double>(min_rcut_brute(to_graph(first_whole), parts).size);
        }
        return {GuessVerdict::Kind::accept, cut_size / p};
    }
    return {GuessVerdict::Kind::fail, std::nullopt};
}

EstimateReport run_ladder(Oracle& oracle, const EstimatorConfig& cfg, std::uint32_t parts) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = oracle.vertex_count();

    EstimateReport report;
    report.seed = cfg.seed;

    auto finish = [&](EstimateReport::Outcome outcome, std::optional<double> value) {
        report.outcome = outcome;
        report.value = value;
        report.queries = oracle.counts();
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return report;
    };

    // degrees of all vertices, one Degree query each
    DegreeSequence degrees(n);
    bool isolated = false;
    std::uint64_t degree_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
        degrees[u] = oracle.q_degree(u);
        degree_sum += degrees[u];
        isolated |= degrees[u] == 0;
    }
    // an isolated vertex settles the two-way cut immediately; the analogous
    // shortcut is unsound for r >= 3, where isolation does not force a
    // zero-size r-cut
    if (parts == 2 && isolated) return finish(EstimateReport::Outcome::estimate, 0.0);
    const std::uint64_t m = degree_sum / 2;
    if (static_cast<double>(m) <
        static_cast<double>(n) - static_cast<double>(parts) + 1.0)
        return finish(EstimateReport::Outcome::estimate, 0.0);

    const double kappa = cfg.kappa(n);
    RngStream master(cfg.seed);
    std::uint64_t call_index = 0;

    double t_hat = static_cast<double>(n) / 2.0;
    while (t_hat >= 1.0) {
        GuessVerdict verdict =
            verify_guess_impl(oracle, degrees, t_hat, cfg, master.derive(call_index++), parts);
        report.guesses.emplace_back(t_hat, verdict.kind);
        if (verdict.kind == GuessVerdict::Kind::reject) {
            t_hat /= 2.0;
            continue;
        }

        // first non-reject: shrink below the true value and re-verify
        double t_low = std::max(t_hat / kappa, 1.0);
        t_low = std::min(t_low, static_cast<double>(n) / 2.0);
        GuessVerdict final_verdict =
            verify_guess_impl(oracle, degrees, t_low, cfg, master.derive(call_index++), parts);
        report.guesses.emplace_back(t_low, final_verdict.kind);
        if (final_verdict.kind == GuessVerdict::Kind::accept)
            return finish(EstimateReport::Outcome::estimate, final_verdict.estimate);
        return finish(EstimateReport::Outcome::fail, std::nullopt);
    }

    // every guess down to 1 was rejected
    return finish(EstimateReport::Outcome::disconnected, std::nullopt);
}

} // namespace

GuessVerdict verify_guess(Oracle& oracle, const DegreeSequence& degrees, double t_hat,
                          const EstimatorConfig& cfg, RngStream rng) {
    cfg.validate();
    return verify_guess_impl(oracle, degrees, t_hat, cfg, rng, 2);
}

EstimateReport estimate_mincut(Oracle& oracle, const EstimatorConfig& cfg) {
    return run_ladder(oracle, cfg, 2);
}

EstimateReport estimate_rcut(Oracle& oracle, std::uint32_t r, const EstimatorConfig& cfg) {
    const std::size_t n = oracle.vertex_count();
    if (r < 2 || r > n) throw std::invalid_argument("part count must satisfy 2 <= r <= n");
    // r = 2 is the plain problem; run it unchanged so both entry points
    // give identical reports for identical seeds
    return run_ladder(oracle, cfg, r);
}

} // namespace qcut
