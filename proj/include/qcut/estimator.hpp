#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcut/graph.hpp"
#include "qcut/oracle.hpp"
#include "qcut/rng.hpp"

namespace qcut {

enum class LogBase { natural, log2 };
enum class Mode { paper, scaled };

// Constant pack for the estimation pipeline. Paper-faithful mode pins the
// published constants (they force p = 1 on desk-scale graphs, which makes
// runs exact); scaled mode takes small constants that exercise the
// genuinely sublinear sampling regime at reachable sizes.
struct EstimatorConfig {
    double eps = 0.25;
    double c_p = 200.0;      // numerator constant of p
    double c_kappa = 2000.0; // numerator constant of the shrink factor kappa
    double c_gamma = 100.0;  // repetition constant of Gamma
    LogBase log_base = LogBase::natural;
    std::uint64_t seed = 0;
    Mode mode = Mode::paper;

    static EstimatorConfig paper_faithful(double eps, std::uint64_t seed);
    static EstimatorConfig scaled(double eps, std::uint64_t seed, double c_p = 0.05,
                                  double c_kappa = 0.25, double c_gamma = 4.0);

    void validate() const; // throws std::invalid_argument
    double log_n(std::size_t n) const;

    // p = min{c_p * mult * log(n) / (eps^2 * t_hat), 1}; mult is 1 for the
    // plain estimator and r for the r-way variant.
    double sampling_probability(std::size_t n, double t_hat, double mult = 1.0) const;
    std::uint64_t gamma(std::size_t n) const; // ceil(c_gamma * log n)
    double kappa(std::size_t n) const;        // c_kappa * log n / eps^2
};

struct GuessVerdict {
    enum class Kind { accept, reject, fail };
    Kind kind = Kind::fail;
    std::optional<double> estimate; // present iff accept
};

const char* to_string(GuessVerdict::Kind k);

struct EstimateReport {
    enum class Outcome { estimate, disconnected, fail };
    Outcome outcome = Outcome::fail;
    std::optional<double> value; // present iff outcome == estimate
    QueryCounts queries;
    std::vector<std::pair<double, GuessVerdict::Kind>> guesses; // audit of the ladder
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const;
};

// Verify-Guess: draws Gamma independent samples at rate p(t_hat) and maps
// the connectivity pattern to a verdict. Rejects when at least Gamma/2
// samples are disconnected, accepts with estimate |Cut(H_1)|/p when all are
// connected, fails otherwise. Preconditions (1 <= t_hat <= n/2 and
// m >= n-1) are checked before any query is issued.
GuessVerdict verify_guess(Oracle& oracle, const DegreeSequence& degrees, double t_hat,
                          const EstimatorConfig& cfg, RngStream rng);

// Full estimator: n degree queries, degenerate exits, then the halving
// guess ladder driven by verify_guess. Uses Degree and Neighbor queries
// only.
EstimateReport estimate_mincut(Oracle& oracle, const EstimatorConfig& cfg);

// r-way generalization: sampling rate carries an extra factor r, the
// rejection test becomes "at least r components", and the accept branch
// scores an exact minimum r-cut (small n only). r = 2 runs the plain
// estimator unchanged.
EstimateReport estimate_rcut(Oracle& oracle, std::uint32_t r, const EstimatorConfig& cfg);

} // namespace qcut
