#pragma once

#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/spectrum.hpp"

namespace qwalk {

/// Default tolerance for eigenvalue multiset comparison.
inline constexpr double kMultisetTol = 1e-7;
/// Default tolerance for entrywise operator-identity checks.
inline constexpr double kEntrywiseTol = 1e-10;

struct ComparisonReport {
    struct MatchedPair {
        Complex claimed;
        Complex observed;
        double error = 0.0;
    };
    std::vector<MatchedPair> matched;
    std::vector<Complex> unmatched_claimed;
    std::vector<Complex> unmatched_observed;
    double max_error = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Multiset comparison of two spectra.  Greedy nearest-neighbour assignment
// on the expanded, (re, im)-sorted lists decides the common case; when the
// greedy pass exceeds the tolerance an exact maximum bipartite matching
// over all pairs within tolerance settles it.
ComparisonReport compare_multisets(const Spectrum& claimed, const Spectrum& observed,
                                   double tol = kMultisetTol);

std::string to_string(const ComparisonReport& report);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// P3, C4, C5, K4, K5, Petersen plus 10 seeded random graphs (n <= 10).
std::vector<NamedGraph> builtin_corpus();
std::vector<NamedGraph> load_corpus_dir(const std::string& dir);

// Theorem families driven by the suite.
enum class CheckSet {
    spectral_map,    // mapped spectra vs the dense oracle, all scheme families
    szegedy_births,  // birth-set case tables vs observed +-1 multiplicities
    qgraph,          // quantum-graph walk unitarity and spectrum
    supports,        // closed-form support spectra, cube identity, intertwiner
    all,
};

CheckSet check_set_from_string(const std::string& s);
std::string to_string(CheckSet which);

struct SuiteCase {
    std::string graph;
    std::string check;
    enum class Status { pass, fail, skipped, info } status = Status::skipped;
    double max_error = 0.0;
    std::string detail;
};

std::string to_string(SuiteCase::Status status);

// One report per (graph, check); graphs failing a precondition are skipped
// with the reason logged.  Cases known to sit outside a formula's validity
// (kappa = 2 higher-power supports) are downgraded to informational.
// Deterministic: identical inputs produce identical reports, regardless of
// the thread cap taken from QWS_THREADS.
std::vector<SuiteCase> run_theorem_suite(const std::vector<NamedGraph>& corpus,
                                         CheckSet which, double tol = kMultisetTol);

bool suite_passed(const std::vector<SuiteCase>& cases);
void write_suite_csv(const std::string& path, const std::vector<SuiteCase>& cases);

}  // namespace qwalk
