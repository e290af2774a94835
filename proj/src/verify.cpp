#include "qwalk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qwalk/grover_support.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/quantum_graph.hpp"
#include "qwalk/spectral_map.hpp"
#include "qwalk/szegedy.hpp"

namespace qwalk {

namespace {

// Kuhn augmenting-path matching restricted to pairs within tolerance.
// Exact fallback for the pass/fail decision when greedy assignment fails.
bool perfect_matching_within(const std::vector<Complex>& a, const std::vector<Complex>& b,
                             double tol, std::vector<int>& match_of_a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> allowed(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(a[i] - b[j]) <= tol) allowed[i].push_back(j);

    std::vector<int> owner(b.size(), -1);
    match_of_a.assign(n, -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int i) {
        for (int j : allowed[i]) {
            if (visited[j]) continue;
            visited[j] = 1;
            if (owner[j] < 0 || augment(owner[j])) {
                owner[j] = i;
                match_of_a[i] = j;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; ++i) {
        visited.assign(b.size(), 0);
        if (!augment(i)) return false;
    }
    return true;
}

}  // namespace

ComparisonReport compare_multisets(const Spectrum& claimed, const Spectrum& observed,
                                   double tol) {
    ComparisonReport report;
    report.tol = tol;
    const std::vector<Complex> a = claimed.expanded();
    const std::vector<Complex> b = observed.expanded();

    if (a.size() == b.size()) {
        // Sorted lists of nearly equal multisets line up index by index.
        double max_error = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            max_error = std::max(max_error, std::abs(a[i] - b[i]));
        if (max_error <= tol) {
            for (std::size_t i = 0; i < a.size(); ++i)
                report.matched.push_back({a[i], b[i], std::abs(a[i] - b[i])});
            report.max_error = max_error;
            report.pass = true;
            return report;
        }
        std::vector<int> match_of_a;
        if (perfect_matching_within(a, b, tol, match_of_a)) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double err = std::abs(a[i] - b[match_of_a[i]]);
                report.matched.push_back({a[i], b[match_of_a[i]], err});
                report.max_error = std::max(report.max_error, err);
            }
            report.pass = true;
            return report;
        }
    }

    // Sizes differ or no perfect matching exists: report a best-effort
    // greedy pairing and the leftovers.
    std::vector<char> used(b.size(), 0);
    for (const Complex& value : a) {
        int best = -1;
        double best_err = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double err = std::abs(value - b[j]);
            if (err < best_err) {
                best_err = err;
                best = static_cast<int>(j);
            }
        }
        if (best >= 0 && best_err <= tol) {
            used[best] = 1;
            report.matched.push_back({value, b[best], best_err});
            report.max_error = std::max(report.max_error, best_err);
        } else {
            report.unmatched_claimed.push_back(value);
        }
    }
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j]) report.unmatched_observed.push_back(b[j]);
    report.pass = false;
    return report;
}

std::string to_string(const ComparisonReport& report) {
    std::ostringstream out;
    out << (report.pass ? "pass" : "FAIL") << " (max error " << report.max_error;
    if (!report.unmatched_claimed.empty() || !report.unmatched_observed.empty())
        out << ", unmatched " << report.unmatched_claimed.size() << " claimed / "
            << report.unmatched_observed.size() << " observed";
    out << ")";
    return out.str();
}

std::vector<NamedGraph> builtin_corpus() {
    std::vector<NamedGraph> corpus;
    corpus.push_back({"P3", path_graph(3)});
    corpus.push_back({"C4", cycle_graph(4)});
    corpus.push_back({"C5", cycle_graph(5)});
    corpus.push_back({"K4", complete_graph(4)});
    corpus.push_back({"K5", complete_graph(5)});
    corpus.push_back({"Petersen", petersen_graph()});
    for (int i = 0; i < 10; ++i) {
        const int n = 5 + i % 6;
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const int m = n - 1 + (i * 7 + 3) % (max_extra + 1);
        std::ostringstream name;
        name << "random(n=" << n << ",m=" << m << ",seed=" << 1000 + i << ")";
        corpus.push_back({name.str(), random_connected_graph(n, m, 1000 + i)});
    }
    return corpus;
}

std::vector<NamedGraph> load_corpus_dir(const std::string& dir) {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    std::vector<NamedGraph> corpus;
    for (const auto& path : paths)
        corpus.push_back({path.filename().string(), load_graph_file(path.string())});
    return corpus;
}

CheckSet check_set_from_string(const std::string& s) {
    if (s == "spectral-map") return CheckSet::spectral_map;
    if (s == "szegedy-births") return CheckSet::szegedy_births;
    if (s == "qgraph") return CheckSet::qgraph;
    if (s == "supports") return CheckSet::supports;
    if (s == "all") return CheckSet::all;
    throw std::invalid_argument("unknown check set: " + s);
}

std::string to_string(CheckSet which) {
    switch (which) {
        case CheckSet::spectral_map: return "spectral-map";
        case CheckSet::szegedy_births: return "szegedy-births";
        case CheckSet::qgraph: return "qgraph";
        case CheckSet::supports: return "supports";
        case CheckSet::all: return "all";
    }
    return "all";
}

std::string to_string(SuiteCase::Status status) {
    switch (status) {
        case SuiteCase::Status::pass: return "pass";
        case SuiteCase::Status::fail: return "FAIL";
        case SuiteCase::Status::skipped: return "skipped";
        case SuiteCase::Status::info: return "info";
    }
    return "skipped";
}

namespace {

SuiteCase make_case(const std::string& graph, const std::string& check,
                    SuiteCase::Status status, double err = 0.0, std::string detail = {}) {
    return {graph, check, status, err, std::move(detail)};
}

void spectral_map_cases(const NamedGraph& entry, double tol, std::vector<SuiteCase>& out) {
    const Graph& g = entry.graph;
    struct SchemeChoice {
        std::string name;
        std::function<WeightScheme()> build;
    };
    std::vector<SchemeChoice> choices = {
        {"spectral-map/setting1-uniform",
         [&] { return setting1_scheme(g, uniform_setting1_weights(g)); }},
        {"spectral-map/setting2-srw",
         [&] {
             return setting2_scheme(g, uniform_setting2_weights(g), degree_vertex_measure(g));
         }},
        {"spectral-map/support-c1",
         [&] { return support_scheme(g); }},
    };
    for (const auto& choice : choices) {
        WeightScheme ws;
        try {
            ws = choice.build();
            validate_scheme(g, ws);
        } catch (const std::exception& ex) {
            out.push_back(make_case(entry.name, choice.name, SuiteCase::Status::skipped, 0.0,
                                    ex.what()));
            continue;
        }
        const MappedSpectrum mapped = mapped_spectrum(g, ws);
        const Spectrum oracle = eig(assemble_walk(g, ws)).spectrum;
        const ComparisonReport cmp = compare_multisets(mapped.to_spectrum(), oracle, tol);
        out.push_back(make_case(entry.name, choice.name,
                                cmp.pass ? SuiteCase::Status::pass : SuiteCase::Status::fail,
                                cmp.max_error, to_string(cmp)));
    }
}

void szegedy_birth_cases(const NamedGraph& entry, double tol, std::vector<SuiteCase>& out) {
    const Graph& g = entry.graph;
    const SzegedySpectrum s2 =
        szegedy_spectrum(g, SzegedySetting::two, uniform_setting2_weights(g).cast<Complex>());
    // Observed +-1 multiplicities must equal exceptional + birth bookkeeping.
    const Spectrum oracle = eig(assemble_walk(g, setting2_scheme(g, uniform_setting2_weights(g),
                                                                 degree_vertex_measure(g))))
                                .spectrum;
    int observed_plus = 0, observed_minus = 0;
    for (const auto& line : oracle.lines) {
        if (std::abs(line.value - Complex(1, 0)) <= tol) observed_plus += line.multiplicity;
        if (std::abs(line.value + Complex(1, 0)) <= tol) observed_minus += line.multiplicity;
    }
    const int expected_plus = s2.map.mult_plus_c_prime + s2.map.birth_plus;
    const int expected_minus = s2.map.mult_minus_c_prime + s2.map.birth_minus;
    const bool ok = s2.case_table_agrees && observed_plus == expected_plus &&
                    observed_minus == expected_minus;
    std::ostringstream detail;
    detail << "birth(+1)=" << s2.map.birth_plus << " birth(-1)=" << s2.map.birth_minus
           << " predicted(" << s2.predicted_birth_plus << "," << s2.predicted_birth_minus
           << ") observed mult(+1)=" << observed_plus << " mult(-1)=" << observed_minus;
    out.push_back(make_case(entry.name, "szegedy-births/setting2",
                            ok ? SuiteCase::Status::pass : SuiteCase::Status::fail, 0.0,
                            detail.str()));
}

void qgraph_cases(const NamedGraph& entry, double tol, std::vector<SuiteCase>& out) {
    const Graph& g = entry.graph;
    if (!g.profile().is_regular) {
        out.push_back(make_case(entry.name, "qgraph", SuiteCase::Status::skipped, 0.0,
                                "not regular"));
        return;
    }
    const QGraphParams points[] = {{1.0, 1.0, 0.0}, {2.0, 1.0, 1.0}, {0.7, 2.0, 3.0}};
    for (const auto& params : points) {
        std::ostringstream name;
        name << "qgraph/k=" << params.k << ",L=" << params.length << ",a=" << params.alpha;
        const ComplexMatrix walk = build_qgraph_walk(g, params);
        const double unitarity =
            (walk * walk.adjoint() - ComplexMatrix::Identity(walk.rows(), walk.cols()))
                .cwiseAbs()
                .maxCoeff();
        const QGraphSpectrum spectrum = qgraph_spectrum(g, params);
        const ComparisonReport cmp =
            compare_multisets(spectrum.map.to_spectrum(), eig(walk).spectrum, tol);
        const bool ok = cmp.pass && unitarity <= 1e-10;
        std::ostringstream detail;
        detail << to_string(cmp) << ", unitarity deviation " << unitarity;
        out.push_back(make_case(entry.name, name.str(),
                                ok ? SuiteCase::Status::pass : SuiteCase::Status::fail,
                                std::max(cmp.max_error, unitarity), detail.str()));
    }
}

void support_cases(const NamedGraph& entry, double tol, std::vector<SuiteCase>& out) {
    const Graph& g = entry.graph;
    const auto& profile = g.profile();
    if (!profile.is_regular || profile.degree < 2) {
        out.push_back(make_case(entry.name, "supports", SuiteCase::Status::skipped, 0.0,
                                "not regular of degree >= 2"));
        return;
    }
    const bool kappa2 = profile.degree == 2;
    for (int j = 1; j <= 3; ++j) {
        const std::string name = "supports/spectrum-j" + std::to_string(j);
        SupportSpectrumResult claimed;
        try {
            claimed = support_spectrum(g, j);
        } catch (const std::exception& ex) {
            out.push_back(make_case(entry.name, name, SuiteCase::Status::skipped, 0.0,
                                    ex.what()));
            continue;
        }
        const Spectrum observed = eig(support_of_power(g, j).cast<Complex>()).spectrum;
        const ComparisonReport cmp = compare_multisets(claimed.claimed(), observed, tol);
        // For kappa = 2 the j >= 2 closed forms are outside their validity;
        // the comparison is reported rather than asserted.
        if (kappa2 && j >= 2)
            out.push_back(make_case(entry.name, name, SuiteCase::Status::info, cmp.max_error,
                                    std::string("kappa=2 edge case: ") + to_string(cmp)));
        else
            out.push_back(make_case(entry.name, name,
                                    cmp.pass ? SuiteCase::Status::pass : SuiteCase::Status::fail,
                                    cmp.max_error, to_string(cmp)));
    }

    const CubeIdentityReport cube = verify_cube_identity(g);
    std::ostringstream detail;
    detail << "girth " << cube.girth << ", " << cube.mismatched_entries
           << " mismatched entries";
    if (!cube.girth_at_least_5) {
        // Negative control: the identity must fail below girth 5.
        out.push_back(make_case(entry.name, "supports/cube-identity-negative-control",
                                cube.holds ? SuiteCase::Status::fail : SuiteCase::Status::pass,
                                0.0, detail.str()));
    } else if (kappa2) {
        detail << " (kappa=2: reflection amplitude vanishes, identity not expected)";
        out.push_back(make_case(entry.name, "supports/cube-identity", SuiteCase::Status::info,
                                0.0, detail.str()));
    } else {
        out.push_back(make_case(entry.name, "supports/cube-identity",
                                cube.holds ? SuiteCase::Status::pass : SuiteCase::Status::fail,
                                0.0, detail.str()));
    }

    if (cube.girth_at_least_5 && !kappa2) {
        const CubeIntertwinerReport inter = intertwiner_check_cube(g);
        const bool ok = inter.relation_holds && inter.block_pairs_match;
        std::ostringstream inter_detail;
        inter_detail << "relation error " << inter.relation_error << ", block pair error "
                     << inter.block_pair_error;
        out.push_back(make_case(entry.name, "supports/cube-intertwiner",
                                ok ? SuiteCase::Status::pass : SuiteCase::Status::fail,
                                std::max(inter.relation_error, inter.block_pair_error),
                                inter_detail.str()));
    }
}

int thread_cap() {
    if (const char* env = std::getenv("QWS_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<SuiteCase> run_theorem_suite(const std::vector<NamedGraph>& corpus,
                                         CheckSet which, double tol) {
    std::vector<std::vector<SuiteCase>> per_graph(corpus.size());
    auto run_one = [&](std::size_t i) {
        const NamedGraph& entry = corpus[i];
        auto& out = per_graph[i];
        if (which == CheckSet::spectral_map || which == CheckSet::all)
            spectral_map_cases(entry, tol, out);
        if (which == CheckSet::szegedy_births || which == CheckSet::all)
            szegedy_birth_cases(entry, tol, out);
        if (which == CheckSet::qgraph || which == CheckSet::all)
            qgraph_cases(entry, tol, out);
        if (which == CheckSet::supports || which == CheckSet::all)
            support_cases(entry, tol, out);
    };

    const int threads = std::min<int>(thread_cap(), static_cast<int>(corpus.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < corpus.size(); i = next++) run_one(i);
            });
        for (auto& thread : pool) thread.join();
    }

    std::vector<SuiteCase> cases;
    for (auto& chunk : per_graph)
        for (auto& c : chunk) cases.push_back(std::move(c));
    return cases;
}

bool suite_passed(const std::vector<SuiteCase>& cases) {
    for (const auto& c : cases)
        if (c.status == SuiteCase::Status::fail) return false;
    return true;
}

void write_suite_csv(const std::string& path, const std::vector<SuiteCase>& cases) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "graph,check,status,max_error,detail\n";
    for (const auto& c : cases) {
        std::string detail = c.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        out << c.graph << ',' << c.check << ',' << to_string(c.status) << ','
            << format_double(c.max_error) << ',' << detail << '\n';
    }
}

}  // namespace qwalk
