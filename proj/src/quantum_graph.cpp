#include "qwalk/quantum_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_params(const QGraphParams& p) {
    if (!(p.k > 0.0)) throw std::invalid_argument("wave number k must be positive");
    if (!(p.length > 0.0)) throw std::invalid_argument("edge length must be positive");
    if (!(std::abs(p.alpha) <= kAlphaCap))
        throw std::invalid_argument("boundary parameter exceeds the numeric cap");
}

}  // namespace

QGraphSystem make_qgraph_system(const Graph& g, const QGraphParams& params) {
    check_params(params);
    const auto& profile = g.profile();
    if (!profile.is_regular)
        throw std::invalid_argument(
            "the homogeneous quantum-graph walk requires a regular graph");
    QGraphSystem sys;
    sys.kappa = profile.degree;
    sys.q = params.alpha / params.k;
    sys.tau = 2.0 / Complex(sys.kappa, sys.q);
    sys.c = static_cast<double>(sys.kappa) * sys.tau;
    sys.gamma = std::arg(sys.tau);
    sys.phase = std::polar(1.0, params.k * params.length);
    sys.scheme.vertex_measure = RealVector::Ones(g.num_vertices());
    sys.scheme.arc_measure = RealVector::Ones(g.num_arcs());
    sys.scheme.coin_weight =
        ComplexVector::Constant(g.num_arcs(), 1.0 / std::sqrt(static_cast<double>(sys.kappa)));
    sys.scheme.c = sys.c;
    return sys;
}

ComplexMatrix build_qgraph_walk(const Graph& g, const QGraphParams& params) {
    const QGraphSystem sys = make_qgraph_system(g, params);
    ComplexMatrix walk = sys.phase * assemble_walk(g, sys.scheme);

    // Direct assembly from the scattering form: amplitude tau on every arc
    // feeding o(e), minus the reflection delta.
    ComplexMatrix direct = ComplexMatrix::Zero(g.num_arcs(), g.num_arcs());
    for (int e = 0; e < g.num_arcs(); ++e) {
        for (int f : g.in_arcs(g.arc_origin(e))) direct(e, f) += sys.tau;
        direct(e, Graph::arc_inverse(e)) -= 1.0;
    }
    direct *= sys.phase;
    if ((walk - direct).cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("operator and scattering assemblies of U~ disagree");
    return walk;
}

QGraphSpectrum qgraph_spectrum(const Graph& g, const QGraphParams& params) {
    QGraphSpectrum result;
    result.system = make_qgraph_system(g, params);
    result.map = mapped_spectrum(g, result.system.scheme);
    result.map.global_phase = result.system.phase;
    result.scaling = result.system.kappa /
                     std::sqrt(result.system.kappa * result.system.kappa +
                               result.system.q * result.system.q);

    const auto& profile = g.profile();
    const bool q_zero = result.system.q == 0.0;
    if (profile.is_tree || (!q_zero && profile.cycle_rank <= 1)) {
        result.predicted_birth_plus = false;
        result.predicted_birth_minus = false;
    } else if (q_zero && profile.cycle_rank == 1 && !profile.is_bipartite) {
        result.predicted_birth_plus = true;
        result.predicted_birth_minus = false;
    } else {
        result.predicted_birth_plus = true;
        result.predicted_birth_minus = true;
    }
    result.case_table_agrees =
        result.predicted_birth_plus == (result.map.birth_plus > 0) &&
        result.predicted_birth_minus == (result.map.birth_minus > 0);
    return result;
}

double qgraph_unit_distance(const Graph& g, double k, double length, double alpha) {
    const ComplexMatrix walk = build_qgraph_walk(g, {k, length, alpha});
    const EigResult solved = eig(walk);
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < solved.values.size(); ++i)
        best = std::min(best, std::abs(solved.values[i] - 1.0));
    return best;
}

namespace {

int count_near_one(const Graph& g, double k, double length, double alpha, double tol) {
    const EigResult solved = eig(build_qgraph_walk(g, {k, length, alpha}));
    int count = 0;
    for (Eigen::Index i = 0; i < solved.values.size(); ++i)
        if (std::abs(solved.values[i] - 1.0) <= tol) ++count;
    return count;
}

// Bisect the sign change of (dist - tol) on [lo, hi] down to `width`.
double bisect_crossing(const std::function<double(double)>& dist, double lo, double hi,
                       double tol, double width) {
    bool lo_below = dist(lo) < tol;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if ((dist(mid) < tol) == lo_below)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<ScanRoot> scan_nontrivial_k(const Graph& g, double length, double alpha,
                                        double k_min, double k_max, int grid) {
    if (!(k_min > 0.0) || !(k_max > k_min))
        throw std::invalid_argument("scan range must satisfy 0 < k_min < k_max");
    if (grid < 2) throw std::invalid_argument("scan grid needs at least 2 points");

    auto dist = [&](double k) { return qgraph_unit_distance(g, k, length, alpha); };

    const double step = (k_max - k_min) / (grid - 1);
    std::vector<double> values(grid);
    for (int i = 0; i < grid; ++i) values[i] = dist(k_min + i * step);

    std::vector<ScanRoot> roots;
    for (int i = 0; i < grid; ++i) {
        const bool left_ok = i == 0 || values[i] <= values[i - 1];
        const bool right_ok = i == grid - 1 || values[i] <= values[i + 1];
        if (!left_ok || !right_ok) continue;
        // Sharpen the local minimum by golden-section; the objective is a
        // V-shaped function of k near a root.
        double lo = k_min + std::max(0, i - 1) * step;
        double hi = k_min + std::min(grid - 1, i + 1) * step;
        constexpr double kGolden = 0.6180339887498949;
        double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
        double f1 = dist(x1), f2 = dist(x2);
        while (hi - lo > 1e-11) {
            if (f1 <= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kGolden * (hi - lo);
                f1 = dist(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kGolden * (hi - lo);
                f2 = dist(x2);
            }
        }
        const double k_star = 0.5 * (lo + hi);
        if (dist(k_star) > kScanRootTol) continue;

        ScanRoot root;
        root.scanned = true;
        // Walk outward until the distance climbs back above tolerance, then
        // bisect both crossings.
        double left = k_star, right = k_star;
        while (left > k_min && dist(left) < kScanRootTol) left = std::max(k_min, left - step);
        while (right < k_max && dist(right) < kScanRootTol)
            right = std::min(k_max, right + step);
        root.k_enter = dist(left) < kScanRootTol
                           ? left
                           : bisect_crossing(dist, left, k_star, kScanRootTol, kScanRefineWidth);
        root.k_exit = dist(right) < kScanRootTol
                          ? right
                          : bisect_crossing(dist, k_star, right, kScanRootTol, kScanRefineWidth);
        root.k = 0.5 * (root.k_enter + root.k_exit);
        root.multiplicity = count_near_one(g, root.k, length, alpha, kScanRootTol);
        if (root.multiplicity == 0) continue;
        roots.push_back(root);
    }

    // Analytic families carried by the birth eigenvalues, which are
    // independent of k: e^{ikL} * (+1) = 1 at k = 2n pi / L, and
    // e^{ikL} * (-1) = 1 at k = (2n+1) pi / L when the -1 birth exists.
    if (!g.profile().is_tree) {
        const QGraphParams probe{std::max(k_min, 1.0), length, alpha};
        const auto [birth_plus, birth_minus] =
            birth_multiplicities(g, make_qgraph_system(g, probe).scheme);
        auto add_family = [&](double base, double period) {
            for (double k = std::ceil((k_min - 1e-12 - base) / period) * period + base;
                 k <= k_max + 1e-12; k += period) {
                if (k < k_min) continue;
                bool merged = false;
                for (auto& root : roots)
                    if (std::abs(root.k - k) <= 1e-5) {
                        root.analytic = true;
                        merged = true;
                        break;
                    }
                if (!merged) {
                    ScanRoot root;
                    root.k = root.k_enter = root.k_exit = k;
                    root.analytic = true;
                    root.multiplicity = count_near_one(g, k, length, alpha, kScanRootTol);
                    roots.push_back(root);
                }
            }
        };
        if (birth_plus > 0) add_family(2.0 * kPi / length, 2.0 * kPi / length);
        if (birth_minus > 0) add_family(kPi / length, 2.0 * kPi / length);
    }

    std::sort(roots.begin(), roots.end(),
              [](const ScanRoot& a, const ScanRoot& b) { return a.k < b.k; });
    return roots;
}

}  // namespace qwalk
