#pragma once

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/spectral_map.hpp"

namespace qwalk {

// Equilateral quantum-graph walk on a kappa-regular graph: every edge has
// the same length L and every vertex the same boundary parameter alpha.
// With q(k) = alpha/k and tau = 2 / (kappa + i q), the evolution is
//
//   U~ = e^{ikL} S (c d*d - 1_A),   c = kappa tau = 2 kappa / (kappa + i q),
//
// with the uniform coin w = 1/sqrt(kappa) and unit measures.  U~ is unitary:
// writing gamma = arg(tau), c - 1 = e^{2 i gamma} and c = 2 e^{i gamma}
// cos(gamma), so the inherited spectrum lives on the unit circle.

struct QGraphParams {
    double k = 1.0;       // wave number, > 0
    double length = 1.0;  // common edge length L, > 0
    double alpha = 0.0;   // boundary parameter, |alpha| capped
};

/// Rejection threshold for |alpha|; the Dirichlet limit alpha -> infinity is
/// out of numeric scope.
inline constexpr double kAlphaCap = 1e8;

struct QGraphSystem {
    int kappa = 0;
    double q = 0.0;       // alpha / k
    Complex tau;          // 2 / (kappa + i q)
    Complex c;            // kappa tau
    double gamma = 0.0;   // arg(tau), in (-pi/2, pi/2)
    Complex phase;        // e^{ikL}
    WeightScheme scheme;  // (1, 1, 1/sqrt(kappa), c)
};

QGraphSystem make_qgraph_system(const Graph& g, const QGraphParams& params);

/// e^{ikL} S (c d*d - 1_A); verified internally against the direct
/// entrywise form e^{ikL} (tau - delta_{f, inv e}) over feeding arcs.
ComplexMatrix build_qgraph_walk(const Graph& g, const QGraphParams& params);

struct QGraphSpectrum {
    QGraphSystem system;
    MappedSpectrum map;  // global_phase = e^{ikL}
    double scaling = 1.0;  // kappa / sqrt(kappa^2 + q^2) = cos(gamma)
    // Case-table prediction for the birth set (none / {+1} / {+-1}) as a
    // function of (q, cycle structure); the rank-computed births in `map`
    // are authoritative, the prediction is reported for cross-inspection.
    bool predicted_birth_plus = false;
    bool predicted_birth_minus = false;
    bool case_table_agrees = false;
};

QGraphSpectrum qgraph_spectrum(const Graph& g, const QGraphParams& params);

/// Objective used by the k-scan: distance from 1 to the nearest eigenvalue
/// of U~(k).
double qgraph_unit_distance(const Graph& g, double k, double length, double alpha);

inline constexpr double kScanRootTol = 1e-6;
inline constexpr double kScanRefineWidth = 1e-9;

struct ScanRoot {
    double k = 0.0;          // midpoint of the sub-tolerance interval
    double k_enter = 0.0;    // distance crosses below tolerance
    double k_exit = 0.0;     // distance crosses back above
    int multiplicity = 0;    // eigenvalues within tolerance of 1 at k
    bool scanned = false;    // found by the grid scan
    bool analytic = false;   // member of a 2n pi / L or (2n+1) pi / L family
};

// Grid scan of dist(1, sigma(U~(k))) over [k_min, k_max]; local minima are
// refined and kept when the distance drops below kScanRootTol, with the
// crossing points bisected to kScanRefineWidth.  Graphs with a cycle also
// carry the analytic families k = 2n pi / L (always) and (2n+1) pi / L
// (when the -1 birth eigenvalue exists), which are merged into the result.
std::vector<ScanRoot> scan_nontrivial_k(const Graph& g, double length, double alpha,
                                        double k_min, double k_max, int grid);

}  // namespace qwalk
