#pragma once

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

// Norm-preserving Szegedy evolutions U = S(2 d*d - 1_A) under the two
// admissible weight settings:
//
//   setting 1: sum over o(e)=u of |w(e)|^2 = 1, unit measures
//   setting 2: sum over o(e)=u of w(e) = 1 with
//              m_A(e) = m_V(o(e)) w(e) = m_V(t(e)) w(inv e)
//              (extended detailed balance)

struct WalkState {
    ComplexVector amplitudes;
    RealVector arc_measure;

    double norm() const { return weighted_norm(amplitudes, arc_measure); }
    bool is_unit(double tol = 1e-12) const;
};

struct SzegedyWalk {
    WeightScheme scheme;
    ComplexMatrix evolution;
};

SzegedyWalk build_setting1(const Graph& g, const ComplexVector& w1);
SzegedyWalk build_setting2(const Graph& g, const RealVector& w2, const RealVector& m_v);

// Uniform weight choices: 1/sqrt(deg o(e)) for setting 1 (the Grover walk)
// and the simple-random-walk row weights 1/deg(o(e)) for setting 2.
ComplexVector uniform_setting1_weights(const Graph& g);
RealVector uniform_setting2_weights(const Graph& g);
RealVector degree_vertex_measure(const Graph& g);

/// Vertex measure making w2 reversible, found by propagating the detailed
/// balance relation along a spanning tree and validated on the remaining
/// edges.  Throws when no consistent measure exists.
RealVector solve_detailed_balance(const Graph& g, const RealVector& w2);

WalkState delta_state(const Graph& g, const WeightScheme& ws, int arc);

/// psi_0 .. psi_n under repeated application of the evolution.
std::vector<WalkState> evolve(const ComplexMatrix& evolution, const WalkState& initial,
                              int steps);

struct ArcDistribution {
    RealVector probability;  // mu(e) = |psi(e)|^2 m_A(e)
    double total = 0.0;
    bool from_unit_state = false;
};

struct VertexDistribution {
    RealVector probability;  // nu(u) = sum over t(e)=u of mu(e)
    double total = 0.0;
    bool from_unit_state = false;
};

ArcDistribution arc_distribution(const WalkState& state);
VertexDistribution vertex_distribution(const Graph& g, const WalkState& state);

// Equivalence of the two settings for w2 = w1^2 (w1 real positive):
// D^{-1/2} U1^n D^{1/2} = U2^n with (D psi)(e) = m_A(e) psi(e), and the
// distribution of U2 from psi0 equals that of U1 from D^{1/2} psi0.
struct ConjugationReport {
    int steps = 0;
    double max_operator_error = 0.0;      // entrywise, all n <= steps
    double max_distribution_error = 0.0;  // pointwise over arcs and n
    bool operators_match = false;         // <= 1e-9
    bool distributions_match = false;     // <= 1e-10
    RealVector vertex_measure;            // solved m_V
};

ConjugationReport verify_conjugation(const Graph& g, const RealVector& w1, int steps,
                                     const ComplexVector& psi0);

}  // namespace qwalk
