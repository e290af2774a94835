#pragma once

#include "qwalk/graph.hpp"
#include "qwalk/matrix.hpp"

namespace qwalk {

// A walk scheme is the quadruple (m_V, m_A, w, c):
//
//   m_V : positive vertex measure, weighting the inner product on C^0(G)
//   m_A : positive arc measure, weighting the inner product on C^1(G)
//   w   : complex coin weight per arc, entering the boundary operator d
//   c   : scalar in the evolution W = S(c d*d - 1_A)
//
// A scheme is admissible only when the derived vertex constant
//
//   c'(u) = sum over arcs e with t(e)=u of m_V(u) |w(inv e)|^2 / m_A(e)
//
// takes the same value at every vertex, and c c' != 1.
struct WeightScheme {
    RealVector vertex_measure;  // m_V, size |V|
    RealVector arc_measure;     // m_A, size |A|
    ComplexVector coin_weight;  // w, size |A|
    Complex c;
};

/// Relative tolerance for the vertex-constancy of c'.
inline constexpr double kCPrimeTol = 1e-10;

/// Per-vertex values of c' (diagnostic; these are also the diagonal of dd*).
RealVector c_prime_per_vertex(const Graph& g, const WeightScheme& ws);

/// Common value of c'; throws if the per-vertex values disagree beyond
/// kCPrimeTol (relative).
Complex compute_c_prime(const Graph& g, const WeightScheme& ws);

/// Full admissibility check: sizes, positivity, finiteness, c' constancy,
/// and c c' != 1.  Throws with a specific message on the first violation.
void validate_scheme(const Graph& g, const WeightScheme& ws);

/// Largest entry of |d d* - c' 1_V|.  The composition d d* is diagonal by
/// construction, so this measures exactly the deviation of the per-vertex
/// constants from their common value.
double dd_star_identity_deviation(const Graph& g, const WeightScheme& ws);

// Ready-made schemes.
WeightScheme grover_scheme(const Graph& g);         // c=2, w = 1/sqrt(deg o(e)), m = 1
WeightScheme support_scheme(const Graph& g);        // c=1, w = 1, m = 1 (regular graphs)
WeightScheme setting1_scheme(const Graph& g, const ComplexVector& w1);
WeightScheme setting2_scheme(const Graph& g, const RealVector& w2, const RealVector& m_v);

}  // namespace qwalk
