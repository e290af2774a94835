#pragma once

#include "qwalk/graph.hpp"
#include "qwalk/matrix.hpp"
#include "qwalk/weights.hpp"

namespace qwalk {

// Operators on C^0(G) (functions on vertices) and C^1(G) (functions on
// arcs), assembled as dense matrices:
//
//   d    : C^1 -> C^0,  (d psi)(u)  = sum over t(e)=u of conj(w(inv e)) psi(e)
//   d*   : C^0 -> C^1,  (d* f)(e)   = f(t(e)) m_V(t(e)) w(inv e) / m_A(e)
//   S    : C^1 -> C^1,  (S psi)(e)  = psi(inv e)            (arc flip)
//   W    : C^1 -> C^1,  W = S (c d* d - 1_A)                (walk evolution)
//
// d* is the adjoint of d with respect to the weighted inner products, so
// <d* f, psi>_{m_A} = <f, d psi>_{m_V} holds by construction.

ComplexMatrix assemble_d(const Graph& g, const WeightScheme& ws);       // |V| x |A|
ComplexMatrix assemble_d_star(const Graph& g, const WeightScheme& ws);  // |A| x |V|
ComplexMatrix assemble_flip(const Graph& g);                            // |A| x |A|
ComplexMatrix assemble_walk(const Graph& g, const WeightScheme& ws);    // |A| x |A|

/// The |V| x |V| discriminant d S d*, whose spectrum generates the walk
/// spectrum through the spectral map.
ComplexMatrix discriminant(const Graph& g, const WeightScheme& ws);

// Positive support M+: 0/1 matrix marking entries with real part above tol.
// Entries that are merely nonzero with a negative real part do not count;
// the reflection amplitude 2/kappa - 1 of the Grover walk must drop out for
// the closed-form support spectra to hold.
ComplexMatrix positive_support(const ComplexMatrix& m, double tol = kSupportTol);

/// Exact integer variant (entries strictly greater than zero).
IntMatrix positive_part(const IntMatrix& m);

// Weighted inner products; the first factor is conjugated.
Complex inner_vertex(const ComplexVector& f1, const ComplexVector& f2,
                     const RealVector& m_v);
Complex inner_arc(const ComplexVector& p1, const ComplexVector& p2,
                  const RealVector& m_a);
double weighted_norm(const ComplexVector& psi, const RealVector& m_a);

}  // namespace qwalk
