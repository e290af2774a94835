#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/matrix.hpp"

namespace qwalk {

enum class Provenance {
    inherited,    // lifted from a discriminant eigenvalue through the spectral map
    birth_plus,   // eigenvalue +1 born on the orthogonal complement of the lift
    birth_minus,  // eigenvalue -1 born there
    observed,     // reported by the dense eigensolver oracle
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct SpectralLine {
    Complex value;
    int multiplicity = 1;
    Provenance provenance = Provenance::observed;
};

/// Multiset of eigenvalues with algebraic multiplicities.
struct Spectrum {
    std::vector<SpectralLine> lines;

    int total_multiplicity() const;
    /// Flat list with each value repeated by multiplicity, sorted by (re, im).
    std::vector<Complex> expanded() const;
    /// Sort lines by (re, im, provenance); does not merge.
    void sort_canonical();
};

Spectrum cluster_eigenvalues(const ComplexVector& values,
                             double tol = kClusterTol,
                             Provenance provenance = Provenance::observed);

struct EigResult {
    ComplexVector values;   // raw eigenvalues, solver order
    ComplexMatrix vectors;  // columns; empty unless requested
    Spectrum spectrum;      // clustered multiset
    double max_residual = 0.0;  // max ||M v - lambda v||_2 over returned pairs
};

/// Relative residual bound honoured by eig() when eigenvectors are computed.
inline constexpr double kEigResidualTol = 1e-8;

// Dense nonsymmetric eigensolve of a square complex matrix.  When
// eigenvectors are requested every returned pair satisfies
// ||M v - lambda v||_2 <= kEigResidualTol * ||M||_2 or the call throws.
// Dimensions above kDenseArcCap are refused.
EigResult eig(const ComplexMatrix& m, bool with_vectors = false,
              double cluster_tol = kClusterTol);

// CSV schema: "re,im,multiplicity,provenance", 17 significant digits.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);
void write_spectrum_csv_file(const std::string& path, const Spectrum& spectrum);
Spectrum read_spectrum_csv(std::istream& in);

}  // namespace qwalk
