#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

namespace qwalk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense-operator paths refuse arc spaces larger than this; the full
/// eigensolve oracle is the bottleneck and is only meant for desk-scale
/// instances.
inline constexpr int kDenseArcCap = 4096;

/// Entries with real part above this are "positive" for support purposes.
inline constexpr double kSupportTol = 1e-12;

/// Absolute radius used when merging eigenvalues into multiplicity clusters.
inline constexpr double kClusterTol = 1e-7;

bool all_finite(const ComplexMatrix& m);

// Row-major CSV with one "re,im" pair per cell, prefixed by a "# rows cols"
// comment, 17 significant digits.
void write_matrix_csv(const std::string& path, const ComplexMatrix& m);

std::string format_double(double x);  // round-trip-safe %.17g

}  // namespace qwalk
