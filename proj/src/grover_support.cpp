#include "qwalk/grover_support.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qwalk/operators.hpp"
#include "qwalk/spectral_map.hpp"
#include "qwalk/weights.hpp"

namespace qwalk {

namespace {

int require_regular(const Graph& g, int min_degree) {
    const auto& profile = g.profile();
    if (!profile.is_regular)
        throw std::invalid_argument("support spectra require a regular graph");
    if (profile.degree < min_degree)
        throw std::invalid_argument("support spectra require degree >= " +
                                    std::to_string(min_degree));
    return profile.degree;
}

}  // namespace

std::pair<Complex, Complex> support_s(int j, double x, int kappa) {
    if (kappa < 2) throw std::invalid_argument("support formulas require kappa >= 2");
    const double k = kappa;
    Complex mean, half_gap;
    switch (j) {
        case 1:
            mean = x / 2.0;
            half_gap = std::sqrt(Complex(x * x - 4.0 * k + 4.0)) / 2.0;
            break;
        case 2:
            // = s1(x)^2 + 1 elementwise, so the gap carries x, not |x|.
            mean = (x * x - 2.0 * k + 4.0) / 2.0;
            half_gap = x * std::sqrt(Complex(x * x - 4.0 * k + 4.0)) / 2.0;
            break;
        case 3:
            mean = x * (x * x + 4.0 - 3.0 * k) / 2.0;
            half_gap = std::sqrt(Complex(
                           std::pow(x, 6) + 2.0 * (2.0 - 3.0 * k) * std::pow(x, 4) +
                           (13.0 * k * k - 24.0 * k + 16.0) * x * x -
                           8.0 * (k - 1.0) * (k * k - 2.0 * k + 2.0))) /
                       2.0;
            break;
        default:
            throw std::invalid_argument("support power must be 1, 2 or 3");
    }
    return {mean + half_gap, mean - half_gap};
}

IntMatrix feed_matrix(const Graph& g) {
    IntMatrix b = IntMatrix::Zero(g.num_arcs(), g.num_arcs());
    for (int e = 0; e < g.num_arcs(); ++e)
        for (int f : g.in_arcs(g.arc_origin(e))) b(e, f) = 1;
    return b;
}

IntMatrix grover_numerator(const Graph& g) {
    const int kappa = require_regular(g, 1);
    IntMatrix m = 2 * feed_matrix(g);
    for (int a = 0; a < g.num_arcs(); ++a) m(a, Graph::arc_inverse(a)) -= kappa;
    return m;
}

IntMatrix support_of_power(const Graph& g, int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("support power must be 1, 2 or 3");
    const IntMatrix base = grover_numerator(g);
    IntMatrix power = base;
    for (int i = 1; i < j; ++i) power = (power * base).eval();
    return positive_part(power);
}

Spectrum SupportSpectrumResult::claimed() const {
    Spectrum spectrum;
    for (const auto& pair : pairs) {
        spectrum.lines.push_back({pair.s_plus, pair.multiplicity, Provenance::inherited});
        spectrum.lines.push_back({pair.s_minus, pair.multiplicity, Provenance::inherited});
    }
    for (const auto& extra : extras) spectrum.lines.push_back(extra);
    spectrum.sort_canonical();
    return spectrum;
}

SupportSpectrumResult support_spectrum(const Graph& g, int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("support power must be 1, 2 or 3");
    const int kappa = require_regular(g, 2);
    const int girth = g.profile().girth;
    if (j == 3 && girth < 5)
        throw std::invalid_argument("the cube support spectrum requires girth >= 5, got " +
                                    std::to_string(girth));
    if (j == 2 && girth < 3)
        throw std::invalid_argument("the square support spectrum requires girth >= 3");

    SupportSpectrumResult result;
    result.j = j;
    result.kappa = kappa;

    ComplexMatrix adjacency = ComplexMatrix::Zero(g.num_vertices(), g.num_vertices());
    for (const auto& [u, v] : g.edges()) {
        adjacency(u, v) += 1.0;
        adjacency(v, u) += 1.0;
    }
    result.adjacency_spectrum = eig(adjacency).spectrum;

    for (const auto& line : result.adjacency_spectrum.lines) {
        SupportSpectrumResult::MappedPair pair;
        pair.lambda = line.value.real();
        pair.multiplicity = line.multiplicity;
        std::tie(pair.s_plus, pair.s_minus) = support_s(j, pair.lambda, kappa);
        pair.degenerate = std::abs(pair.s_plus - pair.s_minus) <= 1e-9;
        result.pairs.push_back(pair);
    }

    const int excess = g.num_edges() - g.num_vertices();
    if (excess > 0) {
        switch (j) {
            case 1:
                result.extras.push_back({Complex(1, 0), excess, Provenance::birth_plus});
                result.extras.push_back({Complex(-1, 0), excess, Provenance::birth_minus});
                break;
            case 2:
                result.extras.push_back({Complex(2, 0), 2 * excess, Provenance::birth_plus});
                break;
            case 3:
                result.extras.push_back({Complex(2, 0), excess, Provenance::birth_plus});
                result.extras.push_back({Complex(-2, 0), excess, Provenance::birth_minus});
                break;
        }
    }
    return result;
}

CubeIdentityReport verify_cube_identity(const Graph& g) {
    CubeIdentityReport report;
    report.kappa = require_regular(g, 1);
    report.girth = g.profile().girth;
    report.girth_at_least_5 = report.girth >= 5;

    const IntMatrix up = support_of_power(g, 1);
    const IntMatrix lhs = support_of_power(g, 3);
    const IntMatrix rhs = (up * up * up + up.transpose()).eval();
    report.mismatched_entries = 0;
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index k = 0; k < lhs.cols(); ++k)
            if (lhs(i, k) != rhs(i, k)) ++report.mismatched_entries;
    report.holds = report.mismatched_entries == 0;
    return report;
}

CubeIntertwinerReport intertwiner_check_cube(const Graph& g) {
    const int kappa = require_regular(g, 2);
    if (g.profile().girth < 5)
        throw std::invalid_argument("the cube intertwiner check requires girth >= 5");

    const WeightScheme scheme = support_scheme(g);
    const int n = g.num_vertices();
    const ComplexMatrix d_star = assemble_d_star(g, scheme);
    ComplexMatrix lifted(g.num_arcs(), 2 * n);
    lifted.leftCols(n) = d_star;
    for (int a = 0; a < g.num_arcs(); ++a)
        lifted.row(a).tail(n) = d_star.row(Graph::arc_inverse(a));

    const ComplexMatrix companion = companion_block(g, scheme);
    ComplexMatrix swapped(2 * n, 2 * n);
    swapped.topLeftCorner(n, n) = companion.bottomRightCorner(n, n);
    swapped.topRightCorner(n, n) = companion.bottomLeftCorner(n, n);
    swapped.bottomLeftCorner(n, n) = companion.topRightCorner(n, n);
    swapped.bottomRightCorner(n, n) = companion.topLeftCorner(n, n);

    const ComplexMatrix cube_support = support_of_power(g, 3).cast<Complex>();
    const ComplexMatrix residual =
        cube_support * lifted - lifted * (companion * companion * companion + swapped);

    CubeIntertwinerReport report;
    report.relation_error = residual.cwiseAbs().maxCoeff();
    report.relation_holds = report.relation_error <= 1e-9;

    ComplexMatrix adjacency = ComplexMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        adjacency(u, v) += 1.0;
        adjacency(v, u) += 1.0;
    }
    for (const auto& line : eig(adjacency).spectrum.lines) {
        const double x = line.value.real();
        const double k = kappa;
        Eigen::Matrix2cd block;
        block << -x * (k - 2.0), -x * x + 2.0 * k - 2.0,
            (k - 1.0) * (x * x - k + 1.0) - 1.0, x * (x * x - 2.0 * k + 2.0);
        const Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(block, false);
        const auto [plus, minus] = support_s(3, x, kappa);
        const Complex a = solver.eigenvalues()[0], b = solver.eigenvalues()[1];
        const double direct = std::max(std::abs(a - plus), std::abs(b - minus));
        const double crossed = std::max(std::abs(a - minus), std::abs(b - plus));
        report.block_pair_error = std::max(report.block_pair_error, std::min(direct, crossed));
    }
    report.block_pairs_match = report.block_pair_error <= 1e-9;
    return report;
}

std::vector<ZetaPole> zeta_poles(const Graph& g, int j) {
    const Spectrum spectrum = eig(support_of_power(g, j).cast<Complex>()).spectrum;
    std::vector<ZetaPole> poles;
    for (const auto& line : spectrum.lines) {
        // Zero eigenvalues contribute no pole; the cutoff sits far below the
        // smallest nonzero support eigenvalue seen at desk scale.
        if (std::abs(line.value) <= 1e-5) continue;
        poles.push_back({1.0 / line.value, line.multiplicity});
    }
    std::sort(poles.begin(), poles.end(), [](const ZetaPole& a, const ZetaPole& b) {
        if (a.location.real() != b.location.real())
            return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return poles;
}

void write_poles_csv(const std::string& path, const std::vector<ZetaPole>& poles) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "re,im,multiplicity\n";
    for (const auto& pole : poles)
        out << format_double(pole.location.real()) << ','
            << format_double(pole.location.imag()) << ',' << pole.multiplicity << '\n';
}

void write_poles_svg(const std::string& path, const std::vector<ZetaPole>& poles) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    double reach = 0.0;
    for (const auto& pole : poles)
        reach = std::max({reach, std::abs(pole.location.real()),
                          std::abs(pole.location.imag())});
    if (reach == 0.0) reach = 1.0;
    const double range = 1.1 * reach;
    constexpr int kSize = 600;
    const double scale = kSize / (2.0 * range);

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    out << "<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#999\"/>\n";
    out << "<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#999\"/>\n";
    // Unit circle for reference.
    out << "<circle cx=\"300\" cy=\"300\" r=\"" << fmt(scale)
        << "\" fill=\"none\" stroke=\"#ccc\" stroke-dasharray=\"4 4\"/>\n";
    for (const auto& pole : poles) {
        const double x = kSize / 2.0 + pole.location.real() * scale;
        const double y = kSize / 2.0 - pole.location.imag() * scale;
        const double radius = 3.0 + 1.5 * (pole.multiplicity - 1);
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(radius)
            << "\" fill=\"#1f5fa8\" fill-opacity=\"0.7\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace qwalk
