#include "qwalk/spectrum.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qwalk {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::inherited: return "inherited";
        case Provenance::birth_plus: return "birth_plus";
        case Provenance::birth_minus: return "birth_minus";
        case Provenance::observed: return "observed";
    }
    return "observed";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "inherited") return Provenance::inherited;
    if (s == "birth_plus") return Provenance::birth_plus;
    if (s == "birth_minus") return Provenance::birth_minus;
    if (s == "observed") return Provenance::observed;
    throw std::invalid_argument("unknown provenance tag: " + s);
}

int Spectrum::total_multiplicity() const {
    return std::accumulate(lines.begin(), lines.end(), 0,
                           [](int acc, const SpectralLine& l) { return acc + l.multiplicity; });
}

std::vector<Complex> Spectrum::expanded() const {
    std::vector<Complex> flat;
    flat.reserve(total_multiplicity());
    for (const auto& line : lines)
        for (int i = 0; i < line.multiplicity; ++i) flat.push_back(line.value);
    std::sort(flat.begin(), flat.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return flat;
}

void Spectrum::sort_canonical() {
    std::sort(lines.begin(), lines.end(), [](const SpectralLine& a, const SpectralLine& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        if (a.value.imag() != b.value.imag()) return a.value.imag() < b.value.imag();
        return static_cast<int>(a.provenance) < static_cast<int>(b.provenance);
    });
}

Spectrum cluster_eigenvalues(const ComplexVector& values, double tol, Provenance provenance) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (values[a].real() != values[b].real()) return values[a].real() < values[b].real();
        return values[a].imag() < values[b].imag();
    });

    // Union by transitive closure of the "within tol" relation; scanning in
    // real order bounds the candidate window.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Complex a = values[order[i]], b = values[order[j]];
            if (b.real() - a.real() > tol) break;
            if (std::abs(a - b) <= tol) parent[find(order[j])] = find(order[i]);
        }
    }

    std::vector<Complex> sums(n, Complex(0, 0));
    std::vector<int> counts(n, 0);
    for (int i = 0; i < n; ++i) {
        const int root = find(i);
        sums[root] += values[i];
        ++counts[root];
    }
    Spectrum spectrum;
    for (int i = 0; i < n; ++i)
        if (counts[i] > 0)
            spectrum.lines.push_back(
                {sums[i] / static_cast<double>(counts[i]), counts[i], provenance});
    spectrum.sort_canonical();
    return spectrum;
}

EigResult eig(const ComplexMatrix& m, bool with_vectors, double cluster_tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig requires a square matrix");
    if (m.rows() > kDenseArcCap)
        throw std::invalid_argument("matrix dimension exceeds the dense eigensolve cap");
    if (!all_finite(m)) throw std::invalid_argument("eig requires finite entries");

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, with_vectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense eigensolver failed to converge");

    EigResult result;
    result.values = solver.eigenvalues();
    if (with_vectors) {
        result.vectors = solver.eigenvectors();
        // Column norms of M bound ||M||_2 from below, so this check is
        // stricter than the advertised residual contract.
        double norm_bound = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            norm_bound = std::max(norm_bound, m.col(j).norm());
        norm_bound = std::max(norm_bound, 1e-300);
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double residual =
                (m * result.vectors.col(j) - result.values[j] * result.vectors.col(j)).norm();
            result.max_residual = std::max(result.max_residual, residual);
            if (residual > kEigResidualTol * norm_bound)
                throw std::runtime_error("eigenpair residual exceeds the oracle guarantee");
        }
    }
    result.spectrum = cluster_eigenvalues(result.values, cluster_tol, Provenance::observed);
    return result;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
    out << "re,im,multiplicity,provenance\n";
    for (const auto& line : spectrum.lines)
        out << format_double(line.value.real()) << ',' << format_double(line.value.imag())
            << ',' << line.multiplicity << ',' << to_string(line.provenance) << '\n';
}

void write_spectrum_csv_file(const std::string& path, const Spectrum& spectrum) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_spectrum_csv(out, spectrum);
}

Spectrum read_spectrum_csv(std::istream& in) {
    Spectrum spectrum;
    std::string line;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        std::istringstream fields(line);
        std::string re_s, im_s, mult_s, prov_s;
        if (!std::getline(fields, re_s, ',') || !std::getline(fields, im_s, ',') ||
            !std::getline(fields, mult_s, ',') || !std::getline(fields, prov_s))
            throw std::invalid_argument("malformed spectrum CSV row: " + line);
        spectrum.lines.push_back({Complex(std::stod(re_s), std::stod(im_s)),
                                  std::stoi(mult_s), provenance_from_string(prov_s)});
    }
    return spectrum;
}

}  // namespace qwalk
