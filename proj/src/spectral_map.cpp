#include "qwalk/spectral_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/QR>

#include "qwalk/szegedy.hpp"

namespace qwalk {

Complex phi(const SpectralMapParams& p, Complex x) {
    if (std::abs(x) == 0.0) throw std::invalid_argument("phi is undefined at x = 0");
    return (x + (p.c * p.c_prime - 1.0) / x) / p.c;
}

std::pair<Complex, Complex> phi_inverse(const SpectralMapParams& p, Complex nu) {
    const Complex b = p.c * nu;
    const Complex det = b * b - 4.0 * (p.c * p.c_prime - 1.0);
    const Complex root = std::sqrt(det);
    Complex lambda1 = (b + root) / 2.0;
    Complex lambda2 = (b - root) / 2.0;
    const bool swap = lambda1.imag() < lambda2.imag() ||
                      (lambda1.imag() == lambda2.imag() && lambda1.real() < lambda2.real());
    if (swap) std::swap(lambda1, lambda2);
    return {lambda1, lambda2};
}

std::pair<int, int> birth_multiplicities(const Graph& g, const WeightScheme& ws) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    // d restricted to the antisymmetric (chi_k = delta_a - delta_{inv a})
    // and symmetric (delta_a + delta_{inv a}) edge bases.
    ComplexMatrix anti = ComplexMatrix::Zero(n, m);
    ComplexMatrix sym = ComplexMatrix::Zero(n, m);
    for (int k = 0; k < m; ++k) {
        const int a = 2 * k;
        const int b = a + 1;
        const Complex wa = std::conj(ws.coin_weight[b]);  // coefficient at t(a)
        const Complex wb = std::conj(ws.coin_weight[a]);  // coefficient at t(inv a)
        anti(g.arc_target(a), k) += wa;
        anti(g.arc_target(b), k) -= wb;
        sym(g.arc_target(a), k) += wa;
        sym(g.arc_target(b), k) += wb;
    }
    auto rank_of = [](const ComplexMatrix& mat) {
        Eigen::ColPivHouseholderQR<ComplexMatrix> qr(mat);
        qr.setThreshold(1e-8);
        return static_cast<int>(qr.rank());
    };
    return {m - rank_of(anti), m - rank_of(sym)};
}

Spectrum MappedSpectrum::to_spectrum() const {
    Spectrum spectrum;
    for (const auto& entry : inherited)
        spectrum.lines.push_back(
            {global_phase * entry.lambda, entry.multiplicity, Provenance::inherited});
    for (const auto& entry : exceptional)
        spectrum.lines.push_back(
            {global_phase * entry.lambda, entry.multiplicity, Provenance::inherited});
    if (birth_plus > 0)
        spectrum.lines.push_back({global_phase, birth_plus, Provenance::birth_plus});
    if (birth_minus > 0)
        spectrum.lines.push_back({-global_phase, birth_minus, Provenance::birth_minus});
    spectrum.sort_canonical();
    return spectrum;
}

int MappedSpectrum::total_multiplicity() const {
    int total = birth_plus + birth_minus;
    for (const auto& entry : inherited) total += entry.multiplicity;
    for (const auto& entry : exceptional) total += entry.multiplicity;
    return total;
}

MappedSpectrum mapped_spectrum(const Graph& g, const WeightScheme& ws) {
    validate_scheme(g, ws);
    MappedSpectrum result;
    result.c = ws.c;
    result.c_prime = compute_c_prime(g, ws);

    const EigResult disc = eig(discriminant(g, ws));
    result.discriminant_spectrum = disc.spectrum;

    const SpectralMapParams params{result.c, result.c_prime};
    for (const auto& line : disc.spectrum.lines) {
        if (std::abs(line.value - result.c_prime) <= kClusterTol) {
            result.mult_plus_c_prime = line.multiplicity;
            result.exceptional.push_back(
                {params.c * params.c_prime - 1.0, line.multiplicity, line.value});
        } else if (std::abs(line.value + result.c_prime) <= kClusterTol) {
            result.mult_minus_c_prime = line.multiplicity;
            result.exceptional.push_back(
                {-(params.c * params.c_prime - 1.0), line.multiplicity, line.value});
        } else {
            const auto [plus, minus] = phi_inverse(params, line.value);
            result.inherited.push_back({plus, line.multiplicity, line.value});
            result.inherited.push_back({minus, line.multiplicity, line.value});
        }
    }

    std::tie(result.birth_plus, result.birth_minus) = birth_multiplicities(g, ws);
    const int excess = g.num_edges() - g.num_vertices();
    result.formula_birth_plus = std::max(0, excess + result.mult_plus_c_prime);
    result.formula_birth_minus = std::max(0, excess + result.mult_minus_c_prime);
    result.formula_agrees = result.formula_birth_plus == result.birth_plus &&
                            result.formula_birth_minus == result.birth_minus;

    if (result.total_multiplicity() != g.num_arcs())
        throw std::runtime_error(
            "spectral map bookkeeping lost multiplicity: expected " +
            std::to_string(g.num_arcs()) + ", assembled " +
            std::to_string(result.total_multiplicity()));
    return result;
}

std::vector<LiftedVector> lift_eigenvector(const Graph& g, const WeightScheme& ws,
                                           Complex nu, const ComplexVector& f) {
    if (f.size() != g.num_vertices())
        throw std::invalid_argument("eigenvector must live on the vertex space");
    const double f_norm = f.norm();
    if (f_norm == 0.0) throw std::invalid_argument("zero eigenvector supplied");

    const ComplexMatrix disc = discriminant(g, ws);
    if ((disc * f - nu * f).norm() > kLiftResidualTol * f_norm * (1.0 + std::abs(nu)))
        throw std::invalid_argument("supplied f is not a discriminant eigenvector for nu");

    const Complex c_prime = compute_c_prime(g, ws);
    const SpectralMapParams params{ws.c, c_prime};
    const ComplexMatrix d_star = assemble_d_star(g, ws);
    const ComplexMatrix w = assemble_walk(g, ws);
    const ComplexVector base = d_star * f;
    ComplexVector flipped(base.size());
    for (int a = 0; a < g.num_arcs(); ++a) flipped[a] = base[Graph::arc_inverse(a)];

    std::vector<std::pair<Complex, ComplexVector>> candidates;
    if (std::abs(nu - c_prime) <= kClusterTol) {
        candidates.emplace_back(params.c * params.c_prime - 1.0, base);
    } else if (std::abs(nu + c_prime) <= kClusterTol) {
        candidates.emplace_back(-(params.c * params.c_prime - 1.0), base);
    } else {
        const auto [plus, minus] = phi_inverse(params, nu);
        candidates.emplace_back(plus, base - plus * flipped);
        candidates.emplace_back(minus, base - minus * flipped);
    }

    std::vector<LiftedVector> lifts;
    for (auto& [lambda, psi] : candidates) {
        LiftedVector lift;
        lift.lambda = lambda;
        if (psi.norm() < 1e-10 * f_norm) {
            lift.vanished = true;
            lift.psi = psi;
            lifts.push_back(std::move(lift));
            continue;
        }
        lift.residual = (w * psi - lambda * psi).norm() / psi.norm();
        if (lift.residual > kLiftResidualTol)
            throw std::runtime_error("lifted vector failed the eigen-residual check");
        psi /= weighted_norm(psi, ws.arc_measure);
        lift.psi = std::move(psi);
        lifts.push_back(std::move(lift));
    }
    return lifts;
}

ComplexMatrix companion_block(const Graph& g, const WeightScheme& ws) {
    const int n = g.num_vertices();
    const Complex c_prime = compute_c_prime(g, ws);
    ComplexMatrix block = ComplexMatrix::Zero(2 * n, 2 * n);
    block.topRightCorner(n, n) = -ComplexMatrix::Identity(n, n);
    block.bottomLeftCorner(n, n) =
        (ws.c * c_prime - 1.0) * ComplexMatrix::Identity(n, n);
    block.bottomRightCorner(n, n) = ws.c * discriminant(g, ws);
    return block;
}

SzegedySpectrum szegedy_spectrum(const Graph& g, SzegedySetting setting,
                                 const ComplexVector& weights, const RealVector* m_v) {
    SzegedySpectrum result;
    result.setting = setting;
    if (setting == SzegedySetting::one) {
        result.map = mapped_spectrum(g, setting1_scheme(g, weights));
        // Indicator table: +-1 appears iff |E| - |V| + 1_{+-1 in sigma(T)} > 0.
        const int excess = g.num_edges() - g.num_vertices();
        result.predicted_birth_plus = excess + (result.map.mult_plus_c_prime > 0 ? 1 : 0) > 0;
        result.predicted_birth_minus = excess + (result.map.mult_minus_c_prime > 0 ? 1 : 0) > 0;
    } else {
        RealVector w2(weights.size());
        for (Eigen::Index i = 0; i < weights.size(); ++i) {
            if (weights[i].imag() != 0.0)
                throw std::invalid_argument("setting-2 weights must be real");
            w2[i] = weights[i].real();
        }
        const RealVector measure = m_v ? *m_v : solve_detailed_balance(g, w2);
        result.map = mapped_spectrum(g, setting2_scheme(g, w2, measure));
        // Tree / one-cycle / bipartite trichotomy.
        const auto& profile = g.profile();
        if (profile.is_tree) {
            result.predicted_birth_plus = false;
            result.predicted_birth_minus = false;
        } else if (profile.cycle_rank == 1 && !profile.is_bipartite) {
            result.predicted_birth_plus = true;
            result.predicted_birth_minus = false;
        } else {
            result.predicted_birth_plus = true;
            result.predicted_birth_minus = true;
        }
    }
    result.case_table_agrees =
        result.predicted_birth_plus == (result.map.birth_plus > 0) &&
        result.predicted_birth_minus == (result.map.birth_minus > 0);
    return result;
}

}  // namespace qwalk
