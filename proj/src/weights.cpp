#include "qwalk/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

RealVector c_prime_per_vertex(const Graph& g, const WeightScheme& ws) {
    RealVector values(g.num_vertices());
    for (int u = 0; u < g.num_vertices(); ++u) {
        double sum = 0.0;
        for (int arc : g.in_arcs(u))
            sum += ws.vertex_measure[u] * std::norm(ws.coin_weight[Graph::arc_inverse(arc)]) /
                   ws.arc_measure[arc];
        values[u] = sum;
    }
    return values;
}

Complex compute_c_prime(const Graph& g, const WeightScheme& ws) {
    const RealVector values = c_prime_per_vertex(g, ws);
    const double mean = values.mean();
    const double scale = std::max(1.0, std::abs(mean));
    for (int u = 0; u < g.num_vertices(); ++u)
        if (std::abs(values[u] - mean) > kCPrimeTol * scale)
            throw std::invalid_argument(
                "weight scheme rejected: c' is not constant across vertices (" +
                std::to_string(values[u]) + " at vertex " + std::to_string(u) +
                " vs mean " + std::to_string(mean) + ")");
    return Complex(mean, 0.0);
}

void validate_scheme(const Graph& g, const WeightScheme& ws) {
    if (ws.vertex_measure.size() != g.num_vertices())
        throw std::invalid_argument("vertex measure has wrong size");
    if (ws.arc_measure.size() != g.num_arcs() || ws.coin_weight.size() != g.num_arcs())
        throw std::invalid_argument("arc measure or coin weight has wrong size");
    for (int u = 0; u < g.num_vertices(); ++u)
        if (!(ws.vertex_measure[u] > 0.0) || !std::isfinite(ws.vertex_measure[u]))
            throw std::invalid_argument("vertex measure must be positive and finite");
    for (int a = 0; a < g.num_arcs(); ++a) {
        if (!(ws.arc_measure[a] > 0.0) || !std::isfinite(ws.arc_measure[a]))
            throw std::invalid_argument("arc measure must be positive and finite");
        if (!std::isfinite(ws.coin_weight[a].real()) || !std::isfinite(ws.coin_weight[a].imag()))
            throw std::invalid_argument("coin weight must be finite");
    }
    const Complex c_prime = compute_c_prime(g, ws);
    if (std::abs(ws.c * c_prime - 1.0) <= 1e-10)
        throw std::invalid_argument("weight scheme rejected: c c' = 1");
}

double dd_star_identity_deviation(const Graph& g, const WeightScheme& ws) {
    const RealVector values = c_prime_per_vertex(g, ws);
    const double mean = values.mean();
    return (values.array() - mean).abs().maxCoeff();
}

WeightScheme grover_scheme(const Graph& g) {
    WeightScheme ws;
    ws.vertex_measure = RealVector::Ones(g.num_vertices());
    ws.arc_measure = RealVector::Ones(g.num_arcs());
    ws.coin_weight.resize(g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a)
        ws.coin_weight[a] = 1.0 / std::sqrt(static_cast<double>(g.degree(g.arc_origin(a))));
    ws.c = 2.0;
    return ws;
}

WeightScheme support_scheme(const Graph& g) {
    WeightScheme ws;
    ws.vertex_measure = RealVector::Ones(g.num_vertices());
    ws.arc_measure = RealVector::Ones(g.num_arcs());
    ws.coin_weight = ComplexVector::Ones(g.num_arcs());
    ws.c = 1.0;
    validate_scheme(g, ws);  // constant c' forces a regular graph here
    return ws;
}

WeightScheme setting1_scheme(const Graph& g, const ComplexVector& w1) {
    if (w1.size() != g.num_arcs())
        throw std::invalid_argument("setting-1 weights must have one entry per arc");
    for (int u = 0; u < g.num_vertices(); ++u) {
        double sum = 0.0;
        for (int arc : g.out_arcs(u)) sum += std::norm(w1[arc]);
        if (std::abs(sum - 1.0) > 1e-10)
            throw std::invalid_argument(
                "setting-1 normalization violated at vertex " + std::to_string(u) +
                ": sum of |w|^2 over outgoing arcs is " + std::to_string(sum));
    }
    WeightScheme ws;
    ws.vertex_measure = RealVector::Ones(g.num_vertices());
    ws.arc_measure = RealVector::Ones(g.num_arcs());
    ws.coin_weight = w1;
    ws.c = 2.0;
    return ws;
}

WeightScheme setting2_scheme(const Graph& g, const RealVector& w2, const RealVector& m_v) {
    if (w2.size() != g.num_arcs())
        throw std::invalid_argument("setting-2 weights must have one entry per arc");
    if (m_v.size() != g.num_vertices())
        throw std::invalid_argument("setting-2 vertex measure must have one entry per vertex");
    for (int a = 0; a < g.num_arcs(); ++a)
        if (!(w2[a] > 0.0))
            throw std::invalid_argument("setting-2 weights must be positive");
    for (int u = 0; u < g.num_vertices(); ++u) {
        double sum = 0.0;
        for (int arc : g.out_arcs(u)) sum += w2[arc];
        if (std::abs(sum - 1.0) > 1e-10)
            throw std::invalid_argument(
                "setting-2 row sum violated at vertex " + std::to_string(u) +
                ": sum of w over outgoing arcs is " + std::to_string(sum));
    }
    WeightScheme ws;
    ws.vertex_measure = m_v;
    ws.arc_measure.resize(g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a) {
        const double from_origin = m_v[g.arc_origin(a)] * w2[a];
        const double from_target = m_v[g.arc_target(a)] * w2[Graph::arc_inverse(a)];
        if (std::abs(from_origin - from_target) >
            1e-10 * std::max(1.0, std::abs(from_origin)))
            throw std::invalid_argument(
                "extended detailed balance violated on arc " + std::to_string(a) +
                ": m_V(o)w(e) = " + std::to_string(from_origin) +
                " but m_V(t)w(inv e) = " + std::to_string(from_target));
        ws.arc_measure[a] = from_origin;
    }
    ws.coin_weight = w2.cast<Complex>();
    ws.c = 2.0;
    return ws;
}

}  // namespace qwalk
