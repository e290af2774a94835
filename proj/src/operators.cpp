#include "qwalk/operators.hpp"

#include <stdexcept>

namespace qwalk {

namespace {

void check_arc_cap(const Graph& g) {
    if (g.num_arcs() > kDenseArcCap)
        throw std::invalid_argument("graph has " + std::to_string(g.num_arcs()) +
                                    " arcs; dense operator paths are capped at " +
                                    std::to_string(kDenseArcCap));
}

}  // namespace

ComplexMatrix assemble_d(const Graph& g, const WeightScheme& ws) {
    check_arc_cap(g);
    ComplexMatrix d = ComplexMatrix::Zero(g.num_vertices(), g.num_arcs());
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int arc : g.in_arcs(u))
            d(u, arc) = std::conj(ws.coin_weight[Graph::arc_inverse(arc)]);
    return d;
}

ComplexMatrix assemble_d_star(const Graph& g, const WeightScheme& ws) {
    check_arc_cap(g);
    ComplexMatrix d_star = ComplexMatrix::Zero(g.num_arcs(), g.num_vertices());
    for (int a = 0; a < g.num_arcs(); ++a) {
        const int u = g.arc_target(a);
        d_star(a, u) = ws.vertex_measure[u] * ws.coin_weight[Graph::arc_inverse(a)] /
                       ws.arc_measure[a];
    }
    return d_star;
}

ComplexMatrix assemble_flip(const Graph& g) {
    check_arc_cap(g);
    ComplexMatrix s = ComplexMatrix::Zero(g.num_arcs(), g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a) s(a, Graph::arc_inverse(a)) = 1.0;
    return s;
}

ComplexMatrix assemble_walk(const Graph& g, const WeightScheme& ws) {
    validate_scheme(g, ws);
    const ComplexMatrix d = assemble_d(g, ws);
    const ComplexMatrix d_star = assemble_d_star(g, ws);
    ComplexMatrix coin = ws.c * (d_star * d);
    coin.diagonal().array() -= 1.0;
    // Left-multiplying by S permutes rows: row e of W is row inv(e) of the coin.
    ComplexMatrix w(g.num_arcs(), g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a) w.row(a) = coin.row(Graph::arc_inverse(a));
    return w;
}

ComplexMatrix discriminant(const Graph& g, const WeightScheme& ws) {
    const ComplexMatrix d = assemble_d(g, ws);
    const ComplexMatrix d_star = assemble_d_star(g, ws);
    ComplexMatrix flipped(g.num_arcs(), g.num_vertices());
    for (int a = 0; a < g.num_arcs(); ++a)
        flipped.row(a) = d_star.row(Graph::arc_inverse(a));
    return d * flipped;
}

ComplexMatrix positive_support(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("positive support requires a square matrix");
    ComplexMatrix support = ComplexMatrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j).real() > tol) support(i, j) = 1.0;
    return support;
}

IntMatrix positive_part(const IntMatrix& m) {
    IntMatrix support = IntMatrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) > 0) support(i, j) = 1;
    return support;
}

Complex inner_vertex(const ComplexVector& f1, const ComplexVector& f2,
                     const RealVector& m_v) {
    return (f1.conjugate().array() * f2.array() * m_v.array().cast<Complex>()).sum();
}

Complex inner_arc(const ComplexVector& p1, const ComplexVector& p2,
                  const RealVector& m_a) {
    return (p1.conjugate().array() * p2.array() * m_a.array().cast<Complex>()).sum();
}

double weighted_norm(const ComplexVector& psi, const RealVector& m_a) {
    return std::sqrt((psi.array().abs2() * m_a.array()).sum());
}

}  // namespace qwalk
