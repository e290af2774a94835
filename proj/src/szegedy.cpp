#include "qwalk/szegedy.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace qwalk {

bool WalkState::is_unit(double tol) const {
    return std::abs(norm() * norm() - 1.0) <= tol;
}

SzegedyWalk build_setting1(const Graph& g, const ComplexVector& w1) {
    SzegedyWalk walk;
    walk.scheme = setting1_scheme(g, w1);
    walk.evolution = assemble_walk(g, walk.scheme);
    return walk;
}

SzegedyWalk build_setting2(const Graph& g, const RealVector& w2, const RealVector& m_v) {
    SzegedyWalk walk;
    walk.scheme = setting2_scheme(g, w2, m_v);
    walk.evolution = assemble_walk(g, walk.scheme);
    return walk;
}

ComplexVector uniform_setting1_weights(const Graph& g) {
    ComplexVector w(g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a)
        w[a] = 1.0 / std::sqrt(static_cast<double>(g.degree(g.arc_origin(a))));
    return w;
}

RealVector uniform_setting2_weights(const Graph& g) {
    RealVector w(g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a)
        w[a] = 1.0 / static_cast<double>(g.degree(g.arc_origin(a)));
    return w;
}

RealVector degree_vertex_measure(const Graph& g) {
    RealVector m(g.num_vertices());
    for (int u = 0; u < g.num_vertices(); ++u) m[u] = g.degree(u);
    return m;
}

RealVector solve_detailed_balance(const Graph& g, const RealVector& w2) {
    if (w2.size() != g.num_arcs())
        throw std::invalid_argument("weights must have one entry per arc");
    for (int a = 0; a < g.num_arcs(); ++a)
        if (!(w2[a] > 0.0)) throw std::invalid_argument("weights must be positive");

    RealVector m_v = RealVector::Zero(g.num_vertices());
    m_v[0] = 1.0;
    std::vector<char> seen(g.num_vertices(), 0);
    seen[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int arc : g.out_arcs(u)) {
            const int v = g.arc_target(arc);
            if (seen[v]) continue;
            seen[v] = 1;
            m_v[v] = m_v[u] * w2[arc] / w2[Graph::arc_inverse(arc)];
            queue.push_back(v);
        }
    }
    // Every edge (tree or not) must satisfy the balance relation.
    for (int k = 0; k < g.num_edges(); ++k) {
        const int a = 2 * k;
        const double lhs = m_v[g.arc_origin(a)] * w2[a];
        const double rhs = m_v[g.arc_target(a)] * w2[a + 1];
        if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(lhs)))
            throw std::invalid_argument(
                "weights are not reversible: no vertex measure satisfies detailed "
                "balance on edge " + std::to_string(k));
    }
    return m_v;
}

WalkState delta_state(const Graph& g, const WeightScheme& ws, int arc) {
    if (arc < 0 || arc >= g.num_arcs())
        throw std::invalid_argument("arc index out of range");
    WalkState state;
    state.amplitudes = ComplexVector::Zero(g.num_arcs());
    state.amplitudes[arc] = 1.0 / std::sqrt(ws.arc_measure[arc]);
    state.arc_measure = ws.arc_measure;
    return state;
}

std::vector<WalkState> evolve(const ComplexMatrix& evolution, const WalkState& initial,
                              int steps) {
    if (evolution.rows() != evolution.cols() ||
        evolution.rows() != initial.amplitudes.size())
        throw std::invalid_argument("evolution and state dimensions do not match");
    if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
    std::vector<WalkState> trajectory;
    trajectory.reserve(steps + 1);
    trajectory.push_back(initial);
    for (int n = 1; n <= steps; ++n) {
        WalkState next;
        next.amplitudes = evolution * trajectory.back().amplitudes;
        next.arc_measure = initial.arc_measure;
        trajectory.push_back(std::move(next));
    }
    return trajectory;
}

ArcDistribution arc_distribution(const WalkState& state) {
    ArcDistribution dist;
    dist.probability =
        (state.amplitudes.array().abs2() * state.arc_measure.array()).matrix();
    dist.total = dist.probability.sum();
    dist.from_unit_state = state.is_unit();
    return dist;
}

VertexDistribution vertex_distribution(const Graph& g, const WalkState& state) {
    const ArcDistribution arcs = arc_distribution(state);
    VertexDistribution dist;
    dist.probability = RealVector::Zero(g.num_vertices());
    for (int a = 0; a < g.num_arcs(); ++a)
        dist.probability[g.arc_target(a)] += arcs.probability[a];
    dist.total = dist.probability.sum();
    dist.from_unit_state = arcs.from_unit_state;
    return dist;
}

ConjugationReport verify_conjugation(const Graph& g, const RealVector& w1, int steps,
                                     const ComplexVector& psi0) {
    for (int a = 0; a < g.num_arcs(); ++a)
        if (!(w1[a] > 0.0))
            throw std::invalid_argument(
                "conjugation check requires real positive setting-1 weights");
    const SzegedyWalk walk1 = build_setting1(g, w1.cast<Complex>());
    const RealVector w2 = w1.array().square();
    const RealVector m_v = solve_detailed_balance(g, w2);
    const SzegedyWalk walk2 = build_setting2(g, w2, m_v);

    const RealVector& m_a = walk2.scheme.arc_measure;
    const RealVector sqrt_m = m_a.array().sqrt();

    ConjugationReport report;
    report.steps = steps;
    report.vertex_measure = m_v;

    ComplexMatrix power1 = ComplexMatrix::Identity(g.num_arcs(), g.num_arcs());
    ComplexMatrix power2 = power1;
    ComplexVector state2 = psi0;                                      // U2 trajectory
    ComplexVector state1 = (sqrt_m.array() * psi0.array()).matrix();  // U1 from D^{1/2} psi0
    for (int n = 1; n <= steps; ++n) {
        power1 = walk1.evolution * power1;
        power2 = walk2.evolution * power2;
        ComplexMatrix conjugated = power1;
        for (int i = 0; i < g.num_arcs(); ++i)
            for (int j = 0; j < g.num_arcs(); ++j)
                conjugated(i, j) *= sqrt_m[j] / sqrt_m[i];
        report.max_operator_error =
            std::max(report.max_operator_error,
                     (conjugated - power2).cwiseAbs().maxCoeff());

        state1 = walk1.evolution * state1;
        state2 = walk2.evolution * state2;
        const RealVector mu2 = (state2.array().abs2() * m_a.array()).matrix();
        const RealVector mu1 = state1.array().abs2().matrix();
        report.max_distribution_error =
            std::max(report.max_distribution_error, (mu2 - mu1).cwiseAbs().maxCoeff());
    }
    report.operators_match = report.max_operator_error <= 1e-9;
    report.distributions_match = report.max_distribution_error <= 1e-10;
    return report;
}

}  // namespace qwalk
