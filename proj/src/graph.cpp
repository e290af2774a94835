#include "qwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

// Unbiased bounded draw from a raw 64-bit generator.  Kept free of
// std::uniform_int_distribution so that seeded graphs are identical across
// standard-library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return draw % n;
}

bool is_connected(int n, const std::vector<std::vector<int>>& adjacency) {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adjacency[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

bool two_colorable(int n, const std::vector<std::vector<int>>& adjacency) {
    std::vector<int> color(n, -1);
    std::deque<int> queue{0};
    color[0] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adjacency[u]) {
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

// Shortest cycle length by BFS from every vertex.  Each BFS charges a
// candidate cycle when it meets an already-visited vertex along a fresh
// edge; the minimum over all start vertices is the girth.  O(|V||E|).
int girth_by_bfs(int n, const Graph& g) {
    int best = kGirthInfinite;
    std::vector<int> dist(n);
    std::vector<int> via_edge(n);
    for (int start = 0; start < n; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(via_edge.begin(), via_edge.end(), -1);
        std::deque<int> queue{start};
        dist[start] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int arc : g.out_arcs(u)) {
                const int edge = arc / 2;
                if (edge == via_edge[u]) continue;
                const int v = g.arc_target(arc);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    via_edge[v] = edge;
                    queue.push_back(v);
                } else {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list,
             GraphOptions options)
    : num_vertices_(num_vertices), edges_(std::move(edge_list)) {
    if (num_vertices_ <= 0)
        throw std::invalid_argument("graph needs at least one vertex");

    std::set<std::pair<int, int>> seen;
    bool has_parallel = false;
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        const auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            if (!options.allow_parallel_edges)
                throw std::invalid_argument("duplicate edge " + std::to_string(key.first) +
                                            "-" + std::to_string(key.second));
            has_parallel = true;
        }
    }

    const int m = num_edges();
    arc_origin_.resize(2 * m);
    arc_target_.resize(2 * m);
    in_arcs_.assign(num_vertices_, {});
    out_arcs_.assign(num_vertices_, {});
    for (int k = 0; k < m; ++k) {
        const auto& [u, v] = edges_[k];
        arc_origin_[2 * k] = u;
        arc_target_[2 * k] = v;
        arc_origin_[2 * k + 1] = v;
        arc_target_[2 * k + 1] = u;
    }
    for (int a = 0; a < 2 * m; ++a) {
        out_arcs_[arc_origin_[a]].push_back(a);
        in_arcs_[arc_target_[a]].push_back(a);
    }

    std::vector<std::vector<int>> adjacency(num_vertices_);
    for (const auto& [u, v] : edges_) {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    if (!is_connected(num_vertices_, adjacency))
        throw std::invalid_argument("graph is not connected");

    profile_.cycle_rank = m - num_vertices_ + 1;
    profile_.is_tree = profile_.cycle_rank == 0;
    profile_.is_bipartite = two_colorable(num_vertices_, adjacency);
    profile_.girth = has_parallel ? 2
                     : profile_.is_tree ? kGirthInfinite
                                        : girth_by_bfs(num_vertices_, *this);
    profile_.is_regular = true;
    for (int u = 0; u < num_vertices_; ++u)
        if (degree(u) != degree(0)) {
            profile_.is_regular = false;
            break;
        }
    profile_.degree = profile_.is_regular ? degree(0) : 0;
}

Graph parse_graph(const std::string& text, GraphOptions options) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n <= 0)
                throw std::invalid_argument("expected a positive vertex count on line " +
                                            std::to_string(line_no));
            continue;
        }
        int u = 0, v = 0;
        if (!(fields >> u >> v))
            throw std::invalid_argument("expected \"u v\" on line " + std::to_string(line_no));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("empty graph description");
    return Graph(n, std::move(edges), options);
}

Graph load_graph_file(const std::string& path, GraphOptions options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), options);
}

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("infeasible edge count " + std::to_string(m) +
                                    " for " + std::to_string(n) + " vertices");

    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> used;
    for (int i = 1; i < n; ++i) {
        const int u = order[bounded(rng, static_cast<std::uint64_t>(i))];
        const int v = order[i];
        edges.emplace_back(u, v);
        used.insert(std::minmax(u, v));
    }
    while (static_cast<int>(edges.size()) < m) {
        const int u = static_cast<int>(bounded(rng, n));
        const int v = static_cast<int>(bounded(rng, n));
        if (u == v) continue;
        if (!used.insert(std::minmax(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(edges));
}

Graph dodecahedron_graph() {
    // LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2 on a Hamiltonian
    // 20-cycle.
    static constexpr int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> used;
    for (int i = 0; i < 20; ++i) {
        const auto ring = std::minmax(i, (i + 1) % 20);
        if (used.insert(ring).second) edges.emplace_back(ring.first, ring.second);
        const int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
        const auto chord = std::minmax(i, j);
        if (used.insert(chord).second) edges.emplace_back(chord.first, chord.second);
    }
    return Graph(20, std::move(edges));
}

}  // namespace qwalk
