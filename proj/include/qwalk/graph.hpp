#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

/// Girth value reported for forests (no cycle exists).
inline constexpr int kGirthInfinite = std::numeric_limits<int>::max();

struct GraphOptions {
    // Parallel edges are rejected unless explicitly permitted; all operator
    // formulas are arc-wise and survive multi-edges, but the girth of a
    // multigraph degenerates to 2.
    bool allow_parallel_edges = false;
};

/// Structural invariants of a connected graph, computed once at construction.
struct GraphProfile {
    bool is_tree = false;
    int cycle_rank = 0;       // |E| - |V| + 1 (first Betti number, connected)
    bool is_bipartite = false;
    int girth = kGirthInfinite;
    bool is_regular = false;
    int degree = 0;           // common degree when regular, 0 otherwise
};

// Finite connected undirected graph with symmetric-arc indexing.
//
// Edge k contributes the arc pair (2k, 2k+1): arc 2k runs u->v as the edge
// was given, arc 2k+1 is its reverse.  The inverse of arc a is therefore
// a ^ 1, a fixed-point-free involution that needs no lookup table.
class Graph {
  public:
    Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list,
          GraphOptions options = {});

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_arcs() const { return 2 * num_edges(); }

    int arc_origin(int arc) const { return arc_origin_[arc]; }
    int arc_target(int arc) const { return arc_target_[arc]; }
    static int arc_inverse(int arc) { return arc ^ 1; }

    /// Arcs e with t(e) = u.
    const std::vector<int>& in_arcs(int u) const { return in_arcs_[u]; }
    /// Arcs e with o(e) = u.
    const std::vector<int>& out_arcs(int u) const { return out_arcs_[u]; }
    int degree(int u) const { return static_cast<int>(out_arcs_[u].size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const GraphProfile& profile() const { return profile_; }

  private:
    int num_vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> arc_origin_;
    std::vector<int> arc_target_;
    std::vector<std::vector<int>> in_arcs_;
    std::vector<std::vector<int>> out_arcs_;
    GraphProfile profile_;
};

// Edge-list text format: first non-comment line "<num_vertices>", then one
// "u v" pair per line.  Lines starting with '#' are comments.
Graph parse_graph(const std::string& text, GraphOptions options = {});
Graph load_graph_file(const std::string& path, GraphOptions options = {});

// Connected graph on n vertices with m edges: a random spanning tree plus
// m-n+1 distinct non-tree edges.  Deterministic for a fixed seed across
// platforms (no use of distribution objects).
Graph random_connected_graph(int n, int m, std::uint64_t seed);

// Named builders used by tests, the verification corpus and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);   // K_{1,leaves}
Graph petersen_graph();
Graph dodecahedron_graph();

}  // namespace qwalk
