#ifndef MLINES_GRAPH_HPP
#define MLINES_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mlines/errors.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

/// Simple undirected graph on vertices 0..n-1, stored as one VertexSet
/// row per vertex. Rows stay symmetric and loop-free by construction.
class Graph {
public:
    explicit Graph(int n);

    int size() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// Drops every edge but keeps the allocation; used by the exhaustive
    /// enumerators to avoid reallocating per instance.
    void remove_all_edges();

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v, const char* what) const;

    int n_;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Marker for vertices a BFS could not reach.
inline constexpr int kUnreachable = -1;

/// Breadth-first distances from s; entries of other components are
/// kUnreachable.
std::vector<int> shortest_path_distances(const Graph& g, int s);

bool is_connected(const Graph& g);

struct Bipartition {
    VertexSet side0;
    VertexSet side1;
};

/// A 2-colouring when one exists (components coloured independently,
/// smallest vertex of each component on side0), otherwise nullopt.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Vertices whose neighbourhood induces a clique. Empty and singleton
/// neighbourhoods qualify.
VertexSet simplicial_vertices(const Graph& g);

/// True iff removing x puts s and y in different components.
/// x, s, y must be pairwise distinct.
bool separates(const Graph& g, int x, int s, int y);

}  // namespace mlines

#endif
