#include "mlines/graph.hpp"

#include <queue>
#include <string>

namespace mlines {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("graph needs at least one vertex, got " + std::to_string(n));
    adj_.assign(n_, VertexSet(n_));
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw IndexOutOfRange(std::string(what) + " " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "vertex");
    check_vertex(v, "vertex");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

void Graph::remove_all_edges() {
    for (auto& row : adj_) row.clear();
    m_ = 0;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> shortest_path_distances(const Graph& g, int s) {
    if (s < 0 || s >= g.size())
        throw IndexOutOfRange("source " + std::to_string(s) + " out of range");
    std::vector<int> dist(g.size(), kUnreachable);
    dist[s] = 0;
    std::vector<int> frontier{s}, next;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier) {
            const VertexSet& nb = g.neighbours(u);
            for (int v = nb.first(); v >= 0; v = nb.next(v)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = d;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = shortest_path_distances(g, 0);
    for (int d : dist)
        if (d == kUnreachable) return false;
    return true;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.size();
    std::vector<int> colour(n, -1);
    Bipartition parts{VertexSet(n), VertexSet(n)};
    for (int root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::vector<int> frontier{root}, next;
        while (!frontier.empty()) {
            next.clear();
            for (int u : frontier) {
                const VertexSet& nb = g.neighbours(u);
                for (int v = nb.first(); v >= 0; v = nb.next(v)) {
                    if (colour[v] == -1) {
                        colour[v] = 1 - colour[u];
                        next.push_back(v);
                    } else if (colour[v] == colour[u]) {
                        return std::nullopt;
                    }
                }
            }
            frontier.swap(next);
        }
    }
    for (int v = 0; v < n; ++v)
        (colour[v] == 0 ? parts.side0 : parts.side1).set(v);
    return parts;
}

VertexSet simplicial_vertices(const Graph& g) {
    const int n = g.size();
    VertexSet out(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbours(v);
        bool clique = true;
        for (int u = nb.first(); clique && u >= 0; u = nb.next(u)) {
            // every other neighbour of v must be adjacent to u
            VertexSet rest = nb;
            rest.reset(u);
            if (!rest.is_subset_of(g.neighbours(u))) clique = false;
        }
        if (clique) out.set(v);
    }
    return out;
}

bool separates(const Graph& g, int x, int s, int y) {
    if (x == s || x == y || s == y)
        throw InvalidArgument("separates() needs pairwise distinct vertices");
    for (int v : {x, s, y})
        if (v < 0 || v >= g.size())
            throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
    // BFS from s avoiding x
    std::vector<char> seen(g.size(), 0);
    seen[s] = 1;
    seen[x] = 1;
    std::vector<int> frontier{s}, next;
    while (!frontier.empty()) {
        next.clear();
        for (int u : frontier) {
            const VertexSet& nb = g.neighbours(u);
            for (int v = nb.first(); v >= 0; v = nb.next(v)) {
                if (!seen[v]) {
                    if (v == y) return false;
                    seen[v] = 1;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return true;
}

}  // namespace mlines
