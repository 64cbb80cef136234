// Independent brute-force oracles for the unit and acceptance suites.
// Deliberately written with none of the library's machinery: plain
// vectors and std::set instead of bitsets, Floyd-Warshall instead of
// BFS, subset scans instead of elimination orders. If an oracle and the
// library agree on a value it is because the mathematics agrees, not
// because they share code.
#ifndef MLINES_TESTS_ORACLES_HPP
#define MLINES_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mlines/graph.hpp"
#include "mlines/metric.hpp"

namespace oracle {

inline std::vector<std::vector<int>> floyd_warshall(const mlines::Graph& g) {
    const int n = g.size();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) d[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// line of (u, v) straight from the definition, no dedup shortcuts
inline std::set<int> line_points(const std::vector<std::vector<int>>& d, int u, int v) {
    std::set<int> members{u, v};
    const int n = int(d.size());
    for (int p = 0; p < n; ++p) {
        if (p == u || p == v) continue;
        const bool puv = d[p][u] + d[u][v] == d[p][v];
        const bool upv = d[u][p] + d[p][v] == d[u][v];
        const bool uvp = d[u][v] + d[v][p] == d[u][p];
        if (puv || upv || uvp) members.insert(p);
    }
    return members;
}

// distinct member sets -> every defining pair, from any distance matrix
inline std::map<std::set<int>, std::vector<std::pair<int, int>>> line_system(
    const std::vector<std::vector<int>>& d) {
    std::map<std::set<int>, std::vector<std::pair<int, int>>> out;
    const int n = int(d.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out[line_points(d, u, v)].emplace_back(u, v);
    return out;
}

inline std::vector<std::vector<int>> matrix_of(const mlines::MetricSpace& m) {
    std::vector<std::vector<int>> d(m.points(), std::vector<int>(m.points()));
    for (int u = 0; u < m.points(); ++u)
        for (int v = 0; v < m.points(); ++v) d[u][v] = m.dist(u, v);
    return d;
}

// no induced cycle of length >= 4: checks every vertex subset
inline bool is_chordal(const mlines::Graph& g) {
    const int n = g.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        if (verts.size() < 4) continue;
        // induced subgraph is a cycle iff every vertex has exactly two
        // neighbours inside and the subset is connected
        bool all_deg2 = true;
        for (int v : verts) {
            int deg = 0;
            for (int u : verts)
                if (u != v && g.adjacent(u, v)) ++deg;
            if (deg != 2) {
                all_deg2 = false;
                break;
            }
        }
        if (!all_deg2) continue;
        std::set<int> seen{verts[0]};
        std::vector<int> stack{verts[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : verts)
                if (u != v && g.adjacent(u, v) && !seen.count(u)) {
                    seen.insert(u);
                    stack.push_back(u);
                }
        }
        if (seen.size() == verts.size()) return false;  // found an induced cycle
    }
    return true;
}

inline std::set<int> simplicial_vertices(const mlines::Graph& g) {
    std::set<int> out;
    for (int v = 0; v < g.size(); ++v) {
        bool clique = true;
        for (int a = 0; a < g.size() && clique; ++a)
            for (int b = a + 1; b < g.size() && clique; ++b)
                if (g.adjacent(v, a) && g.adjacent(v, b) && !g.adjacent(a, b)) clique = false;
        if (clique) out.insert(v);
    }
    return out;
}

inline bool is_induced_cycle(const mlines::Graph& g, const std::vector<int>& c) {
    const int k = int(c.size());
    if (k < 4) return false;
    std::set<int> uniq(c.begin(), c.end());
    if (int(uniq.size()) != k) return false;
    for (int v : c)
        if (v < 0 || v >= g.size()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool want = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != want) return false;
        }
    return true;
}

}  // namespace oracle

#endif
