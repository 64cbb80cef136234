#include "mlines/chordal.hpp"

#include <algorithm>
#include <string>

#include "mlines/rng.hpp"

namespace mlines {

EliminationOrder mcs_order(const Graph& g) {
    const int n = g.size();
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit.push_back(best);
        const VertexSet& nb = g.neighbours(best);
        for (int v = nb.first(); v >= 0; v = nb.next(v))
            if (!visited[v]) ++weight[v];
    }
    EliminationOrder o;
    o.order.assign(visit.rbegin(), visit.rend());
    return o;
}

namespace {

void check_permutation(const Graph& g, const EliminationOrder& o) {
    const int n = g.size();
    if (int(o.order.size()) != n)
        throw InvalidArgument("elimination order has " + std::to_string(o.order.size()) +
                              " entries for a graph on " + std::to_string(n) + " vertices");
    std::vector<char> seen(n, 0);
    for (int v : o.order) {
        if (v < 0 || v >= n || seen[v])
            throw InvalidArgument("elimination order is not a permutation of 0.." +
                                  std::to_string(n - 1));
        seen[v] = 1;
    }
}

// Position of the first vertex whose later-ordered neighbourhood is not a
// clique, together with a non-adjacent pair inside it; -1 when none.
struct PeoFailure {
    int position = -1;
    int vertex = -1;
    int a = -1, b = -1;
};

PeoFailure find_peo_failure(const Graph& g, const EliminationOrder& o) {
    const int n = g.size();
    VertexSet later(n);
    later.fill();
    for (int i = 0; i < n; ++i) {
        const int v = o.order[i];
        later.reset(v);
        VertexSet nb = g.neighbours(v);
        nb.intersect_with(later);
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            VertexSet rest = nb;
            rest.reset(u);
            rest.subtract(g.neighbours(u));
            int w = rest.first();
            if (w >= 0) return {i, v, std::min(u, w), std::max(u, w)};
        }
    }
    return {};
}

// Shortest a-b path whose interior avoids N[v]; together with v this is
// an induced cycle of length >= 4. Returns empty when a and b are not
// connected outside N[v].
std::vector<int> cycle_through(const Graph& g, int v, int a, int b) {
    const int n = g.size();
    VertexSet allowed(n);
    allowed.fill();
    allowed.subtract(g.neighbours(v));
    allowed.reset(v);
    allowed.set(a);
    allowed.set(b);

    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[a] = 1;
    std::vector<int> frontier{a}, next;
    bool reached = false;
    while (!frontier.empty() && !reached) {
        next.clear();
        for (int u : frontier) {
            VertexSet nb = g.neighbours(u);
            nb.intersect_with(allowed);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = u;
                if (w == b) {
                    reached = true;
                    break;
                }
                next.push_back(w);
            }
            if (reached) break;
        }
        frontier.swap(next);
    }
    if (!reached) return {};
    std::vector<int> path;
    for (int u = b; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());  // a .. b
    std::vector<int> cycle{v};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

std::vector<int> extract_refutation(const Graph& g, const PeoFailure& fail) {
    auto cycle = cycle_through(g, fail.vertex, fail.a, fail.b);
    if (!cycle.empty()) return cycle;
    // The failure triple did not close a cycle; some vertex of the graph
    // still lies on an induced cycle with two of its neighbours, so scan
    // for one.
    for (int v = 0; v < g.size(); ++v) {
        const VertexSet& nb = g.neighbours(v);
        for (int a = nb.first(); a >= 0; a = nb.next(a))
            for (int b = nb.next(a); b >= 0; b = nb.next(b)) {
                if (g.adjacent(a, b)) continue;
                cycle = cycle_through(g, v, a, b);
                if (!cycle.empty()) return cycle;
            }
    }
    throw Error("internal", "PEO check failed but no induced cycle was found");
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& o) {
    check_permutation(g, o);
    return find_peo_failure(g, o).position == -1;
}

ChordalityResult is_chordal(const Graph& g) {
    EliminationOrder o = mcs_order(g);
    PeoFailure fail = find_peo_failure(g, o);
    if (fail.position == -1) return {true, std::move(o), std::nullopt};
    return {false, std::nullopt, extract_refutation(g, fail)};
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int k = int(cycle.size());
    if (k < 4) return false;
    std::vector<char> seen(g.size(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.size() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

Graph random_chordal(int n, int k_max, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("random_chordal needs n >= 1");
    if (k_max < 1) throw InvalidArgument("random_chordal needs k_max >= 1");
    SplitMix64 rng(seed);
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        // target clique size, anchor vertex, then greedy uniform extension
        // inside the anchor's neighbourhood
        int limit = std::min(k_max, i);
        int k = 1 + int(rng.below(std::uint64_t(limit)));
        int v = int(rng.below(std::uint64_t(i)));
        VertexSet clique(n);
        clique.set(v);
        VertexSet candidates = g.neighbours(v);
        int size = 1;
        while (size < k && !candidates.empty()) {
            int u = candidates.select(int(rng.below(std::uint64_t(candidates.count()))));
            clique.set(u);
            ++size;
            candidates.intersect_with(g.neighbours(u));  // u drops out: no self-loops
        }
        for (int u = clique.first(); u >= 0; u = clique.next(u)) g.add_edge(i, u);
    }
    return g;
}

}  // namespace mlines
