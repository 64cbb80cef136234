#include "mlines/metric.hpp"

#include <string>

namespace mlines {

namespace {

void validate_flat(int n, const std::vector<int>& d) {
    auto at = [&](int u, int v) { return d[std::size_t(u) * n + v]; };
    for (int u = 0; u < n; ++u) {
        if (at(u, u) != 0)
            throw ParseError("bad_diagonal",
                             "d[" + std::to_string(u) + "][" + std::to_string(u) + "] = " +
                                 std::to_string(at(u, u)) + ", expected 0");
        for (int v = 0; v < n; ++v) {
            if (at(u, v) != at(v, u))
                throw ParseError("not_symmetric", "d[" + std::to_string(u) + "][" +
                                                      std::to_string(v) + "] != d[" +
                                                      std::to_string(v) + "][" +
                                                      std::to_string(u) + "]");
            if (u != v && at(u, v) <= 0)
                throw ParseError("not_positive", "d[" + std::to_string(u) + "][" +
                                                     std::to_string(v) +
                                                     "] must be positive off the diagonal");
        }
    }
    // first violating triple (u,v,w): d(u,v) > d(u,w) + d(w,v)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (at(u, v) > at(u, w) + at(w, v))
                    throw ParseError("triangle_violation",
                                     "triangle inequality fails at (" + std::to_string(u) +
                                         "," + std::to_string(v) + "," + std::to_string(w) +
                                         "): " + std::to_string(at(u, v)) + " > " +
                                         std::to_string(at(u, w)) + " + " +
                                         std::to_string(at(w, v)));
            }
}

}  // namespace

MetricSpace MetricSpace::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = int(rows.size());
    if (n < 1) throw ParseError("not_square", "empty distance matrix");
    std::vector<int> flat;
    flat.reserve(std::size_t(n) * n);
    for (const auto& row : rows) {
        if (int(row.size()) != n)
            throw ParseError("not_square", "matrix has " + std::to_string(n) + " rows but a row of " +
                                               std::to_string(row.size()) + " entries");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    validate_flat(n, flat);
    return MetricSpace(n, std::move(flat));
}

MetricSpace MetricSpace::unchecked(int n, std::vector<int> flat) {
    return MetricSpace(n, std::move(flat));
}

void validate_metric(const MetricSpace& m) {
    validate_flat(m.points(), m.flat());
}

MetricSpace graph_metric(const Graph& g) {
    const int n = g.size();
    std::vector<int> flat(std::size_t(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        auto row = shortest_path_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (row[v] == kUnreachable)
                throw DisconnectedGraph("no path between " + std::to_string(s) + " and " +
                                        std::to_string(v));
            flat[std::size_t(s) * n + v] = row[v];
        }
    }
    return MetricSpace::unchecked(n, std::move(flat));
}

}  // namespace mlines
