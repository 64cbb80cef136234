#ifndef MLINES_METRIC_HPP
#define MLINES_METRIC_HPP

#include <vector>

#include "mlines/errors.hpp"
#include "mlines/graph.hpp"

namespace mlines {

/// Finite metric space with integer distances: symmetric n x n matrix,
/// zero diagonal, positive off-diagonal, triangle inequality. Distances
/// are exact integers so betweenness is an equality test, never a
/// tolerance check.
class MetricSpace {
public:
    /// Validates every invariant; throws ParseError naming the first
    /// violation (codes not_square, not_symmetric, bad_diagonal,
    /// not_positive, triangle_violation).
    static MetricSpace from_rows(const std::vector<std::vector<int>>& rows);

    /// Trusted constructor for metrics that hold by construction
    /// (graph metrics, exhaustively generated {1,2}-spaces).
    static MetricSpace unchecked(int n, std::vector<int> flat);

    int points() const { return n_; }

    int dist(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }

    const std::vector<int>& flat() const { return d_; }

    bool operator==(const MetricSpace& o) const { return n_ == o.n_ && d_ == o.d_; }

private:
    MetricSpace(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

    int n_;
    std::vector<int> d_;
};

/// Re-checks every MetricSpace invariant (O(n^3) triples); throws the
/// same ParseError codes as from_rows. Used by tests and the matrix
/// parser.
void validate_metric(const MetricSpace& m);

/// Shortest-path metric of a connected graph.
/// Throws DisconnectedGraph when any pair is unreachable.
MetricSpace graph_metric(const Graph& g);

}  // namespace mlines

#endif
