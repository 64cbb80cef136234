#ifndef MLINES_LINES_HPP
#define MLINES_LINES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mlines/metric.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

/// The line through u and v: {u,v} plus every p with [puv], [upv] or
/// [uvp]. Lines are compared by member set only; the defining pair is
/// kept for diagnostics.
struct Line {
    VertexSet members;
    std::pair<int, int> defined_by;
};

/// One member set together with every pair that defines it.
struct DistinctLine {
    VertexSet members;
    std::vector<std::pair<int, int>> pairs;
};

/// All distinct lines of a metric space, sorted canonically (member sets
/// compared as binary numbers, bit p = point p). Every unordered pair of
/// distinct points appears in exactly one entry's pair list.
struct LineSystem {
    int points = 0;
    std::vector<DistinctLine> lines;
    std::optional<int> universal;  // index of the line containing all points

    /// Index into lines of the distinct line defined by (u, v).
    int line_index(int u, int v) const { return pair_index[std::size_t(u) * points + v]; }

    std::vector<int> pair_index;  // n*n, filled by enumerate_lines
};

struct DbeReport {
    int n = 0;
    int num_lines = 0;
    bool has_universal = false;
    bool dbe_holds = false;
    // one of the two witnesses, depending on which branch holds
    std::optional<DistinctLine> universal_witness;
    std::vector<DistinctLine> line_witness;
};

/// Metric betweenness [abc]: a, b, c pairwise distinct and
/// d(a,b) + d(b,c) = d(a,c).
bool between(const MetricSpace& m, int a, int b, int c);

/// Throws EqualPoints when u == v, IndexOutOfRange for bad indices.
Line line(const MetricSpace& m, int u, int v);

/// Computes the line of every pair and groups pairs with identical
/// member sets. jobs > 1 splits the per-pair work across threads; the
/// result is identical to the sequential one. Throws TooFewPoints for
/// n < 2.
LineSystem enumerate_lines(const MetricSpace& m, int jobs = 1);

/// First line (in lexicographic pair order) containing every point, if
/// any. Throws TooFewPoints for n < 2.
std::optional<Line> universal_line(const MetricSpace& m);

/// De Bruijn-Erdos check: at least n distinct lines, or a universal
/// line. Throws TooFewPoints for n < 2.
DbeReport dbe_check(const MetricSpace& m);

}  // namespace mlines

#endif
