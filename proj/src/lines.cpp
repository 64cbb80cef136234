#include "mlines/lines.hpp"

#include <map>
#include <string>
#include <thread>

namespace mlines {

namespace {

void check_point(const MetricSpace& m, int p) {
    if (p < 0 || p >= m.points())
        throw IndexOutOfRange("point " + std::to_string(p) + " out of range for n=" +
                              std::to_string(m.points()));
}

VertexSet line_members(const MetricSpace& m, int u, int v) {
    const int n = m.points();
    VertexSet members(n);
    members.set(u);
    members.set(v);
    const int duv = m.dist(u, v);
    for (int p = 0; p < n; ++p) {
        if (p == u || p == v) continue;
        const int dpu = m.dist(p, u);
        const int dpv = m.dist(p, v);
        // [puv], [upv] or [uvp]
        if (dpu + duv == dpv || dpu + dpv == duv || duv + dpv == dpu) members.set(p);
    }
    return members;
}

}  // namespace

bool between(const MetricSpace& m, int a, int b, int c) {
    check_point(m, a);
    check_point(m, b);
    check_point(m, c);
    if (a == b || b == c || a == c) return false;
    return m.dist(a, b) + m.dist(b, c) == m.dist(a, c);
}

Line line(const MetricSpace& m, int u, int v) {
    check_point(m, u);
    check_point(m, v);
    if (u == v) throw EqualPoints("line() needs two distinct points, got " + std::to_string(u) +
                                  " twice");
    return {line_members(m, u, v), {std::min(u, v), std::max(u, v)}};
}

LineSystem enumerate_lines(const MetricSpace& m, int jobs) {
    const int n = m.points();
    if (n < 2) throw TooFewPoints("line enumeration needs n >= 2, got " + std::to_string(n));

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::vector<VertexSet> members(pairs.size());
    if (jobs <= 1 || pairs.size() < 64) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            members[i] = line_members(m, pairs[i].first, pairs[i].second);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < pairs.size(); i += jobs)
                    members[i] = line_members(m, pairs[i].first, pairs[i].second);
            });
        for (auto& w : workers) w.join();
    }

    // group pairs by member set; map order is the canonical line order
    std::map<VertexSet, std::vector<std::pair<int, int>>> groups;
    for (std::size_t i = 0; i < pairs.size(); ++i) groups[members[i]].push_back(pairs[i]);

    LineSystem sys;
    sys.points = n;
    sys.pair_index.assign(std::size_t(n) * n, -1);
    sys.lines.reserve(groups.size());
    for (auto& [set, defining] : groups) {
        const int idx = int(sys.lines.size());
        for (auto [u, v] : defining) {
            sys.pair_index[std::size_t(u) * n + v] = idx;
            sys.pair_index[std::size_t(v) * n + u] = idx;
        }
        if (set.count() == n) sys.universal = idx;
        sys.lines.push_back({set, std::move(defining)});
    }
    return sys;
}

std::optional<Line> universal_line(const MetricSpace& m) {
    const int n = m.points();
    if (n < 2) throw TooFewPoints("universal_line needs n >= 2, got " + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet members = line_members(m, u, v);
            if (members.count() == n) return Line{std::move(members), {u, v}};
        }
    return std::nullopt;
}

DbeReport dbe_check(const MetricSpace& m) {
    LineSystem sys = enumerate_lines(m);
    DbeReport report;
    report.n = m.points();
    report.num_lines = int(sys.lines.size());
    report.has_universal = sys.universal.has_value();
    report.dbe_holds = report.num_lines >= report.n || report.has_universal;
    if (report.num_lines >= report.n) {
        report.line_witness.assign(sys.lines.begin(), sys.lines.begin() + report.n);
    } else if (report.has_universal) {
        report.universal_witness = sys.lines[*sys.universal];
    }
    return report;
}

}  // namespace mlines
