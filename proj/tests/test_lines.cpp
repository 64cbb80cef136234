#include <doctest.h>

#include <set>

#include "builders.hpp"
#include "mlines/io.hpp"
#include "mlines/lines.hpp"
#include "oracles.hpp"

using namespace mlines;
using builders::complete;
using builders::cycle;
using builders::path;

namespace {

std::set<int> as_set(const VertexSet& s) {
    auto v = s.to_vector();
    return {v.begin(), v.end()};
}

// impl vs oracle on one metric: same member sets, same defining pairs
void check_against_oracle(const MetricSpace& m) {
    auto sys = enumerate_lines(m);
    auto want = oracle::line_system(oracle::matrix_of(m));
    REQUIRE(sys.lines.size() == want.size());
    for (const auto& dl : sys.lines) {
        auto it = want.find(as_set(dl.members));
        REQUIRE(it != want.end());
        CHECK(dl.pairs == it->second);
    }
}

}  // namespace

TEST_SUITE_BEGIN("metric_lines");

TEST_CASE("betweenness") {
    auto p3 = graph_metric(path(3));
    CHECK(between(p3, 0, 1, 2));
    CHECK(between(p3, 2, 1, 0));
    CHECK_FALSE(between(p3, 0, 0, 2));  // distinctness is part of the relation
    CHECK_FALSE(between(p3, 0, 2, 1));
    CHECK_THROWS_AS(between(p3, 0, 1, 3), IndexOutOfRange);

    // pentagon: [vxy] since 1 + 1 = 2
    auto pent = builders::pentagon_metric();
    CHECK(between(pent, 1, 2, 3));
}

TEST_CASE("pentagon: a line can be a proper subset of another") {
    auto pent = builders::pentagon_metric();
    // points u,v,x,y,z = 0..4
    auto vy = line(pent, 1, 3);
    auto xy = line(pent, 2, 3);
    CHECK(vy.members.to_vector() == std::vector<int>{1, 2, 3});
    CHECK(xy.members.to_vector() == std::vector<int>{1, 2, 3, 4});
    CHECK(vy.members.is_subset_of(xy.members));
    CHECK_FALSE(vy.members == xy.members);

    // the graph metric of C5 is the same space
    CHECK(graph_metric(cycle(5)) == pent);
}

TEST_CASE("line endpoints and errors") {
    auto k3 = graph_metric(complete(3));
    auto l = line(k3, 0, 2);
    CHECK(l.members.to_vector() == std::vector<int>{0, 2});
    CHECK(l.defined_by == std::pair<int, int>{0, 2});
    CHECK_THROWS_AS(line(k3, 1, 1), EqualPoints);
    CHECK_THROWS_AS(line(k3, 0, 3), IndexOutOfRange);
}

TEST_CASE("line is symmetric and contains its pair") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto m = graph_metric(builders::random_connected(2 + int(seed % 9), int(seed % 6), seed));
        for (int u = 0; u < m.points(); ++u)
            for (int v = u + 1; v < m.points(); ++v) {
                auto uv = line(m, u, v);
                auto vu = line(m, v, u);
                CHECK(uv.members == vu.members);
                CHECK(uv.members.test(u));
                CHECK(uv.members.test(v));
            }
    }
}

TEST_CASE("[abc] forbids [bac] under positive distances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto m = graph_metric(builders::random_connected(2 + int(seed % 8), int(seed % 7), 50 + seed));
        const int n = m.points();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (between(m, a, b, c)) {
                        CHECK(between(m, c, b, a));
                        CHECK_FALSE(between(m, b, a, c));
                    }
    }
}

TEST_CASE("enumerate_lines on the named small spaces") {
    // C5: ten distinct lines, five of size 3 and five of size 4
    auto c5 = enumerate_lines(graph_metric(cycle(5)));
    CHECK(c5.lines.size() == 10);
    int size3 = 0, size4 = 0;
    for (const auto& l : c5.lines) {
        if (l.members.count() == 3) ++size3;
        if (l.members.count() == 4) ++size4;
        // size-3 lines come from non-adjacent pairs, size-4 from adjacent
        for (auto [u, v] : l.pairs)
            CHECK((l.members.count() == 4) == cycle(5).adjacent(u, v));
    }
    CHECK(size3 == 5);
    CHECK(size4 == 5);
    CHECK_FALSE(c5.universal.has_value());

    // P3: one line, defined by all three pairs
    auto p3 = enumerate_lines(graph_metric(path(3)));
    REQUIRE(p3.lines.size() == 1);
    CHECK(p3.lines[0].members.count() == 3);
    CHECK(p3.lines[0].pairs.size() == 3);
    REQUIRE(p3.universal.has_value());
    CHECK(*p3.universal == 0);

    // K3: three two-point lines
    auto k3 = enumerate_lines(graph_metric(complete(3)));
    CHECK(k3.lines.size() == 3);
    for (const auto& l : k3.lines) CHECK(l.members.count() == 2);
    CHECK_FALSE(k3.universal.has_value());

    CHECK_THROWS_AS(enumerate_lines(graph_metric(Graph(1))), TooFewPoints);
}

TEST_CASE("line system structure: pair coverage, bounds, canonical order") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto m = graph_metric(builders::random_connected(2 + int(seed % 10), int(seed % 8), 99 + seed));
        auto sys = enumerate_lines(m);
        const int n = m.points();

        CHECK(sys.lines.size() >= 1);
        CHECK(int(sys.lines.size()) <= n * (n - 1) / 2);

        // every pair appears in exactly one distinct line, and the index agrees
        long long pair_count = 0;
        for (std::size_t i = 0; i < sys.lines.size(); ++i)
            for (auto [u, v] : sys.lines[i].pairs) {
                ++pair_count;
                CHECK(sys.line_index(u, v) == int(i));
                CHECK(sys.line_index(v, u) == int(i));
            }
        CHECK(pair_count == n * (n - 1) / 2);

        // canonical order is strict
        for (std::size_t i = 1; i < sys.lines.size(); ++i)
            CHECK(sys.lines[i - 1].members < sys.lines[i].members);

        // universal flag matches contents
        bool has_full = false;
        for (const auto& l : sys.lines)
            if (l.members.count() == n) has_full = true;
        CHECK(sys.universal.has_value() == has_full);
    }
}

TEST_CASE("parallel enumeration matches sequential") {
    auto m = graph_metric(builders::random_connected(24, 30, 7));
    auto seq = enumerate_lines(m, 1);
    for (int jobs : {2, 3, 8}) {
        auto par = enumerate_lines(m, jobs);
        REQUIRE(par.lines.size() == seq.lines.size());
        for (std::size_t i = 0; i < seq.lines.size(); ++i) {
            CHECK(par.lines[i].members == seq.lines[i].members);
            CHECK(par.lines[i].pairs == seq.lines[i].pairs);
        }
        CHECK(par.universal == seq.universal);
        CHECK(to_json(par) == to_json(seq));
    }
}

TEST_CASE("agreement with the no-shortcut oracle") {
    check_against_oracle(builders::pentagon_metric());
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        check_against_oracle(
            graph_metric(builders::random_connected(2 + int(seed % 13), int(seed % 9), 7 * seed + 1)));
}

TEST_CASE("universal_line") {
    auto p3 = universal_line(graph_metric(path(3)));
    REQUIRE(p3.has_value());
    CHECK(p3->members.count() == 3);
    CHECK(p3->defined_by == std::pair<int, int>{0, 1});  // first pair in canonical order

    CHECK_FALSE(universal_line(graph_metric(cycle(5))).has_value());

    auto k2 = universal_line(graph_metric(path(2)));
    REQUIRE(k2.has_value());
    CHECK(k2->members.count() == 2);

    CHECK_THROWS_AS(universal_line(graph_metric(Graph(1))), TooFewPoints);
}

TEST_CASE("dbe_check on the named small spaces") {
    auto c5 = dbe_check(graph_metric(cycle(5)));
    CHECK(c5.n == 5);
    CHECK(c5.num_lines == 10);
    CHECK_FALSE(c5.has_universal);
    CHECK(c5.dbe_holds);
    CHECK(c5.line_witness.size() == 5);  // n distinct lines as witness

    auto p3 = dbe_check(graph_metric(path(3)));
    CHECK(p3.n == 3);
    CHECK(p3.num_lines == 1);
    CHECK(p3.has_universal);
    CHECK(p3.dbe_holds);
    REQUIRE(p3.universal_witness.has_value());
    CHECK(p3.universal_witness->members.count() == 3);

    auto k3 = dbe_check(graph_metric(complete(3)));
    CHECK(k3.n == 3);
    CHECK(k3.num_lines == 3);
    CHECK_FALSE(k3.has_universal);
    CHECK(k3.dbe_holds);

    CHECK_THROWS_AS(dbe_check(graph_metric(Graph(1))), TooFewPoints);
}

TEST_SUITE_END();
