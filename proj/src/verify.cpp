#include "mlines/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "mlines/io.hpp"

namespace mlines {

using nlohmann::json;

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::theorem1: return "theorem1";
        case Claim::lemma1: return "lemma1";
        case Claim::lemma2: return "lemma2";
        case Claim::dirac: return "dirac";
        case Claim::bipartite_universal: return "bipartite_universal";
        case Claim::log2_bound: return "log2_bound";
        case Claim::dbe: return "dbe";
    }
    return "?";
}

std::optional<Claim> claim_from_name(const std::string& name) {
    if (name == "theorem1") return Claim::theorem1;
    if (name == "lemma1") return Claim::lemma1;
    if (name == "lemma2") return Claim::lemma2;
    if (name == "dirac") return Claim::dirac;
    if (name == "bipartite" || name == "bipartite_universal") return Claim::bipartite_universal;
    if (name == "logbound" || name == "log2_bound") return Claim::log2_bound;
    if (name == "dbe") return Claim::dbe;
    return std::nullopt;
}

namespace {

json members_json(const VertexSet& s) { return s.to_vector(); }

json lines_json(const LineSystem& sys) {
    json out = json::array();
    for (const auto& l : sys.lines) out.push_back(members_json(l.members));
    return out;
}

// Lazy per-instance state shared by the claims of one sweep pass, so a
// metric or line system is computed at most once per instance.
class Eval {
public:
    explicit Eval(const Graph& g) : graph_(&g) {}
    explicit Eval(const MetricSpace& m) : metric_(&m) {}
    explicit Eval(const InstanceRecord& rec) {
        if (auto* g = std::get_if<Graph>(&rec.payload))
            graph_ = g;
        else
            metric_ = &std::get<MetricSpace>(rec.payload);
    }

    const Graph& graph() {
        if (!graph_) throw Error("not_a_graph", "claim needs a graph instance");
        return *graph_;
    }

    const MetricSpace& metric() {
        if (metric_) return *metric_;
        if (metric_cache_) return *metric_cache_;
        if (disconnected_) throw DisconnectedGraph("graph metric unavailable");
        try {
            metric_cache_ = graph_metric(graph());
        } catch (const DisconnectedGraph&) {
            disconnected_ = true;
            throw;
        }
        return *metric_cache_;
    }

    const LineSystem& lines() {
        if (!lines_cache_) lines_cache_ = enumerate_lines(metric());
        return *lines_cache_;
    }

    const ChordalityResult& chordality() {
        if (!chordality_cache_) chordality_cache_ = is_chordal(graph());
        return *chordality_cache_;
    }

    const VertexSet& simplicial() {
        if (!simplicial_cache_) simplicial_cache_ = simplicial_vertices(graph());
        return *simplicial_cache_;
    }

    bool connected() {
        if (!connected_cache_) connected_cache_ = is_connected(graph());
        return *connected_cache_;
    }

private:
    const Graph* graph_ = nullptr;
    const MetricSpace* metric_ = nullptr;
    std::optional<MetricSpace> metric_cache_;
    std::optional<LineSystem> lines_cache_;
    std::optional<ChordalityResult> chordality_cache_;
    std::optional<VertexSet> simplicial_cache_;
    std::optional<bool> connected_cache_;
    bool disconnected_ = false;
};

void need_points(int n, int at_least) {
    if (n < at_least)
        throw TooFewPoints("claim needs n >= " + std::to_string(at_least) + ", got " +
                           std::to_string(n));
}

void need_connected(Eval& e) {
    if (!e.connected()) throw DisconnectedGraph("claim needs a connected graph");
}

void need_chordal(Eval& e) {
    if (!e.chordality().chordal) throw NotChordal("claim needs a chordal graph");
}

VerificationReport scan_theorem1(Eval& e) {
    const Graph& g = e.graph();
    const LineSystem& sys = e.lines();
    const int num_lines = int(sys.lines.size());
    const bool has_universal = sys.universal.has_value();
    VerificationReport r{Claim::theorem1, "", -1, false, {}, {}};
    r.holds = num_lines >= g.size() || has_universal;
    r.witness = {{"num_lines", num_lines}, {"has_universal", has_universal}};
    if (!r.holds)
        r.counterexample = {{"n", g.size()},
                            {"num_lines", num_lines},
                            {"has_universal", has_universal},
                            {"lines", lines_json(sys)}};
    return r;
}

VerificationReport run_theorem1(Eval& e) {
    need_points(e.graph().size(), 2);
    need_connected(e);
    need_chordal(e);
    return scan_theorem1(e);
}

VerificationReport scan_lemma1(Eval& e) {
    const Graph& g = e.graph();
    const MetricSpace& m = e.metric();
    const LineSystem& sys = e.lines();
    const int n = g.size();
    VerificationReport r{Claim::lemma1, "", -1, true, {}, {}};
    long long checked = 0;
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < n; ++x) {
            if (x == s) continue;
            const int dsx = m.dist(s, x);
            for (int y = 0; y < n; ++y) {
                if (y == s || y == x) continue;
                if (dsx + m.dist(x, y) != m.dist(s, y)) continue;  // needs [sxy]
                if (sys.line_index(s, x) != sys.line_index(s, y)) continue;
                ++checked;
                if (!separates(g, x, s, y)) {
                    r.holds = false;
                    r.counterexample = {
                        {"s", s},
                        {"x", x},
                        {"y", y},
                        {"line_sx", members_json(sys.lines[sys.line_index(s, x)].members)},
                        {"line_sy", members_json(sys.lines[sys.line_index(s, y)].members)},
                        {"separates", false}};
                    return r;
                }
            }
        }
    r.witness = {{"triples_checked", checked}};
    return r;
}

VerificationReport run_lemma1(Eval& e) {
    need_points(e.graph().size(), 2);
    need_connected(e);
    need_chordal(e);
    return scan_lemma1(e);
}

VerificationReport scan_lemma2(Eval& e) {
    const Graph& g = e.graph();
    const LineSystem& sys = e.lines();
    const int n = g.size();
    const VertexSet& simp = e.simplicial();
    VerificationReport r{Claim::lemma2, "", -1, true, {}, {}};
    long long checked = 0;
    for (int s = simp.first(); s >= 0; s = simp.next(s))
        for (int x = 0; x < n; ++x) {
            if (x == s) continue;
            for (int y = x + 1; y < n; ++y) {
                if (y == s) continue;
                if (sys.line_index(s, x) != sys.line_index(s, y)) continue;
                ++checked;
                const int xy = sys.line_index(x, y);
                if (sys.lines[xy].members.count() != n) {
                    r.holds = false;
                    r.counterexample = {{"s", s},
                                        {"x", x},
                                        {"y", y},
                                        {"line_xy", members_json(sys.lines[xy].members)},
                                        {"size", sys.lines[xy].members.count()},
                                        {"expected_size", n}};
                    return r;
                }
            }
        }
    r.witness = {{"hypothesis_cases", checked}};
    return r;
}

VerificationReport run_lemma2(Eval& e) {
    need_points(e.graph().size(), 3);
    need_connected(e);
    need_chordal(e);
    return scan_lemma2(e);
}

VerificationReport scan_dirac(Eval& e) {
    const VertexSet& simp = e.simplicial();
    VerificationReport r{Claim::dirac, "", -1, simp.count() >= 2, {}, {}};
    r.witness = {{"simplicial", members_json(simp)}};
    if (!r.holds) r.counterexample = {{"simplicial", members_json(simp)}, {"count", simp.count()}};
    return r;
}

VerificationReport run_dirac(Eval& e) {
    need_points(e.graph().size(), 2);
    need_chordal(e);
    return scan_dirac(e);
}

VerificationReport scan_bipartite_universal(Eval& e) {
    const Graph& g = e.graph();
    const MetricSpace& m = e.metric();
    const int n = g.size();
    VerificationReport r{Claim::bipartite_universal, "", -1, true, {}, {}};
    long long edges_checked = 0;
    for (auto [x, y] : g.edges()) {
        Line l = line(m, x, y);
        ++edges_checked;
        if (l.members.count() != n) {
            r.holds = false;
            r.counterexample = {{"x", x},
                                {"y", y},
                                {"line", members_json(l.members)},
                                {"size", l.members.count()},
                                {"expected_size", n}};
            return r;
        }
    }
    r.witness = {{"edges_checked", edges_checked}};
    return r;
}

VerificationReport run_bipartite_universal(Eval& e) {
    need_points(e.graph().size(), 2);
    need_connected(e);
    if (!is_bipartite(e.graph())) throw NotBipartite("claim needs a bipartite graph");
    return scan_bipartite_universal(e);
}

VerificationReport run_log_bound(Eval& e) {
    const MetricSpace& m = e.metric();
    need_points(m.points(), 2);
    const LineSystem& sys = e.lines();
    const int num_lines = int(sys.lines.size());
    const bool has_universal = sys.universal.has_value();
    // integer-exact form of num_lines >= lg n
    const bool enough =
        num_lines >= 63 || (std::uint64_t(1) << num_lines) >= std::uint64_t(m.points());
    VerificationReport r{Claim::log2_bound, "", -1, enough || has_universal, {}, {}};
    r.witness = {{"num_lines", num_lines}, {"has_universal", has_universal}};
    if (!r.holds)
        r.counterexample = {{"n", m.points()},
                            {"num_lines", num_lines},
                            {"has_universal", has_universal},
                            {"lines", lines_json(sys)}};
    return r;
}

VerificationReport run_dbe(Eval& e) {
    const MetricSpace& m = e.metric();
    need_points(m.points(), 2);
    const LineSystem& sys = e.lines();
    const int num_lines = int(sys.lines.size());
    const bool has_universal = sys.universal.has_value();
    VerificationReport r{Claim::dbe, "", -1, num_lines >= m.points() || has_universal, {}, {}};
    r.witness = {{"num_lines", num_lines}, {"has_universal", has_universal}};
    if (!r.holds)
        r.counterexample = {{"n", m.points()},
                            {"num_lines", num_lines},
                            {"has_universal", has_universal},
                            {"lines", lines_json(sys)}};
    return r;
}

VerificationReport run_claim(Claim c, Eval& e) {
    switch (c) {
        case Claim::theorem1: return run_theorem1(e);
        case Claim::lemma1: return run_lemma1(e);
        case Claim::lemma2: return run_lemma2(e);
        case Claim::dirac: return run_dirac(e);
        case Claim::bipartite_universal: return run_bipartite_universal(e);
        case Claim::log2_bound: return run_log_bound(e);
        case Claim::dbe: return run_dbe(e);
    }
    throw InvalidArgument("unknown claim");
}

}  // namespace

namespace detail {

VerificationReport run_claim_unchecked(Claim c, const Graph& g) {
    Eval e(g);
    VerificationReport r = [&] {
        switch (c) {
            case Claim::theorem1: return scan_theorem1(e);
            case Claim::lemma1: return scan_lemma1(e);
            case Claim::lemma2: return scan_lemma2(e);
            case Claim::dirac: return scan_dirac(e);
            case Claim::bipartite_universal: return scan_bipartite_universal(e);
            case Claim::log2_bound: return run_log_bound(e);
            case Claim::dbe: return run_dbe(e);
        }
        throw InvalidArgument("unknown claim");
    }();
    r.instance = encode_graph6(g);
    return r;
}

}  // namespace detail

VerificationReport verify_theorem1(const Graph& g) {
    Eval e(g);
    auto r = run_theorem1(e);
    r.instance = encode_graph6(g);
    return r;
}

VerificationReport verify_lemma1(const Graph& g) {
    Eval e(g);
    auto r = run_lemma1(e);
    r.instance = encode_graph6(g);
    return r;
}

VerificationReport verify_lemma2(const Graph& g) {
    Eval e(g);
    auto r = run_lemma2(e);
    r.instance = encode_graph6(g);
    return r;
}

VerificationReport verify_dirac(const Graph& g) {
    Eval e(g);
    auto r = run_dirac(e);
    r.instance = encode_graph6(g);
    return r;
}

VerificationReport verify_bipartite_universal(const Graph& g) {
    Eval e(g);
    auto r = run_bipartite_universal(e);
    r.instance = encode_graph6(g);
    return r;
}

VerificationReport verify_log_bound(const MetricSpace& m) {
    Eval e(m);
    auto r = run_log_bound(e);
    r.instance = encode_distance_matrix(m);
    return r;
}

VerificationReport verify_dbe(const MetricSpace& m) {
    Eval e(m);
    auto r = run_dbe(e);
    r.instance = encode_distance_matrix(m);
    return r;
}

// ---- labelled enumeration ------------------------------------------------

LabelledGraphSource::LabelledGraphSource(int n_min, int n_max) : n_max_(n_max), n_(n_min) {
    if (n_min < 1 || n_max > 7 || n_min > n_max)
        throw InvalidArgument("labelled enumeration supports 1 <= n_min <= n_max <= 7");
    enter_size(n_);
}

void LabelledGraphSource::enter_size(int n) {
    mask_ = 0;
    mask_count_ = std::uint64_t(1) << (n * (n - 1) / 2);
    pair_order_.clear();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_order_.emplace_back(u, v);
}

std::optional<InstanceRecord> LabelledGraphSource::next() {
    while (mask_ == mask_count_) {
        if (n_ == n_max_) return std::nullopt;
        enter_size(++n_);
    }
    Graph g(n_);
    for (std::size_t b = 0; b < pair_order_.size(); ++b)
        if ((mask_ >> b) & 1) g.add_edge(pair_order_[b].first, pair_order_[b].second);
    ++mask_;
    std::string form = encode_graph6(g);
    return InstanceRecord{ordinal_++, std::move(g), std::move(form)};
}

// ---- sweep -----------------------------------------------------------------

namespace {

struct InstanceOutcome {
    int bucket = -1;
    long long passed = 0;
    long long skipped = 0;
    std::vector<VerificationReport> failures;
};

InstanceOutcome evaluate_instance(const InstanceRecord& rec, const std::vector<Claim>& claims) {
    InstanceOutcome out;
    Eval eval(rec);
    for (Claim c : claims) {
        try {
            VerificationReport r = run_claim(c, eval);
            r.ordinal = rec.ordinal;
            r.instance = rec.source_form;
            if (r.holds)
                ++out.passed;
            else
                out.failures.push_back(std::move(r));
        } catch (const Error&) {
            ++out.skipped;  // precondition not met
        }
    }
    try {
        out.bucket = int(eval.lines().lines.size());
    } catch (const Error&) {
        out.bucket = -1;  // no computable line count
    }
    return out;
}

}  // namespace

SweepSummary sweep(InstanceSource& source, const std::vector<Claim>& claims, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    SweepSummary summary;
    constexpr std::size_t kBatch = 4096;
    std::vector<InstanceRecord> batch;
    batch.reserve(kBatch);

    auto flush = [&] {
        if (batch.empty()) return;
        std::vector<InstanceOutcome> outcomes(batch.size());
        if (jobs <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                outcomes[i] = evaluate_instance(batch[i], claims);
        } else {
            std::atomic<std::size_t> next_index{0};
            std::vector<std::thread> workers;
            std::vector<std::exception_ptr> errors(jobs);
            for (int t = 0; t < jobs; ++t)
                workers.emplace_back([&, t] {
                    try {
                        while (true) {
                            const std::size_t i = next_index.fetch_add(1);
                            if (i >= batch.size()) break;
                            outcomes[i] = evaluate_instance(batch[i], claims);
                        }
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            for (auto& w : workers) w.join();
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);
        }
        // ordered reduction keeps the summary independent of the worker count
        for (auto& out : outcomes) {
            ++summary.total;
            summary.passed += out.passed;
            summary.skipped += out.skipped;
            ++summary.histogram[out.bucket];
            for (auto& f : out.failures) summary.failures.push_back(std::move(f));
        }
        batch.clear();
    };

    while (auto rec = source.next()) {
        batch.push_back(std::move(*rec));
        if (batch.size() == kBatch) flush();
    }
    flush();

    summary.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return summary;
}

}  // namespace mlines
