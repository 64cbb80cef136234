#ifndef MLINES_VERIFY_HPP
#define MLINES_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mlines/chordal.hpp"
#include "mlines/graph.hpp"
#include "mlines/lines.hpp"
#include "mlines/metric.hpp"

namespace mlines {

enum class Claim {
    theorem1,             // chordal DBE: >= n distinct lines or a universal line
    lemma1,               // [sxy] and line(s,x)=line(s,y) force x to cut s from y
    lemma2,               // simplicial s, line(s,x)=line(s,y) force line(x,y) universal
    dirac,                // chordal graphs have >= 2 simplicial vertices
    bipartite_universal,  // every edge of a bipartite graph defines a universal line
    log2_bound,           // 2^num_lines >= n, or a universal line
    dbe,                  // >= n distinct lines or a universal line, any metric
};

std::string claim_name(Claim c);

/// Accepts both the report names above and the CLI short forms
/// ("bipartite", "logbound").
std::optional<Claim> claim_from_name(const std::string& name);

/// Outcome of one claim on one instance. When holds is false the
/// counterexample replays: rerunning the claim on `instance` reproduces
/// the violation.
struct VerificationReport {
    Claim claim;
    std::string instance;  // serialized form (graph6 or matrix line)
    long long ordinal = -1;
    bool holds = false;
    nlohmann::json witness;
    nlohmann::json counterexample;
};

VerificationReport verify_theorem1(const Graph& g);
VerificationReport verify_lemma1(const Graph& g);
VerificationReport verify_lemma2(const Graph& g);
VerificationReport verify_dirac(const Graph& g);
VerificationReport verify_bipartite_universal(const Graph& g);
VerificationReport verify_log_bound(const MetricSpace& m);
VerificationReport verify_dbe(const MetricSpace& m);

namespace detail {
/// Claim scan without its hypothesis checks (the public verify_*
/// functions run the same scan after validating preconditions). Off the
/// hypothesis class the implications genuinely fail, which is how the
/// counterexample machinery gets exercised: lemma1 fails on C4, dirac on
/// C4, bipartite_universal on C5. The graph must still be connected for
/// metric-based claims.
VerificationReport run_claim_unchecked(Claim c, const Graph& g);
}  // namespace detail

/// One parsed instance of a stream. payload round-trips through
/// source_form.
struct InstanceRecord {
    long long ordinal = 0;
    std::variant<Graph, MetricSpace> payload;
    std::string source_form;
};

/// Pull-based instance stream consumed by sweep().
class InstanceSource {
public:
    virtual ~InstanceSource() = default;
    virtual std::optional<InstanceRecord> next() = 0;
};

class VectorSource : public InstanceSource {
public:
    explicit VectorSource(std::vector<InstanceRecord> records)
        : records_(std::move(records)) {}
    std::optional<InstanceRecord> next() override {
        if (pos_ >= records_.size()) return std::nullopt;
        return records_[pos_++];
    }

private:
    std::vector<InstanceRecord> records_;
    std::size_t pos_ = 0;
};

/// Every labelled graph on n_min..n_max vertices, one edge mask at a
/// time (2^(n(n-1)/2) graphs per n). Capped at n_max <= 7.
class LabelledGraphSource : public InstanceSource {
public:
    LabelledGraphSource(int n_min, int n_max);
    std::optional<InstanceRecord> next() override;

private:
    int n_max_;
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_count_;
    long long ordinal_ = 0;
    std::vector<std::pair<int, int>> pair_order_;
    void enter_size(int n);
};

/// Aggregate of one sweep. Failures are ordered by (ordinal, claim
/// position); histogram counts instances by number of distinct lines,
/// bucket -1 collecting instances with no computable line count
/// (disconnected graphs, n < 2). total/passed/skipped/failures and the
/// histogram are independent of the worker count; runtime is wall clock.
struct SweepSummary {
    long long total = 0;    // instances processed
    long long passed = 0;   // instance-claim runs that held
    long long skipped = 0;  // instance-claim runs whose preconditions failed
    std::vector<VerificationReport> failures;
    std::map<int, long long> histogram;
    double runtime_ms = 0.0;
};

/// Runs every claim on every instance with `jobs` workers. Instances
/// failing a claim's preconditions count as skipped, never as failed.
SweepSummary sweep(InstanceSource& source, const std::vector<Claim>& claims, int jobs = 1);

}  // namespace mlines

#endif
