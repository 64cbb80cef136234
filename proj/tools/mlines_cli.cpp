#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlines/chordal.hpp"
#include "mlines/io.hpp"
#include "mlines/lines.hpp"
#include "mlines/verify.hpp"

namespace {

using namespace mlines;

constexpr int kExitHold = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("bad_file", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct StreamOptions {
    std::string path;
    std::string format = "g6";
    bool json = false;
    bool strict = false;
};

void add_stream_options(CLI::App* cmd, StreamOptions& opt, bool allow_matrix,
                        bool require_in = true) {
    auto* in = cmd->add_option("--in", opt.path, "input file");
    if (require_in) in->required();
    auto* fmt = cmd->add_option("--format", opt.format, "input format");
    if (allow_matrix)
        fmt->check(CLI::IsMember({"g6", "edges", "matrix"}));
    else
        fmt->check(CLI::IsMember({"g6", "edges"}));
    cmd->add_flag("--json", opt.json, "emit canonical JSON instead of text");
    cmd->add_flag("--strict", opt.strict, "abort on the first malformed instance");
}

std::vector<InstanceRecord> load_instances(const StreamOptions& opt, int& exit_code) {
    const auto format = input_format_from_name(opt.format);
    if (!format) throw ParseError("bad_format", "unknown format '" + opt.format + "'");
    std::vector<ParseDiagnostic> diagnostics;
    auto records = parse_instances(read_file(opt.path), *format, opt.strict, &diagnostics);
    for (const auto& d : diagnostics) {
        std::cerr << "warning: instance " << d.ordinal << ": " << d.message << " [" << d.code
                  << "]\n";
        exit_code = kExitInputError;
    }
    return records;
}

MetricSpace metric_of(const InstanceRecord& rec) {
    if (const auto* g = std::get_if<Graph>(&rec.payload)) return graph_metric(*g);
    return std::get<MetricSpace>(rec.payload);
}

// Shared driver for per-instance commands. `run` returns the report text
// (or JSON value) and may flip the counterexample flag.
template <typename Fn>
int run_per_instance(const StreamOptions& opt, Fn&& run) {
    int exit_code = kExitHold;
    std::vector<InstanceRecord> records;
    try {
        records = load_instances(opt, exit_code);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << " [" << e.code() << "]\n";
        return kExitInputError;
    }

    bool counterexample = false;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rec : records) {
        try {
            if (opt.json) {
                nlohmann::json entry{{"ordinal", rec.ordinal}, {"instance", rec.source_form}};
                entry["report"] = run(rec, counterexample, true);
                out.push_back(std::move(entry));
            } else {
                std::cout << "# instance " << rec.ordinal << ": "
                          << (rec.source_form.find('\n') == std::string::npos ? rec.source_form
                                                                              : "(multi-line)")
                          << '\n'
                          << run(rec, counterexample, false).template get<std::string>();
            }
        } catch (const Error& e) {
            std::cerr << "error: instance " << rec.ordinal << ": " << e.what() << " ["
                      << e.code() << "]\n";
            if (opt.strict) return kExitInputError;
            exit_code = kExitInputError;
        }
    }
    if (opt.json) std::cout << out.dump(2) << '\n';
    if (exit_code == kExitHold && counterexample) exit_code = kExitCounterexample;
    return exit_code;
}

int cmd_lines_enumerate(const StreamOptions& opt) {
    return run_per_instance(opt, [](const InstanceRecord& rec, bool&, bool as_json) {
        auto sys = enumerate_lines(metric_of(rec));
        return as_json ? to_json(sys) : nlohmann::json(emit_report(sys, ReportFormat::text));
    });
}

int cmd_lines_dbe(const StreamOptions& opt) {
    return run_per_instance(opt, [](const InstanceRecord& rec, bool& counterexample, bool as_json) {
        auto report = dbe_check(metric_of(rec));
        if (!report.dbe_holds) counterexample = true;
        return as_json ? to_json(report) : nlohmann::json(emit_report(report, ReportFormat::text));
    });
}

int cmd_graph_chordal(const StreamOptions& opt) {
    return run_per_instance(opt, [](const InstanceRecord& rec, bool&, bool as_json) {
        const auto& g = std::get<Graph>(rec.payload);
        auto result = is_chordal(g);
        return as_json ? to_json(result) : nlohmann::json(emit_report(result, ReportFormat::text));
    });
}

struct GenOptions {
    int n = 0;
    int kmax = 0;
    std::uint64_t seed = 0;
    int count = 1;
};

int cmd_gen_chordal(const GenOptions& opt) {
    // graph i of a batch uses seed + i, so any prefix reproduces independently
    for (int i = 0; i < opt.count; ++i)
        std::cout << encode_graph6(random_chordal(opt.n, opt.kmax, opt.seed + std::uint64_t(i)))
                  << '\n';
    return kExitHold;
}

struct VerifyOptions {
    std::string claim;
    StreamOptions stream;
    int jobs = 1;
};

int emit_summary(const SweepSummary& summary, bool json) {
    std::cout << emit_report(summary, json ? ReportFormat::json : ReportFormat::text);
    if (json) std::cout << '\n';
    return summary.failures.empty() ? kExitHold : kExitCounterexample;
}

int cmd_verify(const VerifyOptions& opt) {
    const auto claim = claim_from_name(opt.claim);
    if (!claim) throw ParseError("bad_claim", "unknown claim '" + opt.claim + "'");
    int exit_code = kExitHold;
    auto records = load_instances(opt.stream, exit_code);
    VectorSource source(std::move(records));
    const auto summary = sweep(source, {*claim}, opt.jobs);
    const int verdict = emit_summary(summary, opt.stream.json);
    return exit_code != kExitHold ? exit_code : verdict;
}

struct ExhaustiveOptions {
    std::string claim;
    int nmax = 6;
    int jobs = 1;
    bool json = false;
};

int cmd_verify_exhaustive(const ExhaustiveOptions& opt) {
    const auto claim = claim_from_name(opt.claim);
    if (!claim) throw ParseError("bad_claim", "unknown claim '" + opt.claim + "'");
    LabelledGraphSource source(1, opt.nmax);
    const auto summary = sweep(source, {*claim}, opt.jobs);
    return emit_summary(summary, opt.json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lines in finite metric spaces: enumeration, chordality, claim verification"};
    app.require_subcommand(1);

    StreamOptions enum_opt, dbe_opt, chordal_opt;
    GenOptions gen_opt;
    VerifyOptions verify_opt;
    ExhaustiveOptions ex_opt;

    auto* lines_cmd = app.add_subcommand("lines", "line systems of metric spaces");
    lines_cmd->require_subcommand(1);
    add_stream_options(lines_cmd->add_subcommand("enumerate", "list all distinct lines"),
                       enum_opt, true);
    add_stream_options(
        lines_cmd->add_subcommand("dbe", "check: >= n distinct lines or a universal line"),
        dbe_opt, true);

    auto* graph_cmd = app.add_subcommand("graph", "structural graph checks");
    graph_cmd->require_subcommand(1);
    add_stream_options(
        graph_cmd->add_subcommand("chordal",
                                  "chordality with elimination-order witness or induced-cycle "
                                  "refutation"),
        chordal_opt, false);

    auto* gen_cmd = app.add_subcommand("gen", "instance generators");
    gen_cmd->require_subcommand(1);
    auto* gen_chordal_cmd =
        gen_cmd->add_subcommand("chordal", "seeded connected chordal graphs, graph6 output");
    gen_chordal_cmd->add_option("--n", gen_opt.n, "vertex count")->required();
    gen_chordal_cmd->add_option("--kmax", gen_opt.kmax, "max clique attachment size")->required();
    gen_chordal_cmd->add_option("--seed", gen_opt.seed, "64-bit seed")->required();
    gen_chordal_cmd->add_option("--count", gen_opt.count, "number of graphs (seed + i each)")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run one claim over an instance stream");
    verify_cmd->require_subcommand(0, 1);
    verify_cmd->add_option("--claim", verify_opt.claim,
                           "theorem1|lemma1|lemma2|dirac|bipartite|logbound|dbe");
    add_stream_options(verify_cmd, verify_opt.stream, true, /*require_in=*/false);
    verify_cmd->add_option("--jobs", verify_opt.jobs, "worker count")->check(CLI::PositiveNumber);

    auto* ex_cmd = verify_cmd->add_subcommand(
        "exhaustive", "run one claim over every labelled graph with n <= nmax");
    ex_cmd->add_option("--claim", ex_opt.claim, "claim name")->required();
    ex_cmd->add_option("--nmax", ex_opt.nmax, "largest vertex count (<= 7)")
        ->check(CLI::Range(1, 7));
    ex_cmd->add_option("--jobs", ex_opt.jobs, "worker count")->check(CLI::PositiveNumber);
    ex_cmd->add_flag("--json", ex_opt.json, "emit canonical JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitHold : kExitInputError;
    }

    try {
        if (lines_cmd->got_subcommand("enumerate")) return cmd_lines_enumerate(enum_opt);
        if (lines_cmd->got_subcommand("dbe")) return cmd_lines_dbe(dbe_opt);
        if (graph_cmd->got_subcommand("chordal")) return cmd_graph_chordal(chordal_opt);
        if (gen_cmd->got_subcommand("chordal")) return cmd_gen_chordal(gen_opt);
        if (verify_cmd->parsed()) {
            if (ex_cmd->parsed()) return cmd_verify_exhaustive(ex_opt);
            if (verify_opt.claim.empty() || verify_opt.stream.path.empty())
                throw ParseError("bad_usage", "verify needs --claim and --in (or 'exhaustive')");
            return cmd_verify(verify_opt);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << " [" << e.code() << "]\n";
        return kExitInputError;
    }
    return kExitHold;
}
