#include "mlines/io.hpp"

#include <charconv>
#include <sstream>

namespace mlines {

// ---- graph6 ------------------------------------------------------------

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw ParseError("truncated_input", "empty graph6 line");
    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte == 126)
        throw ParseError("unsupported_size", "graph6 long form (n > 62) is not supported");
    if (size_byte < 63 || size_byte > 126)
        throw ParseError("bad_char", "graph6 size byte out of printable range");
    const int n = size_byte - 63;
    if (n == 0) throw ParseError("unsupported_size", "graph6 with zero vertices");

    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = std::size_t(nbits + 5) / 6;
    if (line.size() < 1 + nbytes)
        throw ParseError("truncated_input", "graph6 line needs " + std::to_string(1 + nbytes) +
                                                " bytes for n=" + std::to_string(n) + ", got " +
                                                std::to_string(line.size()));
    if (line.size() > 1 + nbytes)
        throw ParseError("trailing_data", "unexpected bytes after graph6 data");
    for (std::size_t i = 1; i < line.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("bad_char", "graph6 data byte out of range");
    }

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.size();
    if (n > 62) throw InvalidArgument("graph6 short form handles n <= 62, got " + std::to_string(n));
    std::string out(1, char(63 + n));
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | int(g.adjacent(i, j));
            if (++filled == 6) {
                out += char(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    if (filled) out += char(63 + (chunk << (6 - filled)));
    return out;
}

// ---- shared line scanning ------------------------------------------------

namespace {

// content lines: blank lines and '#' comments removed
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& line, const char* context) {
    std::string cleaned = line;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::vector<long long> out;
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad_value", std::string(context) + ": '" + tok + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

}  // namespace

// ---- edge list -----------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("bad_header", "edge list is empty");
    const auto header = parse_ints(lines[0], "edge list header");
    if (header.size() != 2 || header[0] < 1 || header[1] < 0)
        throw ParseError("bad_header", "expected header 'n m' with n >= 1, got '" + lines[0] + "'");
    const int n = int(header[0]);
    const long long m = header[1];
    if (std::ssize(lines) - 1 < m)
        throw ParseError("truncated_input", "header promises " + std::to_string(m) +
                                                " edges, file has " +
                                                std::to_string(lines.size() - 1));
    if (std::ssize(lines) - 1 > m)
        throw ParseError("trailing_data", "more edge lines than the header's " + std::to_string(m));

    Graph g(n);
    for (long long e = 0; e < m; ++e) {
        const auto uv = parse_ints(lines[1 + e], "edge");
        if (uv.size() != 2)
            throw ParseError("bad_value", "edge line must be 'u v', got '" + lines[1 + e] + "'");
        const long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("index_out_of_range", "edge (" + std::to_string(u) + "," +
                                                       std::to_string(v) + ") out of range for n=" +
                                                       std::to_string(n));
        if (u == v) throw ParseError("self_loop", "self-loop at vertex " + std::to_string(u));
        g.add_edge(int(u), int(v));
    }
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---- distance matrix -------------------------------------------------------

MetricSpace parse_distance_matrix(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("truncated_input", "distance matrix is empty");
    std::vector<std::vector<int>> rows;
    rows.reserve(lines.size());
    for (const auto& line : lines) {
        const auto values = parse_ints(line, "matrix row");
        std::vector<int> row;
        row.reserve(values.size());
        for (long long v : values) {
            if (v < 0) throw ParseError("bad_value", "distances must be nonnegative");
            if (v > int(1) << 30) throw ParseError("bad_value", "distance too large");
            row.push_back(int(v));
        }
        rows.push_back(std::move(row));
    }
    return MetricSpace::from_rows(rows);
}

std::string encode_distance_matrix(const MetricSpace& m) {
    std::ostringstream out;
    for (int u = 0; u < m.points(); ++u) {
        for (int v = 0; v < m.points(); ++v) {
            if (v) out << ' ';
            out << m.dist(u, v);
        }
        out << '\n';
    }
    return out.str();
}

// ---- instance streams --------------------------------------------------

std::optional<InputFormat> input_format_from_name(const std::string& name) {
    if (name == "g6" || name == "graph6") return InputFormat::graph6;
    if (name == "edges" || name == "edgelist") return InputFormat::edge_list;
    if (name == "matrix") return InputFormat::matrix;
    return std::nullopt;
}

std::vector<InstanceRecord> parse_instances(const std::string& text, InputFormat format,
                                            bool strict,
                                            std::vector<ParseDiagnostic>* diagnostics) {
    std::vector<InstanceRecord> records;
    auto report = [&](long long ordinal, const ParseError& e) {
        if (strict) {
            ParseError annotated(e.code(), std::string(e.what()) + " (instance " +
                                               std::to_string(ordinal) + ")");
            annotated.set_ordinal(ordinal);
            throw annotated;
        }
        if (diagnostics) diagnostics->push_back({ordinal, e.code(), e.what()});
    };

    if (format == InputFormat::graph6) {
        std::istringstream in(text);
        std::string line;
        long long ordinal = 0;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                Graph g = parse_graph6(line);
                records.push_back({ordinal, std::move(g), line});
            } catch (const ParseError& e) {
                report(ordinal, e);
            }
            ++ordinal;
        }
        return records;
    }

    try {
        if (format == InputFormat::edge_list)
            records.push_back({0, parse_edge_list(text), text});
        else
            records.push_back({0, parse_distance_matrix(text), text});
    } catch (const ParseError& e) {
        report(0, e);
    }
    return records;
}

// ---- JSON forms -----------------------------------------------------------

using nlohmann::json;

json to_json(const VertexSet& s) { return s.to_vector(); }

json to_json(const DistinctLine& l) {
    json pairs = json::array();
    for (auto [u, v] : l.pairs) pairs.push_back({u, v});
    return {{"members", to_json(l.members)}, {"pairs", pairs}};
}

json to_json(const LineSystem& sys) {
    json lines = json::array();
    for (const auto& l : sys.lines) lines.push_back(to_json(l));
    json universal;
    if (sys.universal) universal = *sys.universal;
    return {{"n", sys.points},
            {"num_lines", int(sys.lines.size())},
            {"universal", universal},
            {"lines", lines}};
}

json to_json(const DbeReport& r) {
    json witness;
    if (r.universal_witness) {
        witness = {{"kind", "universal_line"}, {"line", to_json(*r.universal_witness)}};
    } else if (!r.line_witness.empty()) {
        json lines = json::array();
        for (const auto& l : r.line_witness) lines.push_back(to_json(l));
        witness = {{"kind", "distinct_lines"}, {"lines", lines}};
    }
    return {{"n", r.n},
            {"num_lines", r.num_lines},
            {"has_universal", r.has_universal},
            {"dbe_holds", r.dbe_holds},
            {"witness", witness}};
}

json to_json(const ChordalityResult& r) {
    json out{{"chordal", r.chordal}};
    if (r.witness) out["elimination_order"] = r.witness->order;
    if (r.refutation) out["induced_cycle"] = *r.refutation;
    return out;
}

json to_json(const VerificationReport& r) {
    return {{"claim", claim_name(r.claim)},
            {"instance", r.instance},
            {"ordinal", r.ordinal},
            {"holds", r.holds},
            {"witness", r.witness},
            {"counterexample", r.counterexample}};
}

json to_json(const SweepSummary& s) {
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back(to_json(f));
    json histogram = json::array();
    for (const auto& [num_lines, count] : s.histogram) histogram.push_back({num_lines, count});
    return {{"total", s.total},
            {"passed", s.passed},
            {"skipped", s.skipped},
            {"failures", failures},
            {"histogram", histogram},
            {"runtime_ms", s.runtime_ms}};
}

// ---- report emission -------------------------------------------------------

namespace {

std::string join(const std::vector<int>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string line_text(const DistinctLine& l) {
    std::string out = "{" + join(l.members.to_vector()) + "}  pairs:";
    for (auto [u, v] : l.pairs) out += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    return out;
}

}  // namespace

std::string emit_report(const LineSystem& sys, ReportFormat f) {
    if (f == ReportFormat::json) return to_json(sys).dump(2);
    std::ostringstream out;
    out << "n=" << sys.points << " distinct_lines=" << sys.lines.size() << " universal=";
    if (sys.universal)
        out << "line " << *sys.universal;
    else
        out << "none";
    out << '\n';
    for (std::size_t i = 0; i < sys.lines.size(); ++i)
        out << "  line " << i << " [size " << sys.lines[i].members.count()
            << "]: " << line_text(sys.lines[i]) << '\n';
    return out.str();
}

std::string emit_report(const DbeReport& r, ReportFormat f) {
    if (f == ReportFormat::json) return to_json(r).dump(2);
    std::ostringstream out;
    out << "n=" << r.n << " num_lines=" << r.num_lines << " has_universal="
        << (r.has_universal ? "yes" : "no") << " dbe=" << (r.dbe_holds ? "holds" : "FAILS")
        << '\n';
    if (r.universal_witness)
        out << "  universal line: " << line_text(*r.universal_witness) << '\n';
    else
        for (std::size_t i = 0; i < r.line_witness.size(); ++i)
            out << "  witness line " << i << ": " << line_text(r.line_witness[i]) << '\n';
    return out.str();
}

std::string emit_report(const ChordalityResult& r, ReportFormat f) {
    if (f == ReportFormat::json) return to_json(r).dump(2);
    if (r.chordal) return "chordal, elimination order: " + join(r.witness->order) + "\n";
    return "not chordal, induced cycle: " + join(*r.refutation) + "\n";
}

std::string emit_report(const VerificationReport& r, ReportFormat f) {
    if (f == ReportFormat::json) return to_json(r).dump(2);
    std::ostringstream out;
    out << claim_name(r.claim) << " on instance " << r.ordinal << " (" << r.instance
        << "): " << (r.holds ? "holds" : "FAILS") << '\n';
    if (!r.holds) out << "  counterexample: " << r.counterexample.dump() << '\n';
    return out.str();
}

std::string emit_report(const SweepSummary& s, ReportFormat f) {
    if (f == ReportFormat::json) return to_json(s).dump(2);
    std::ostringstream out;
    out << "total=" << s.total << " passed=" << s.passed << " skipped=" << s.skipped
        << " failures=" << s.failures.size() << " runtime_ms=" << s.runtime_ms << '\n';
    out << "histogram (num_lines: instances):";
    for (const auto& [num_lines, count] : s.histogram) out << ' ' << num_lines << ':' << count;
    out << '\n';
    for (const auto& fail : s.failures) out << emit_report(fail, ReportFormat::text);
    return out.str();
}

}  // namespace mlines
