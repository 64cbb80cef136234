#ifndef MLINES_IO_HPP
#define MLINES_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlines/chordal.hpp"
#include "mlines/graph.hpp"
#include "mlines/lines.hpp"
#include "mlines/metric.hpp"
#include "mlines/verify.hpp"

namespace mlines {

// ---- instance formats ------------------------------------------------

/// graph6 short form, n <= 62 (one graph per line). Bit layout follows
/// the standard encoding: upper triangle, column-major, 6-bit chunks
/// offset by 63, most significant bit first.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

/// "n m" header, then m lines "u v". Blank lines and lines starting
/// with '#' are ignored; duplicate edges collapse silently.
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);

/// n rows of n comma- or whitespace-separated nonnegative integers.
/// All MetricSpace invariants are validated; the error names the first
/// violating entry or triple.
MetricSpace parse_distance_matrix(const std::string& text);
std::string encode_distance_matrix(const MetricSpace& m);

enum class InputFormat { graph6, edge_list, matrix };

std::optional<InputFormat> input_format_from_name(const std::string& name);

struct ParseDiagnostic {
    long long ordinal;
    std::string code;
    std::string message;
};

/// Splits `text` into instances: one per line for graph6, one per file
/// for the other formats. Malformed graph6 lines abort with a ParseError
/// carrying the ordinal when strict, otherwise they are reported through
/// `diagnostics` and skipped (their ordinal stays used).
std::vector<InstanceRecord> parse_instances(const std::string& text, InputFormat format,
                                            bool strict,
                                            std::vector<ParseDiagnostic>* diagnostics = nullptr);

// ---- reports ---------------------------------------------------------

enum class ReportFormat { json, text };

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const DistinctLine& l);
nlohmann::json to_json(const LineSystem& sys);
nlohmann::json to_json(const DbeReport& r);
nlohmann::json to_json(const ChordalityResult& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SweepSummary& s);

/// Serializes a report. The JSON form is canonical: keys sorted, line
/// member sets as sorted index arrays, identical input giving identical
/// bytes regardless of worker counts.
std::string emit_report(const LineSystem& sys, ReportFormat f);
std::string emit_report(const DbeReport& r, ReportFormat f);
std::string emit_report(const ChordalityResult& r, ReportFormat f);
std::string emit_report(const VerificationReport& r, ReportFormat f);
std::string emit_report(const SweepSummary& s, ReportFormat f);

}  // namespace mlines

#endif
