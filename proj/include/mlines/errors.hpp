#ifndef MLINES_ERRORS_HPP
#define MLINES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlines {

/// Base of every error this library throws on purpose. `code()` is a
/// stable machine-readable tag; what() carries the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& m) : Error("index_out_of_range", m) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& m) : Error("invalid_argument", m) {}
};

struct DisconnectedGraph : Error {
    explicit DisconnectedGraph(const std::string& m) : Error("disconnected_graph", m) {}
};

struct EqualPoints : Error {
    explicit EqualPoints(const std::string& m) : Error("equal_points", m) {}
};

struct TooFewPoints : Error {
    explicit TooFewPoints(const std::string& m) : Error("too_few_points", m) {}
};

struct NotChordal : Error {
    explicit NotChordal(const std::string& m) : Error("not_chordal", m) {}
};

struct NotBipartite : Error {
    explicit NotBipartite(const std::string& m) : Error("not_bipartite", m) {}
};

/// Raised by the input parsers. Codes: bad_char, truncated_input,
/// unsupported_size, bad_header, index_out_of_range, self_loop, bad_value,
/// not_square, not_symmetric, bad_diagonal, not_positive,
/// triangle_violation, trailing_data.
class ParseError : public Error {
public:
    ParseError(std::string code, const std::string& message, long long ordinal = -1)
        : Error(std::move(code), message), ordinal_(ordinal) {}

    /// 0-based position of the offending instance in its stream, or -1.
    long long ordinal() const { return ordinal_; }

    void set_ordinal(long long o) { ordinal_ = o; }

private:
    long long ordinal_;
};

}  // namespace mlines

#endif
