#ifndef UGB_ERRORS_HPP
#define UGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ugb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction problems; each names the offending item.
struct SelfLoopError : Error {
    int edge_index;
    explicit SelfLoopError(int e)
        : Error("self-loop at edge " + std::to_string(e + 1)), edge_index(e) {}
};

struct DuplicateEdgeError : Error {
    int edge_index;
    explicit DuplicateEdgeError(int e)
        : Error("duplicate edge at index " + std::to_string(e + 1)), edge_index(e) {}
};

struct VertexOutOfRangeError : Error {
    int vertex;
    explicit VertexOutOfRangeError(int v)
        : Error("vertex out of range: " + std::to_string(v + 1)), vertex(v) {}
};

// Walk-to-binomial failures.
struct WalkError : Error {
    enum class Kind { NotClosed, OddLength, NotAWalk, Reducible };
    Kind kind;
    int position;  // step index for NotAWalk, -1 otherwise
    WalkError(Kind k, const std::string& msg, int pos = -1)
        : Error(msg), kind(k), position(pos) {}
};

struct ExponentTooLargeError : Error {
    int edge_index;
    explicit ExponentTooLargeError(int e)
        : Error("exponent exceeds 2 at edge " + std::to_string(e + 1)), edge_index(e) {}
};

struct SupportTooLargeError : Error {
    int limit;
    explicit SupportTooLargeError(int lim)
        : Error("support exceeds brute-force cap of " + std::to_string(lim)), limit(lim) {}
};

struct LimitExceededError : Error {
    long limit;
    explicit LimitExceededError(long lim)
        : Error("walk search exceeded max_walks = " + std::to_string(lim) +
                "; import a precomputed basis instead"),
          limit(lim) {}
};

struct OracleMismatchError : Error {
    using Error::Error;
};

struct MalformedInputError : Error {
    using Error::Error;
};

// Text format problems, with 1-based line attribution.
struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string& reason)
        : Error("line " + std::to_string(ln) + ": " + reason), line(ln) {}
};

struct InvalidBinomialError : Error {
    int row;  // 1-based row in a basis file, or -1
    InvalidBinomialError(int r, const std::string& reason)
        : Error((r >= 0 ? "row " + std::to_string(r) + ": " : std::string()) + reason),
          row(r) {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

}  // namespace ugb

#endif
