#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paintkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact search or structural routine was asked to go beyond its configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::string what, long long value, long long cap)
        : Error(what + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap)),
          quantity(std::move(what)), value(value), cap(cap) {}

    std::string quantity;
    long long value;
    long long cap;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class NotBipartite : public Error {
public:
    NotBipartite() : Error("graph is not bipartite") {}
};

class DegreeExceeds : public Error {
public:
    DegreeExceeds(int vertex, int degree, int bound)
        : Error("vertex " + std::to_string(vertex) + " has degree " + std::to_string(degree) +
                " above " + std::to_string(bound)),
          vertex(vertex) {}
    int vertex;
};

class WitnessNotFound : public Error {
public:
    using Error::Error;
};

/// A constructive routine produced an output that failed its own post-check.
/// Always an implementation bug where the underlying existence result applies.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

/// Structured parse failure with the byte offset (or 1-based line for text formats).
class ParseError : public Error {
public:
    enum class Kind {
        MalformedHeader,
        TruncatedBitVector,
        NonPrintableByte,
        TrailingBytes,
        NonzeroPadding,
        SelfLoop,
        DuplicateEdge,
        Syntax,
    };

    ParseError(Kind kind, std::size_t position, const std::string& detail)
        : Error(std::string(kind_name(kind)) + " at " + std::to_string(position) + ": " + detail),
          kind(kind), position(position) {}

    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::MalformedHeader: return "MalformedHeader";
        case Kind::TruncatedBitVector: return "TruncatedBitVector";
        case Kind::NonPrintableByte: return "NonPrintableByte";
        case Kind::TrailingBytes: return "TrailingBytes";
        case Kind::NonzeroPadding: return "NonzeroPadding";
        case Kind::SelfLoop: return "SelfLoop";
        case Kind::DuplicateEdge: return "DuplicateEdge";
        case Kind::Syntax: return "ParseError";
        }
        return "ParseError";
    }

    Kind kind;
    std::size_t position;
};

class SchemaViolation : public Error {
public:
    SchemaViolation(std::string path, const std::string& detail)
        : Error("schema violation at " + path + ": " + detail), path(std::move(path)) {}
    std::string path;
};

class HashMismatch : public Error {
public:
    HashMismatch(const std::string& expected, const std::string& actual)
        : Error("graph hash mismatch: witness has " + expected + ", graph is " + actual) {}
};

} // namespace paintkit
