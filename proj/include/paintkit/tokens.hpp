#pragma once

#include "paintkit/errors.hpp"
#include "paintkit/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace paintkit {

/// Token count per vertex id.
using TokenState = std::vector<int>;

struct DelSaveStep {
    Vertex vertex = 0;
    VertexSet save;

    friend bool operator==(const DelSaveStep&, const DelSaveStep&) = default;
};

struct RemovalScheme {
    std::vector<DelSaveStep> steps;

    friend bool operator==(const RemovalScheme&, const RemovalScheme&) = default;
};

struct Sd3Op {
    enum class Kind { ReduceValue, EdgeDelete };
    Kind kind = Kind::ReduceValue;
    Vertex v = 0;
    /// Only for EdgeDelete: v pays w's token count.
    Vertex w = -1;

    static Sd3Op reduce(Vertex v) { return {Kind::ReduceValue, v, -1}; }
    static Sd3Op edge_delete(Vertex v, Vertex w) { return {Kind::EdgeDelete, v, w}; }

    friend bool operator==(const Sd3Op&, const Sd3Op&) = default;
};

struct Sd3Sequence {
    std::vector<Sd3Op> ops;

    friend bool operator==(const Sd3Sequence&, const Sd3Sequence&) = default;
};

class IllegalSave : public Error {
public:
    using Error::Error;
};

class InvalidStep : public Error {
public:
    using Error::Error;
};

class TokenExhausted : public Error {
public:
    explicit TokenExhausted(Vertex v) : Error("vertex " + std::to_string(v) + " ran out of tokens"), vertex(v) {}
    Vertex vertex;
};

class RestrictionViolated : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    HypothesisViolated(Vertex v, const std::string& detail) : Error(detail), vertex(v) {}
    Vertex vertex;
};

class ConstantInput : public Error {
public:
    ConstantInput() : Error("token function is constant") {}
};

/// Vertices still present plus their token counts, indexed by host vertex id.
struct Position {
    std::vector<char> present;
    TokenState tokens;

    static Position start(const Graph& g, const TokenState& f);
    int remaining() const;
};

/// One DelSave step. Throws InvalidStep (vertex absent or W not inside its
/// remaining neighbourhood), RestrictionViolated, IllegalSave (budget) or
/// TokenExhausted (lowest such vertex).
Position apply_delsave(const Graph& g, const Position& at, const DelSaveStep& step, bool restricted);

struct Verdict {
    bool accepted = true;
    /// Index of the first failing step, or -1 when the failure is terminal
    /// (IncompleteDeletion, EdgesRemain) or when accepted.
    int failing_step = -1;
    std::string cause;
    std::string detail;

    explicit operator bool() const { return accepted; }
};

Verdict verify_removal_scheme(const Graph& g, const TokenState& f, const RemovalScheme& s, bool restricted);

/// Replays ReduceValue/EdgeDelete; every token must stay >= 1 after every operation.
Verdict verify_sd3_sequence(const Graph& g, const TokenState& f, const Sd3Sequence& s);

/// Sum of tokens strictly above the edge count.
bool edge_count_condition(const Graph& g, const TokenState& f);

struct MinusOneResult {
    Graph graph;
    TokenState tokens;
    RemovalScheme scheme;
    /// to_host[new_id] = id in the input graph.
    std::vector<Vertex> to_host;
};

/// Scheme for (G - v, h) where h = g - 1 on N(v). Requires every neighbour
/// deleted before v to save v, and v to save no neighbour deleted after it.
/// Throws HypothesisViolated naming the offending neighbour, or
/// VerificationFailed if the output does not replay.
MinusOneResult minus_one_transform(const Graph& g, const TokenState& tokens, const RemovalScheme& s, Vertex v);

/// Pairs (b, a): b is deleted before its neighbour a and does not save a.
std::set<std::pair<Vertex, Vertex>> hurts_relation(const Graph& g, const RemovalScheme& s);

/// Steps deleting kept vertices, with save sets intersected with `keep`.
/// Legality is not implied; verify the result.
RemovalScheme restrict_scheme(const RemovalScheme& s, const VertexSet& keep);

/// Given a scheme accepted for tokens `reference`, builds one for `actual`
/// when actual >= reference pointwise, by dropping saves of vertices whose
/// current count differs from the reference replay.
RemovalScheme adapt_scheme_to_tokens(const Graph& g, const TokenState& reference, const TokenState& actual,
                                     const RemovalScheme& s);

/// Greedy scheme along the given order, saving nothing.
RemovalScheme greedy_scheme(const std::vector<Vertex>& order);

int token_spread(const TokenState& f);

} // namespace paintkit
