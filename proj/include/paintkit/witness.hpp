#pragma once

#include "paintkit/exact.hpp"
#include "paintkit/graph.hpp"
#include "paintkit/orientation.hpp"
#include "paintkit/tokens.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace paintkit {

inline constexpr int kWitnessVersion = 1;

struct WitnessDocument {
    /// orientation, removal-scheme, sd3-sequence, painting-strategy or parameter-report
    std::string kind;
    int version = kWitnessVersion;
    std::string graph_hash;
    nlohmann::json payload;

    friend bool operator==(const WitnessDocument&, const WitnessDocument&) = default;
};

/// "fnv1a64:" followed by the hex FNV-1a digest of the graph6 encoding.
/// Witnesses name vertices by id, so the digest is of the labelled graph.
std::string graph_hash(const Graph& g);

/// Deterministic JSON text (sorted keys, two-space indent, trailing newline).
std::string encode_witness(const WitnessDocument& doc);

/// Parses and validates the schema. With a graph, also checks graph_hash
/// (HashMismatch) and that ids, arcs and save sets fit the graph
/// (SchemaViolation with a JSON path).
WitnessDocument decode_witness(std::string_view text, const Graph* g = nullptr);

/// Schema check of an already parsed document; same errors as decode_witness.
void validate_witness(const WitnessDocument& doc, const Graph* g = nullptr);

// Orientation payload: arcs plus the property the orientation certifies.
enum class OrientationClaim { OddCycleFree, AlonTarsi };

WitnessDocument orientation_witness(const Orientation& o, OrientationClaim claim, int outdegree_limit);

struct OrientationWitness {
    Orientation orientation;
    OrientationClaim claim = OrientationClaim::OddCycleFree;
    int outdegree_limit = 0;
};
OrientationWitness read_orientation_witness(const WitnessDocument& doc, const Graph& g);

WitnessDocument removal_witness(const Graph& g, const TokenState& f, const RemovalScheme& s, bool restricted,
                                const std::optional<nlohmann::json>& trace = std::nullopt);

struct RemovalWitness {
    TokenState tokens;
    bool restricted = false;
    RemovalScheme scheme;
};
RemovalWitness read_removal_witness(const WitnessDocument& doc);

WitnessDocument sd3_witness(const Graph& g, const TokenState& f, const Sd3Sequence& s);

struct Sd3Witness {
    TokenState tokens;
    Sd3Sequence sequence;
};
Sd3Witness read_sd3_witness(const WitnessDocument& doc);

WitnessDocument painting_witness(const Graph& g, const PaintingStrategy& s);
PaintingStrategy read_painting_witness(const WitnessDocument& doc);

/// Replays the certificate in the document against g.
Verdict verify_witness(const WitnessDocument& doc, const Graph& g);

} // namespace paintkit
