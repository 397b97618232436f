#pragma once

#include "paintkit/errors.hpp"
#include "paintkit/graph.hpp"
#include "paintkit/lll.hpp"
#include "paintkit/star.hpp"
#include "paintkit/tokens.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace paintkit {

/// A pipeline could not produce a scheme that replays. Carries the trace
/// gathered so far; this is a reportable outcome, not a bug.
class PipelineFailed : public Error {
  public:
    PipelineFailed(std::string phase, Vertex vertex, const std::string& detail, nlohmann::json trace = {});
    std::string phase;
    /// -1 when the failure is not tied to a vertex.
    Vertex vertex;
    nlohmann::json trace;
};

struct PhaseLog {
    /// "B0".."B<beta>", "A-S", "B*", "S", or "greedy".
    std::string name;
    std::vector<DelSaveStep> steps;
    /// Smallest token count among remaining vertices after the phase.
    int min_tokens_after = 0;
};

struct SchemePipelineTrace {
    PartitionPlan plan;
    std::vector<BadEvent> resampled;
    StarSystem stars;
    int save_budget = 0;
    std::vector<PhaseLog> phases;
    /// At the start of phase B_m (m >= 1): largest token count on S, and c d / m.
    std::vector<double> s_tokens_at_phase, s_gate_at_phase;
    bool s_gate_ok = true;
    /// Every b in B_m had more tokens than m times the largest saved count.
    bool legality_margin_ok = true;
    /// Every b in B* has more neighbours in S than deg(b) - f(b).
    bool b_star_protected = true;

    nlohmann::json to_json() const;
};

struct BipartiteSchemeOptions {
    double alpha = 1;
    /// Degree bound d; defaults to the maximum degree.
    std::optional<int> d;
    /// s in f(v) = deg(v) - s; defaults to floor(alpha / 1000 * sqrt(d ln d)).
    std::optional<int> save_budget;
    std::uint64_t seed = 0;
    std::map<std::string, double> overrides;
    long long resample_budget = 100000;
    std::optional<std::pair<VertexSet, VertexSet>> sides;
};

struct BipartiteScheme {
    RemovalScheme scheme;
    TokenState tokens;
    SchemePipelineTrace trace;
};

int default_save_budget(double alpha, int d);

/// Partition, star system, then deletions: B_0..B_beta saving N_H(b), then
/// A - S, B*, S saving nothing, ascending ids within a phase. The scheme is
/// replayed against f(v) = deg(v) - s before return; every failure (tokens
/// below 1, resampling budget, ratio check, replay) becomes PipelineFailed.
/// Throws NotBipartite and DegreeExceeds on bad input.
BipartiteScheme build_bipartite_scheme(const Graph& g, const BipartiteSchemeOptions& options = {});

struct ChromaticSchemeOptions {
    std::uint64_t seed = 0;
    std::map<std::string, double> overrides;
    /// Defaults to floor(c sqrt(d ln d)) with c = 1/(4000 r).
    std::optional<int> save_budget;
    long long resample_budget = 100000;
};

struct ChromaticLevel {
    VertexSet core;
    /// Host ids of the bipartite piece removed at this level.
    VertexSet piece;
    int piece_min_degree = 0;
    SchemePipelineTrace trace;
};

struct ChromaticScheme {
    RemovalScheme scheme;
    TokenState tokens;
    std::vector<ChromaticLevel> levels;
    /// Vertices handled by the final greedy scheme, in deletion order.
    std::vector<Vertex> greedy_order;

    nlohmann::json trace_json() const;
};

/// Peels pieces while the degeneracy is at least d/2: the ceil(d/2)-core, a
/// bipartite piece of it with minimum degree >= d/(4r) from two colour
/// classes, removed. The rest gets a greedy scheme; the pieces follow in
/// reverse order of extraction, each with a bipartite pipeline scheme adapted
/// to the tokens it actually holds. Tokens f = d - floor(c sqrt(d ln d)).
ChromaticScheme build_chromatic_scheme(const Graph& g, int d, const ProperColoring& coloring,
                                       const ChromaticSchemeOptions& options = {});

} // namespace paintkit
