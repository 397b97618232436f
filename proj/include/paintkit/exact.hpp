#pragma once

#include "paintkit/graph.hpp"
#include "paintkit/tokens.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace paintkit {

/// Caps for the exhaustive searches. Exceeding any of them throws CapExceeded.
struct ExactLimits {
    int vertex_cap = 8;
    int token_cap = 8;
    /// Maximum number of search nodes; 0 means unlimited.
    long long node_budget = 0;
};

inline constexpr ExactLimits kChoosabilityLimits{8, 8, 0};
inline constexpr ExactLimits kPaintingLimits{8, 6, 0};
inline constexpr ExactLimits kDpPaintingLimits{5, 4, 0};
inline constexpr ExactLimits kSd3Limits{7, 6, 0};
inline constexpr ExactLimits kRemovabilityLimits{8, 8, 0};

// ---- choosability ----

using ListAssignment = std::vector<std::vector<int>>;

struct ChoosabilityResult {
    bool choosable = true;
    /// A non-colourable f-assignment when choosable is false.
    std::optional<ListAssignment> bad_lists;
};

/// Decides f-choosability. Non-choosability is inherited by supergraphs, so the
/// search recurses on vertex subsets; only subsets whose proper subsets are all
/// choosable are searched directly, and there only assignments in which every
/// colour class spans an edge (a colour on an independent class can be given to
/// all of its vertices at once). Colour classes are enumerated as multisets, so
/// colour relabellings are not revisited.
ChoosabilityResult is_f_choosable(const Graph& g, const TokenState& f, const ExactLimits& limits = kChoosabilityLimits);
int choosability(const Graph& g, const ExactLimits& limits = kChoosabilityLimits);

/// Proper colouring from the lists, if one exists.
std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists);

// ---- painting game ----

struct PolicyEntry {
    VertexSet remaining;
    /// Token counts of the remaining vertices, indexed by host id (0 elsewhere).
    TokenState tokens;
    VertexSet lister;
    VertexSet painter;
};

struct PaintingStrategy {
    TokenState tokens;
    /// One entry per reachable position and non-empty Lister move.
    std::vector<PolicyEntry> policy;
};

/// Painter wins iff for every non-empty S there is an independent I within S,
/// containing every vertex of S that would lose its last token, after which
/// Painter still wins. Only maximal such I are tried; vertices holding more
/// tokens than their degree are dropped; positions are memoised by canonical
/// form with tokens as vertex labels.
bool is_f_paintable(const Graph& g, const TokenState& f, const ExactLimits& limits = kPaintingLimits);
int paintability(const Graph& g, const ExactLimits& limits = kPaintingLimits);

/// Complete Painter policy over every reachable position; throws CapExceeded
/// above `policy_cap` entries. Empty optional when Lister wins.
std::optional<PaintingStrategy> painting_strategy(const Graph& g, const TokenState& f, std::size_t policy_cap = 200000,
                                                  const ExactLimits& limits = kPaintingLimits);

Verdict verify_painting_strategy(const Graph& g, const PaintingStrategy& s);

// ---- DP-painting game ----

/// Lister removes g(v) <= t(v) tokens (not all zero) and builds a cover with
/// cliques of size g(v) and matchings along edges; Painter marks the vertices
/// hit by an independent set of the cover. Marked vertices leave the game.
/// Lister only needs maximum matchings; along a spanning forest of the support
/// the matchings are fixed up to relabelling the child's list, other edges
/// enumerate all maximum matchings. Painter only tries maximal marked sets.
bool is_dp_f_paintable(const Graph& g, const TokenState& f, const ExactLimits& limits = kDpPaintingLimits);
int dp_paintability(const Graph& g, const ExactLimits& limits = kDpPaintingLimits);

/// Single-turn game: Lister removes every token at once (DP-colouring).
bool is_dp_f_colorable(const Graph& g, const TokenState& f, const ExactLimits& limits = kDpPaintingLimits);

// ---- strict type-3 degeneracy ----

/// Memoised search over ReduceValue and EdgeDelete with tokens kept >= 1.
/// A vertex holding more than the sum of its neighbours' tokens has all its
/// edges charged to it at once. The returned sequence replays.
std::optional<Sd3Sequence> is_sd3_degenerate(const Graph& g, const TokenState& f,
                                             const ExactLimits& limits = kSd3Limits);
int sd3(const Graph& g, const ExactLimits& limits = kSd3Limits);

// ---- removability ----

struct RemovabilityOptions {
    bool restricted = false;
    /// Cut positions whose token sum does not exceed their edge count.
    bool edge_count_pruning = true;
};

/// Depth-first search over (vertex, save set) with memoisation on canonical
/// positions. Only inclusion-maximal affordable save sets are tried and
/// vertices holding more tokens than their degree are deleted last. The
/// returned scheme replays.
std::optional<RemovalScheme> removability(const Graph& g, const TokenState& f, const RemovabilityOptions& options = {},
                                          const ExactLimits& limits = kRemovabilityLimits);
int removability_number(const Graph& g, bool restricted, const ExactLimits& limits = kRemovabilityLimits);

} // namespace paintkit
