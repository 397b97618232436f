#pragma once

#include "paintkit/graph.hpp"
#include "paintkit/tokens.hpp"

#include <optional>
#include <vector>

namespace paintkit {

struct GadgetReport {
    int big_m = 0;   // maximum token value M
    int small_m = 0; // minimum token value m
    int spread = 0;  // D = M - m
    Vertex apex = 0;
    /// copies[i][x] is the id in the gadget of vertex x of the i-th copy.
    std::vector<std::vector<Vertex>> copies;
    /// Minimum-token vertices of each copy (the apex neighbourhood).
    std::vector<VertexSet> a_sets;
    /// Number of copies whose A-set received the extra token.
    int raised_copies = 0;
    /// Sequence for the gadget, present when one for the source pair was supplied
    /// and the replay succeeded.
    std::optional<Sd3Sequence> sequence;
    Verdict sequence_verdict;
};

struct Gadget {
    Graph graph;
    TokenState tokens;
    GadgetReport report;
};

/// M copies of H plus an apex adjacent to every minimum-token vertex; the apex
/// gets M tokens and the minimum-token vertices of the raised copies one more.
/// By default all M copies are raised, which lowers the spread by exactly one;
/// `raise_all_copies = false` raises only the first m copies. When
/// `source_sequence` certifies (H, h), the gadget's own sequence (apex reduced
/// to one token, every apex edge charged to the copy side, then the source
/// sequence per copy) is built and replayed. Throws ConstantInput.
Gadget build_nonconstant_gadget(const Graph& h_graph, const TokenState& h, const Sd3Sequence* source_sequence = nullptr,
                                bool raise_all_copies = true);

} // namespace paintkit
