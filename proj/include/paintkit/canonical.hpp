#pragma once

#include "paintkit/graph.hpp"

#include <string>
#include <vector>

namespace paintkit {

struct CanonicalLabeling {
    /// Isomorphism-invariant code of the (optionally vertex-coloured) graph.
    std::string code;
    /// order[i] is the vertex placed at canonical position i.
    std::vector<Vertex> order;
};

/// Equal codes iff the graphs are isomorphic. Cells from colour refinement
/// fix the position blocks; within a block the minimum adjacency code is found
/// by branch and bound, skipping orderings that only permute twins.
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors = {}, int cap = 10);

/// Throws CapExceeded above `cap` vertices.
std::string canonical_form(const Graph& g, int cap = 10);

/// Code for a graph with integer vertex labels (token counts in the solvers);
/// isomorphisms must preserve labels.
std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors, int cap = 10);

} // namespace paintkit
