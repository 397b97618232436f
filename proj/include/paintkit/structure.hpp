#pragma once

#include "paintkit/graph.hpp"
#include "paintkit/rng.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace paintkit {

struct DegeneracyOrdering {
    int degeneracy = 0;
    /// Removal order: order[0] is removed first. Every vertex has at most
    /// `degeneracy` neighbours appearing after it.
    std::vector<Vertex> order;

    int strict_degeneracy() const { return degeneracy + 1; }
};

/// Min-degree peeling, ties broken by lowest vertex id.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// The k-core: largest vertex set inducing minimum degree >= k (possibly empty).
VertexSet min_degree_core(const Graph& g, int k);

/// Sides (A, B) when g is bipartite; the lowest id of each component lands in A.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

/// Backtracking DSATUR search for a proper r-coloring.
std::optional<ProperColoring> proper_coloring(const Graph& g, int r);

int chromatic_number_exact(const Graph& g, int cap = 12);

struct RegularCompletion {
    Graph graph;
    /// embedding[v] is the id of v in the completed graph.
    std::vector<Vertex> embedding;
    /// Number of two-copy doublings used after the greedy step stalled.
    int doublings = 0;
};

/// d-regular bipartite supergraph of a bipartite g with maximum degree <= d.
/// Throws NotBipartite or DegreeExceeds.
RegularCompletion regular_bipartite_completion(const Graph& g, int d);

/// Vertex set inducing a bipartite subgraph whose minimum degree is at least
/// delta / (2r), r = coloring.classes. Searches pairs of colour classes with
/// low-degree peeling and falls back to exhaustive search on at most
/// `exhaustive_cap` vertices. The result is always checked before return;
/// throws WitnessNotFound when nothing qualifies.
VertexSet ekt_bipartite_subgraph(const Graph& g, const ProperColoring& coloring, int delta,
                                 int exhaustive_cap = 20);

/// Does `s` induce a bipartite subgraph with 2r * deg >= delta at every vertex?
bool is_ekt_witness(const Graph& g, const VertexSet& s, int r, int delta);

bool is_bipartite(const Graph& g);

// Generators used by tests, the CLI and the acceptance suite.
namespace generators {

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen();
Graph wheel(int rim);

Graph gnp(int n, double p, Rng& rng);
Graph random_tree(int n, Rng& rng);
/// Random bipartite graph on sides [0, a) and [a, a + b).
Graph random_bipartite(int a, int b, double p, Rng& rng);
/// Random d-regular bipartite graph with n vertices per side (sides [0,n), [n,2n)).
Graph random_regular_bipartite(int n, int d, Rng& rng);

struct PlantedColoring {
    Graph graph;
    ProperColoring coloring;
};

/// Random graph with a planted proper r-coloring and maximum degree <= d.
PlantedColoring planted_colorable(int n, int r, int d, double density, Rng& rng);

Graph bipartite_double_cover(const Graph& g);

} // namespace generators

} // namespace paintkit
