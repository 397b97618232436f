#pragma once

#include "paintkit/graph.hpp"
#include "paintkit/tokens.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace paintkit {

using Arc = std::pair<Vertex, Vertex>;

class Orientation {
public:
    Orientation() = default;
    /// Every edge directed from its lower to its higher endpoint.
    explicit Orientation(Graph host);
    /// Throws InvalidGraph unless the arcs cover every host edge exactly once.
    static Orientation from_arcs(Graph host, const std::vector<Arc>& arcs);

    const Graph& host() const { return host_; }
    /// Arc for edge index i of the host.
    Arc arc(std::size_t i) const;
    std::vector<Arc> arcs() const;
    void set_direction(Vertex tail, Vertex head);

    std::vector<int> out_degrees() const;
    std::vector<int> in_degrees() const;
    int max_out_degree() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    Graph host_;
    std::vector<char> forward_;
};

/// In-degree of every vertex is floor or ceil of half its degree. Built by
/// joining odd-degree vertices to an auxiliary vertex and following Euler
/// circuits, lowest-id unused edge first.
Orientation eulerian_split_orientation(const Graph& g);

struct OddCycle {
    bool found = false;
    /// c[0] -> c[1] -> ... -> c.back() -> c[0]
    std::vector<Vertex> cycle;
};

/// Per strongly connected component: an odd closed walk exists iff the
/// component admits no 2-labelling with every internal arc changing label.
OddCycle has_directed_odd_cycle(const Orientation& o);

struct ParityCount {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    friend bool operator==(const ParityCount&, const ParityCount&) = default;
};

/// Counts Eulerian spanning subdigraphs by parity of their arc count with a
/// recursion over edges memoised on the running imbalance of open vertices.
ParityCount eulerian_parity(const Orientation& o, int edge_cap = 62);

/// All-subsets enumeration.
ParityCount eulerian_parity_naive(const Orientation& o, int edge_cap = 26);

/// Orientation with out-degree below f(v) everywhere and EE != EO, if any.
/// Orientations are explored edge by edge (lower-to-higher direction first);
/// only one orientation per out-degree sequence is evaluated, since
/// |EE - EO| depends on the out-degree sequence alone.
std::optional<Orientation> is_f_alon_tarsi(const Graph& g, const TokenState& f, int edge_cap = 62);

/// Least constant k with g f-Alon-Tarsi for f == k.
int at_number(const Graph& g, int edge_cap = 62);

/// floor(4rd / (4r + 1)) + 1
int bounded_orientation_limit(int d, int r);

struct BoundedOrientation {
    Orientation orientation;
    /// Maximum allowed out-degree.
    int outdegree_limit = 0;
    /// Constant token value for which (g, value) is Alon-Tarsi: limit + 1.
    int alon_tarsi_value = 0;
    /// Bipartite pieces peeled off, in order.
    std::vector<VertexSet> layers;
};

/// Orientation with maximum out-degree at most bounded_orientation_limit(d, r)
/// and no directed odd cycle. Peels a min-degree core, extracts a bipartite
/// piece, orients it by eulerian_split_orientation with all cut edges leaving
/// it, and finishes with an acyclic degeneracy orientation. The result is
/// checked; throws VerificationFailed, DegreeExceeds or InvalidGraph.
BoundedOrientation odd_cycle_free_bounded_orientation(const Graph& g, int d, const ProperColoring& coloring);

} // namespace paintkit
