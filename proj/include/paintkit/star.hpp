#pragma once

#include "paintkit/errors.hpp"
#include "paintkit/graph.hpp"
#include "paintkit/lll.hpp"

#include <vector>

namespace paintkit {

class Infeasible : public Error {
  public:
    Infeasible(VertexSet hall_set, int neighborhood, int t);
    /// Vertices of S whose neighbourhood has fewer than t * |hall_set| vertices.
    VertexSet hall_set;
    int neighborhood;
    int t;
};

/// Partial map B -> S with g(b) in N(b) and exactly t preimages at every s,
/// from a unit-capacity max flow (augmenting paths found by BFS in vertex id
/// order). Only edges between `b_side` and `s_side` are used. Entries are -1
/// where undefined. Throws Infeasible with a Hall violator.
std::vector<Vertex> star_saturating_map(const Graph& g, const VertexSet& b_side, const VertexSet& s_side, int t);

class RatioViolated : public Error {
  public:
    RatioViolated(int m, int z, int q1, int q2, int t);
    int m, z;
    /// Largest residual degree of B_m into S, smallest of S into B_m.
    int q1, q2;
    int t;
};

struct StarSystem {
    /// t_m = ceil(c p_m / p_S) and d_m = m t_m, for m = 0..beta.
    std::vector<int> t;
    std::vector<int> target;
    /// Edges of H_m; h[0] is empty.
    std::vector<std::vector<Edge>> h;
    /// N_H(v) over all m.
    std::vector<VertexSet> saved_by;
};

/// H_m as the union of m star forests, each from star_saturating_map with
/// t = t_m on the edges of G[S cup B_m] not used yet. Before each round the
/// hypothesis t * q1 <= q2 is checked on the residual degrees (RatioViolated
/// when it fails or when S is non-empty and B_m has no edges into it). The
/// degree invariants are rechecked before return (VerificationFailed).
StarSystem build_star_system(const Graph& g, const PartitionPlan& plan);

/// Recount of the degree invariants: deg_{H_m}(s) == d_m for s in S,
/// deg_{H_m}(b) <= m for b in B_m, edges inside G[S cup B_m].
bool check_star_system(const Graph& g, const PartitionPlan& plan, const StarSystem& sys);

} // namespace paintkit
