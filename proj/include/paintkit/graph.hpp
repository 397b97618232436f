#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace paintkit {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);

    static VertexSet range(int n);
    static VertexSet from_mask(std::uint64_t mask);

    bool contains(Vertex v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Vertex>& members() const { return members_; }

    void insert(Vertex v);
    void erase(Vertex v);

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    /// Throws InvalidGraph on out-of-range ids, self-loops or repeated edges.
    Graph(int vertex_count, std::span<const Edge> edges);
    Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool is_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

    /// Edges sorted lexicographically by (u, v) with u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_index(Vertex u, Vertex v) const;

    int max_degree() const;
    int min_degree() const;

    /// Bitmask adjacency rows; only valid for graphs with at most 64 vertices.
    std::vector<std::uint64_t> adjacency_masks() const;

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

struct InducedSubgraph {
    Graph graph;
    /// to_host[new_id] = old_id
    std::vector<Vertex> to_host;
    /// from_host[old_id] = new_id, or -1 when the vertex is not kept
    std::vector<Vertex> from_host;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Proper vertex coloring with colors 0..classes-1.
struct ProperColoring {
    std::vector<int> color;
    int classes = 0;

    static ProperColoring from_colors(std::vector<int> colors);
};

bool is_proper_coloring(const Graph& g, const ProperColoring& c);

} // namespace paintkit
