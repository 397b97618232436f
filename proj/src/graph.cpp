#include "paintkit/graph.hpp"

#include "paintkit/errors.hpp"

#include <algorithm>
#include <string>

namespace paintkit {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
    VertexSet s;
    s.members_.resize(n);
    for (int i = 0; i < n; ++i)
        s.members_[i] = i;
    return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    VertexSet s;
    for (int i = 0; i < 64; ++i)
        if (mask >> i & 1)
            s.members_.push_back(i);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v)
        members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v)
        members_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    VertexSet r;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(r.members_));
    return r;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    VertexSet r;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(r.members_));
    return r;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    VertexSet r;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(r.members_));
    return r;
}

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw InvalidGraph("negative vertex count");
    adjacency_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    edges_.assign(edges.begin(), edges.end());
    for (const auto& e : edges_) {
        if (e.u == e.v)
            throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= vertex_count)
            throw InvalidGraph("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidGraph("repeated edge");
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : adjacency_)
        std::sort(row.begin(), row.end());
}

namespace {
std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> es) {
    std::vector<Edge> out;
    out.reserve(es.size());
    for (auto [a, b] : es)
        out.emplace_back(a, b);
    return out;
}
} // namespace

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count, std::span<const Edge>(to_edges(edges))) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!is_vertex(u) || !is_vertex(v))
        return false;
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        throw InvalidGraph("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& row : adjacency_)
        best = std::max(best, static_cast<int>(row.size()));
    return best;
}

int Graph::min_degree() const {
    if (adjacency_.empty())
        return 0;
    int best = static_cast<int>(adjacency_[0].size());
    for (const auto& row : adjacency_)
        best = std::min(best, static_cast<int>(row.size()));
    return best;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (vertex_count() > 64)
        throw CapExceeded("vertex count for bitmask adjacency", vertex_count(), 64);
    std::vector<std::uint64_t> rows(vertex_count(), 0);
    for (const auto& e : edges_) {
        rows[e.u] |= std::uint64_t{1} << e.v;
        rows[e.v] |= std::uint64_t{1} << e.u;
    }
    return rows;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    std::vector<Edge> es = edges_;
    es.emplace_back(u, v);
    return Graph(vertex_count(), es);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    std::vector<Edge> es;
    Edge gone(u, v);
    for (const auto& e : edges_)
        if (e != gone)
            es.push_back(e);
    return Graph(vertex_count(), es);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.from_host.assign(g.vertex_count(), -1);
    for (Vertex v : keep) {
        if (!g.is_vertex(v))
            throw InvalidGraph("vertex " + std::to_string(v) + " not in host graph");
        out.from_host[v] = static_cast<Vertex>(out.to_host.size());
        out.to_host.push_back(v);
    }
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (out.from_host[e.u] >= 0 && out.from_host[e.v] >= 0)
            es.emplace_back(out.from_host[e.u], out.from_host[e.v]);
    out.graph = Graph(static_cast<int>(out.to_host.size()), es);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    int shift = a.vertex_count();
    for (const auto& e : b.edges())
        es.emplace_back(e.u + shift, e.v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), es);
}

ProperColoring ProperColoring::from_colors(std::vector<int> colors) {
    ProperColoring c;
    c.classes = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    c.color = std::move(colors);
    return c;
}

bool is_proper_coloring(const Graph& g, const ProperColoring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        return false;
    for (int x : c.color)
        if (x < 0 || x >= c.classes)
            return false;
    for (const auto& e : g.edges())
        if (c.color[e.u] == c.color[e.v])
            return false;
    return true;
}

} // namespace paintkit
