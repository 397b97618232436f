#include "paintkit/structure.hpp"

#include "paintkit/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace paintkit {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    DegeneracyOrdering out;
    out.order.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, d);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.emplace(deg[w], w);
        }
    }
    return out;
}

VertexSet min_degree_core(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::deque<Vertex> work;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            gone[v] = 1;
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        Vertex v = work.front();
        work.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (gone[w])
                continue;
            if (--deg[w] < k) {
                gone[w] = 1;
                work.push_back(w);
            }
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v])
            keep.push_back(v);
    return VertexSet(std::move(keep));
}

namespace {

std::optional<std::vector<int>> two_color(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (side[root] >= 0)
            continue;
        side[root] = 0;
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

} // namespace

bool is_bipartite(const Graph& g) { return two_color(g).has_value(); }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    auto side = two_color(g);
    if (!side)
        return std::nullopt;
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        ((*side)[v] == 0 ? a : b).push_back(v);
    return std::make_pair(VertexSet(std::move(a)), VertexSet(std::move(b)));
}

namespace {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, int r) : g_(g), r_(r), color_(g.vertex_count(), -1),
        forbidden_(g.vertex_count(), std::vector<int>(r, 0)) {}

    bool run() { return extend(0, 0); }
    std::vector<int> colors() const { return color_; }

private:
    Vertex pick() const {
        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (color_[v] >= 0)
                continue;
            int sat = 0;
            for (int c = 0; c < r_; ++c)
                sat += forbidden_[v][c] > 0;
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend(int colored, int used) {
        if (colored == g_.vertex_count())
            return true;
        Vertex v = pick();
        int limit = std::min(r_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden_[v][c])
                continue;
            color_[v] = c;
            for (Vertex w : g_.neighbors(v))
                ++forbidden_[w][c];
            if (extend(colored + 1, std::max(used, c + 1)))
                return true;
            for (Vertex w : g_.neighbors(v))
                --forbidden_[w][c];
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int r_;
    std::vector<int> color_;
    std::vector<std::vector<int>> forbidden_;
};

} // namespace

std::optional<ProperColoring> proper_coloring(const Graph& g, int r) {
    if (g.vertex_count() == 0)
        return ProperColoring{{}, std::max(r, 0)};
    if (r <= 0)
        return std::nullopt;
    DsaturSearch search(g, r);
    if (!search.run())
        return std::nullopt;
    ProperColoring c;
    c.color = search.colors();
    c.classes = r;
    return c;
}

int chromatic_number_exact(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapExceeded("vertex count for chromatic number", g.vertex_count(), cap);
    for (int r = 0;; ++r)
        if (proper_coloring(g, r))
            return r;
}

namespace {

struct Workspace {
    std::vector<std::vector<Vertex>> adj;
    std::vector<int> side;

    int size() const { return static_cast<int>(adj.size()); }
    bool adjacent(Vertex u, Vertex v) const {
        const auto& row = adj[u];
        return std::find(row.begin(), row.end(), v) != row.end();
    }
    void connect(Vertex u, Vertex v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    Vertex add(int s) {
        adj.emplace_back();
        side.push_back(s);
        return size() - 1;
    }
};

// Largest-deficiency-first completion after padding both sides to a common size.
bool greedy_complete(Workspace& w, int d) {
    int count[2] = {0, 0};
    for (int s : w.side)
        ++count[s];
    int target = std::max({count[0], count[1], d});
    for (int s = 0; s < 2; ++s)
        while (count[s] < target) {
            w.add(s);
            ++count[s];
        }
    auto deficiency = [&](Vertex v) { return d - static_cast<int>(w.adj[v].size()); };
    for (;;) {
        Vertex a = -1;
        for (Vertex v = 0; v < w.size(); ++v)
            if (w.side[v] == 0 && deficiency(v) > 0 && (a < 0 || deficiency(v) > deficiency(a)))
                a = v;
        if (a < 0)
            break;
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < w.size(); ++v)
            if (w.side[v] == 1 && deficiency(v) > 0 && !w.adjacent(a, v))
                cand.push_back(v);
        std::stable_sort(cand.begin(), cand.end(),
                         [&](Vertex x, Vertex y) { return deficiency(x) > deficiency(y); });
        int need = deficiency(a);
        if (static_cast<int>(cand.size()) < need)
            return false;
        for (int i = 0; i < need; ++i)
            w.connect(a, cand[i]);
    }
    for (Vertex v = 0; v < w.size(); ++v)
        if (deficiency(v) != 0)
            return false;
    return true;
}

// Two copies with side roles swapped in the second; deficient vertices are
// joined to their twins, raising their degree by one.
Workspace doubled(const Workspace& w, int d) {
    Workspace out;
    const int n = w.size();
    out.adj.resize(2 * n);
    out.side.resize(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        out.side[v] = w.side[v];
        out.side[v + n] = 1 - w.side[v];
        for (Vertex x : w.adj[v]) {
            out.adj[v].push_back(x);
            out.adj[v + n].push_back(x + n);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(w.adj[v].size()) < d)
            out.connect(v, v + n);
    return out;
}

} // namespace

RegularCompletion regular_bipartite_completion(const Graph& g, int d) {
    auto sides = two_color(g);
    if (!sides)
        throw NotBipartite();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > d)
            throw DegreeExceeds(v, g.degree(v), d);

    Workspace base;
    base.side = *sides;
    base.adj.resize(g.vertex_count());
    for (const auto& e : g.edges())
        base.connect(e.u, e.v);

    RegularCompletion out;
    Workspace current = base;
    for (;;) {
        Workspace attempt = current;
        if (greedy_complete(attempt, d)) {
            std::vector<Edge> es;
            for (Vertex v = 0; v < attempt.size(); ++v)
                for (Vertex x : attempt.adj[v])
                    if (v < x)
                        es.emplace_back(v, x);
            out.graph = Graph(attempt.size(), es);
            break;
        }
        current = doubled(current, d);
        ++out.doublings;
    }
    out.embedding.resize(g.vertex_count());
    std::iota(out.embedding.begin(), out.embedding.end(), 0);
    return out;
}

bool is_ekt_witness(const Graph& g, const VertexSet& s, int r, int delta) {
    if (s.empty())
        return false;
    auto sub = induced_subgraph(g, s);
    if (!is_bipartite(sub.graph))
        return false;
    for (Vertex v = 0; v < sub.graph.vertex_count(); ++v)
        if (2LL * r * sub.graph.degree(v) < delta)
            return false;
    return true;
}

VertexSet ekt_bipartite_subgraph(const Graph& g, const ProperColoring& coloring, int delta,
                                 int exhaustive_cap) {
    if (!is_proper_coloring(g, coloring))
        throw InvalidGraph("coloring is not proper");
    const int r = std::max(coloring.classes, 1);
    // smallest integer degree k with 2rk >= delta
    const int threshold = delta <= 0 ? 0 : (delta + 2 * r - 1) / (2 * r);

    for (int i = 0; i < coloring.classes; ++i) {
        for (int j = i + 1; j < coloring.classes; ++j) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (coloring.color[v] == i || coloring.color[v] == j)
                    members.push_back(v);
            auto sub = induced_subgraph(g, VertexSet(members));
            auto core = min_degree_core(sub.graph, threshold);
            if (core.empty())
                continue;
            std::vector<Vertex> lifted;
            for (Vertex v : core)
                lifted.push_back(sub.to_host[v]);
            VertexSet result(std::move(lifted));
            if (is_ekt_witness(g, result, r, delta))
                return result;
        }
    }
    if (threshold == 0 && g.vertex_count() > 0)
        return VertexSet{0};

    if (g.vertex_count() > exhaustive_cap)
        throw WitnessNotFound("no colour-class pair qualified and the graph is above the exhaustive cap");
    const int n = g.vertex_count();
    for (std::uint64_t mask = (std::uint64_t{1} << n) - 1; mask > 0; --mask) {
        VertexSet s = VertexSet::from_mask(mask);
        if (is_ekt_witness(g, s, r, delta))
            return s;
    }
    throw WitnessNotFound("no induced bipartite subgraph meets the degree bound");
}

namespace generators {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.emplace_back(i, j);
    return Graph(n, es);
}

Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i)
        es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int>& parts) {
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i)
            part_of.push_back(static_cast<int>(p));
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j])
                es.emplace_back(i, j);
    return Graph(n, es);
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

Graph wheel(int rim) {
    std::vector<Edge> es;
    for (int i = 0; i < rim; ++i) {
        es.emplace_back(0, 1 + i);
        es.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return Graph(rim + 1, es);
}

Graph gnp(int n, double p, Rng& rng) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p))
                es.emplace_back(i, j);
    return Graph(n, es);
}

Graph random_tree(int n, Rng& rng) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i)
        es.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(i))), i);
    return Graph(n, es);
}

Graph random_bipartite(int a, int b, double p, Rng& rng) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (rng.bernoulli(p))
                es.emplace_back(i, a + j);
    return Graph(a + b, es);
}

namespace {

// Union of d edge-disjoint random perfect matchings on n + n vertices.
std::vector<std::vector<char>> sparse_regular_bipartite(int n, int d, Rng& rng) {
    for (;;) {
        std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
        bool ok = true;
        for (int round = 0; round < d && ok; ++round) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm.begin(), perm.end());
            int budget = 50 * n * (d + 1);
            for (;;) {
                int bad = -1;
                for (int i = 0; i < n; ++i)
                    if (used[i][perm[i]]) {
                        bad = i;
                        break;
                    }
                if (bad < 0)
                    break;
                if (--budget < 0) {
                    ok = false;
                    break;
                }
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (!used[bad][perm[j]] && !used[j][perm[bad]])
                    std::swap(perm[bad], perm[j]);
            }
            if (ok)
                for (int i = 0; i < n; ++i)
                    used[i][perm[i]] = 1;
        }
        if (ok)
            return used;
    }
}

} // namespace

Graph random_regular_bipartite(int n, int d, Rng& rng) {
    if (d < 0 || d > n)
        throw InvalidGraph("regular bipartite degree out of range");
    const bool complement = 2 * d > n;
    auto used = sparse_regular_bipartite(n, complement ? n - d : d, rng);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (static_cast<bool>(used[i][j]) != complement)
                es.emplace_back(i, n + j);
    return Graph(2 * n, es);
}

PlantedColoring planted_colorable(int n, int r, int d, double density, Rng& rng) {
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = v < r ? v : static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    rng.shuffle(color.begin(), color.end());
    std::vector<Edge> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (color[i] != color[j])
                candidates.emplace_back(i, j);
    rng.shuffle(candidates.begin(), candidates.end());
    std::vector<int> deg(n, 0);
    std::vector<Edge> es;
    for (const auto& e : candidates) {
        if (deg[e.u] >= d || deg[e.v] >= d)
            continue;
        if (!rng.bernoulli(density))
            continue;
        es.push_back(e);
        ++deg[e.u];
        ++deg[e.v];
    }
    PlantedColoring out{Graph(n, es), ProperColoring::from_colors(color)};
    out.coloring.classes = std::max(out.coloring.classes, r);
    return out;
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        es.emplace_back(e.u, n + e.v);
        es.emplace_back(e.v, n + e.u);
    }
    return Graph(2 * n, es);
}

} // namespace generators

} // namespace paintkit
