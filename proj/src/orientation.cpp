#include "paintkit/orientation.hpp"

#include "paintkit/errors.hpp"
#include "paintkit/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace paintkit {

Orientation::Orientation(Graph host) : host_(std::move(host)), forward_(host_.edge_count(), 1) {}

Orientation Orientation::from_arcs(Graph host, const std::vector<Arc>& arcs) {
    Orientation o(std::move(host));
    if (arcs.size() != o.host_.edge_count())
        throw InvalidGraph("orientation has " + std::to_string(arcs.size()) + " arcs for " +
                           std::to_string(o.host_.edge_count()) + " edges");
    std::vector<char> seen(arcs.size(), 0);
    for (auto [a, b] : arcs) {
        if (!o.host_.has_edge(a, b))
            throw InvalidGraph("arc " + std::to_string(a) + "->" + std::to_string(b) + " is not a host edge");
        std::size_t i = o.host_.edge_index(a, b);
        if (seen[i])
            throw InvalidGraph("edge " + std::to_string(a) + "-" + std::to_string(b) + " oriented twice");
        seen[i] = 1;
        o.forward_[i] = a < b;
    }
    return o;
}

Arc Orientation::arc(std::size_t i) const {
    const Edge& e = host_.edges()[i];
    return forward_[i] ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i)
        out.push_back(arc(i));
    return out;
}

void Orientation::set_direction(Vertex tail, Vertex head) { forward_[host_.edge_index(tail, head)] = tail < head; }

std::vector<int> Orientation::out_degrees() const {
    std::vector<int> out(host_.vertex_count(), 0);
    for (std::size_t i = 0; i < forward_.size(); ++i)
        ++out[arc(i).first];
    return out;
}

std::vector<int> Orientation::in_degrees() const {
    std::vector<int> in(host_.vertex_count(), 0);
    for (std::size_t i = 0; i < forward_.size(); ++i)
        ++in[arc(i).second];
    return in;
}

int Orientation::max_out_degree() const {
    auto out = out_degrees();
    return out.empty() ? 0 : *std::max_element(out.begin(), out.end());
}

Orientation eulerian_split_orientation(const Graph& g) {
    const int n = g.vertex_count();
    const int aux = n;
    // (neighbour, edge id); host edges keep their index, auxiliary edges follow
    std::vector<std::vector<std::pair<Vertex, int>>> adj(n + 1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        adj[e.u].emplace_back(e.v, static_cast<int>(i));
        adj[e.v].emplace_back(e.u, static_cast<int>(i));
    }
    int next_id = static_cast<int>(g.edge_count());
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1) {
            adj[v].emplace_back(aux, next_id);
            adj[aux].emplace_back(v, next_id);
            ++next_id;
        }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());

    std::vector<char> used(next_id, 0);
    std::vector<std::size_t> ptr(n + 1, 0);
    Orientation o(g);
    for (Vertex root = 0; root <= n; ++root) {
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            while (ptr[v] < adj[v].size() && used[adj[v][ptr[v]].second])
                ++ptr[v];
            if (ptr[v] == adj[v].size()) {
                stack.pop_back();
                continue;
            }
            auto [w, id] = adj[v][ptr[v]];
            used[id] = 1;
            if (id < static_cast<int>(g.edge_count()))
                o.set_direction(v, w);
            stack.push_back(w);
        }
    }
    return o;
}

namespace {

struct Digraph {
    std::vector<std::vector<Vertex>> out, in;
};

Digraph to_digraph(const Orientation& o) {
    const int n = o.host().vertex_count();
    Digraph d{std::vector<std::vector<Vertex>>(n), std::vector<std::vector<Vertex>>(n)};
    for (auto [a, b] : o.arcs()) {
        d.out[a].push_back(b);
        d.in[b].push_back(a);
    }
    for (auto& row : d.out)
        std::sort(row.begin(), row.end());
    for (auto& row : d.in)
        std::sort(row.begin(), row.end());
    return d;
}

std::vector<int> strong_components(const Digraph& d) {
    const int n = static_cast<int>(d.out.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    int counter = 0, comps = 0;
    std::function<void(Vertex)> visit = [&](Vertex v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (Vertex w : d.out[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            Vertex w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = comps;
            } while (w != v);
            ++comps;
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (index[v] < 0)
            visit(v);
    return comp;
}

// BFS over arcs (or reversed arcs) restricted to one component.
std::vector<Vertex> bfs_parents(const std::vector<std::vector<Vertex>>& adj, const std::vector<int>& comp, Vertex root,
                                std::vector<int>& dist) {
    const int n = static_cast<int>(adj.size());
    std::vector<Vertex> parent(n, -1);
    dist.assign(n, -1);
    dist[root] = 0;
    std::deque<Vertex> q{root};
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex w : adj[v])
            if (comp[w] == comp[root] && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push_back(w);
            }
    }
    return parent;
}

// Closed walk given as vertex list (first == last); returns an odd simple cycle.
std::vector<Vertex> odd_cycle_in_walk(const std::vector<Vertex>& walk) {
    std::vector<Vertex> path;
    std::unordered_map<Vertex, std::size_t> where;
    for (Vertex v : walk) {
        auto it = where.find(v);
        if (it == where.end()) {
            where[v] = path.size();
            path.push_back(v);
            continue;
        }
        std::size_t start = it->second;
        std::vector<Vertex> cyc(path.begin() + static_cast<std::ptrdiff_t>(start), path.end());
        if (cyc.size() % 2 == 1)
            return cyc;
        for (std::size_t i = start + 1; i < path.size(); ++i)
            where.erase(path[i]);
        path.resize(start + 1);
    }
    return {};
}

} // namespace

OddCycle has_directed_odd_cycle(const Orientation& o) {
    const int n = o.host().vertex_count();
    Digraph d = to_digraph(o);
    std::vector<int> comp = strong_components(d);
    std::vector<char> done(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (done[comp[root]])
            continue;
        done[comp[root]] = 1;
        std::vector<int> dist, back;
        auto parent = bfs_parents(d.out, comp, root, dist);
        auto child = bfs_parents(d.in, comp, root, back);
        for (Vertex u = 0; u < n; ++u) {
            if (comp[u] != comp[root])
                continue;
            for (Vertex v : d.out[u]) {
                if (comp[v] != comp[u] || (dist[v] - dist[u] - 1) % 2 == 0)
                    continue;
                auto path_to = [&](Vertex x) {
                    std::vector<Vertex> p;
                    for (Vertex y = x; y >= 0; y = parent[y])
                        p.push_back(y);
                    std::reverse(p.begin(), p.end());
                    return p;
                };
                auto path_home = [&](Vertex x) {
                    std::vector<Vertex> p;
                    for (Vertex y = x; y >= 0; y = child[y])
                        p.push_back(y);
                    return p;
                };
                std::vector<Vertex> walk = path_to(u);
                auto home = path_home(v);
                std::vector<Vertex> w1 = walk;
                w1.insert(w1.end(), home.begin(), home.end());
                std::vector<Vertex> w2 = path_to(v);
                w2.insert(w2.end(), home.begin() + 1, home.end());
                const auto& odd = (w1.size() - 1) % 2 == 1 ? w1 : w2;
                OddCycle out;
                out.found = true;
                out.cycle = odd_cycle_in_walk(odd);
                if (out.cycle.empty())
                    throw VerificationFailed("odd closed walk without an odd cycle");
                return out;
            }
        }
    }
    return {};
}

namespace {

class ParityCounter {
public:
    explicit ParityCounter(const Orientation& o) : n_(o.host().vertex_count()), arcs_(o.arcs()) {
        last_.assign(n_, -1);
        first_.assign(n_, static_cast<int>(arcs_.size()));
        for (int i = 0; i < static_cast<int>(arcs_.size()); ++i)
            for (Vertex x : {arcs_[i].first, arcs_[i].second}) {
                last_[x] = i;
                first_[x] = std::min(first_[x], i);
            }
        balance_.assign(n_, 0);
    }

    ParityCount run() { return count(0); }

private:
    std::string key(int i) const {
        std::string k = std::to_string(i) + ':';
        for (Vertex x = 0; x < n_; ++x)
            if (first_[x] < i && last_[x] >= i)
                k += static_cast<char>(balance_[x] + 64);
        return k;
    }

    ParityCount count(int i) {
        if (i == static_cast<int>(arcs_.size()))
            return {1, 0};
        std::string k = key(i);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;
        auto [a, b] = arcs_[i];
        ParityCount total;
        for (int take = 0; take < 2; ++take) {
            balance_[a] += take;
            balance_[b] -= take;
            bool closed_ok = (last_[a] != i || balance_[a] == 0) && (last_[b] != i || balance_[b] == 0);
            if (closed_ok) {
                ParityCount sub = count(i + 1);
                if (take) {
                    total.even += sub.odd;
                    total.odd += sub.even;
                } else {
                    total.even += sub.even;
                    total.odd += sub.odd;
                }
            }
            balance_[a] -= take;
            balance_[b] += take;
        }
        memo_.emplace(std::move(k), total);
        return total;
    }

    int n_;
    std::vector<Arc> arcs_;
    std::vector<int> last_, first_;
    std::vector<int> balance_;
    std::unordered_map<std::string, ParityCount> memo_;
};

} // namespace

ParityCount eulerian_parity(const Orientation& o, int edge_cap) {
    if (static_cast<int>(o.host().edge_count()) > edge_cap)
        throw CapExceeded("edge count for parity counting", static_cast<long long>(o.host().edge_count()), edge_cap);
    return ParityCounter(o).run();
}

ParityCount eulerian_parity_naive(const Orientation& o, int edge_cap) {
    const int m = static_cast<int>(o.host().edge_count());
    if (m > edge_cap)
        throw CapExceeded("edge count for naive parity counting", m, edge_cap);
    auto arcs = o.arcs();
    ParityCount out;
    std::vector<int> bal(o.host().vertex_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::fill(bal.begin(), bal.end(), 0);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                ++bal[arcs[i].first];
                --bal[arcs[i].second];
            }
        if (std::all_of(bal.begin(), bal.end(), [](int x) { return x == 0; }))
            (__builtin_popcountll(mask) % 2 == 0 ? out.even : out.odd) += 1;
    }
    return out;
}

std::optional<Orientation> is_f_alon_tarsi(const Graph& g, const TokenState& f, int edge_cap) {
    const int m = static_cast<int>(g.edge_count());
    if (m > edge_cap)
        throw CapExceeded("edge count for Alon-Tarsi search", m, edge_cap);
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw InvalidGraph("token vector length differs from vertex count");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (f[v] < 1)
            return std::nullopt;

    const auto& edges = g.edges();
    std::vector<int> outdeg(g.vertex_count(), 0);
    long long slack = 0;
    for (int x : f)
        slack += x - 1;
    std::vector<char> forward(m, 1);
    std::unordered_set<std::string> seen;
    std::optional<Orientation> found;

    std::function<void(int)> dfs = [&](int i) {
        if (found)
            return;
        if (slack < m - i)
            return;
        std::string key = std::to_string(i) + ':';
        for (int x : outdeg)
            key += static_cast<char>(x + 33);
        if (!seen.insert(key).second)
            return;
        if (i == m) {
            std::vector<Arc> arcs;
            for (int k = 0; k < m; ++k)
                arcs.push_back(forward[k] ? Arc{edges[k].u, edges[k].v} : Arc{edges[k].v, edges[k].u});
            Orientation o = Orientation::from_arcs(g, arcs);
            ParityCount pc = eulerian_parity(o, edge_cap);
            if (pc.even != pc.odd)
                found = std::move(o);
            return;
        }
        for (int dir = 1; dir >= 0; --dir) {
            Vertex tail = dir ? edges[i].u : edges[i].v;
            if (outdeg[tail] + 1 >= f[tail])
                continue;
            forward[i] = static_cast<char>(dir);
            ++outdeg[tail];
            --slack;
            dfs(i + 1);
            --outdeg[tail];
            ++slack;
            if (found)
                return;
        }
    };
    dfs(0);
    return found;
}

int at_number(const Graph& g, int edge_cap) {
    const int n = g.vertex_count();
    const int m = static_cast<int>(g.edge_count());
    if (m > edge_cap)
        throw CapExceeded("edge count for Alon-Tarsi search", m, edge_cap);
    if (n == 0)
        return 1;
    int k = m == 0 ? 1 : (m + n - 1) / n + 1;
    for (;; ++k)
        if (is_f_alon_tarsi(g, TokenState(n, k), edge_cap))
            return k;
}

int bounded_orientation_limit(int d, int r) {
    const long long num = 4LL * r * d;
    return static_cast<int>(num / (4LL * r + 1)) + 1;
}

BoundedOrientation odd_cycle_free_bounded_orientation(const Graph& g, int d, const ProperColoring& coloring) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > d)
            throw DegreeExceeds(v, g.degree(v), d);
    if (!is_proper_coloring(g, coloring))
        throw InvalidGraph("coloring is not proper");
    const int r = std::max(coloring.classes, 1);
    const int limit = bounded_orientation_limit(d, r);

    BoundedOrientation out;
    out.orientation = Orientation(g);
    out.outdegree_limit = limit;
    out.alon_tarsi_value = limit + 1;

    VertexSet remaining = VertexSet::range(g.vertex_count());
    while (!remaining.empty()) {
        auto sub = induced_subgraph(g, remaining);
        auto ord = degeneracy_ordering(sub.graph);
        if (ord.degeneracy <= limit) {
            std::vector<int> pos(sub.graph.vertex_count());
            for (std::size_t i = 0; i < ord.order.size(); ++i)
                pos[ord.order[i]] = static_cast<int>(i);
            for (const auto& e : sub.graph.edges()) {
                Vertex a = e.u, b = e.v;
                if (pos[a] > pos[b])
                    std::swap(a, b);
                out.orientation.set_direction(sub.to_host[a], sub.to_host[b]);
            }
            break;
        }
        const int core_degree = limit + 1;
        VertexSet core = min_degree_core(sub.graph, core_degree);
        auto core_sub = induced_subgraph(sub.graph, core);
        std::vector<int> core_colors;
        for (Vertex x : core_sub.to_host)
            core_colors.push_back(coloring.color[sub.to_host[x]]);
        ProperColoring cc{core_colors, coloring.classes};
        VertexSet piece_local = ekt_bipartite_subgraph(core_sub.graph, cc, core_degree);

        std::vector<Vertex> piece_host;
        for (Vertex x : piece_local)
            piece_host.push_back(sub.to_host[core_sub.to_host[x]]);
        VertexSet piece(std::move(piece_host));

        auto piece_sub = induced_subgraph(g, piece);
        Orientation split = eulerian_split_orientation(piece_sub.graph);
        for (auto [a, b] : split.arcs())
            out.orientation.set_direction(piece_sub.to_host[a], piece_sub.to_host[b]);
        for (Vertex v : piece)
            for (Vertex w : g.neighbors(v))
                if (remaining.contains(w) && !piece.contains(w))
                    out.orientation.set_direction(v, w);
        out.layers.push_back(piece);
        remaining = remaining.set_difference(piece);
    }

    if (out.orientation.max_out_degree() > limit)
        throw VerificationFailed("out-degree " + std::to_string(out.orientation.max_out_degree()) + " above limit " +
                                 std::to_string(limit));
    if (has_directed_odd_cycle(out.orientation).found)
        throw VerificationFailed("constructed orientation has a directed odd cycle");
    return out;
}

} // namespace paintkit
