#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond Graph itself and are only usable on tiny inputs.

#include "paintkit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using paintkit::Graph;
using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= Mask(1) << e.v;
        adj[e.v] |= Mask(1) << e.u;
    }
    return adj;
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Largest minimum degree over all non-empty induced subgraphs.
inline int degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency(g);
    int best = 0;
    for (Mask s = 1; s < (Mask(1) << n); ++s) {
        int lo = n;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1)
                lo = std::min(lo, popcount(adj[v] & s));
        best = std::max(best, lo);
    }
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> p(a.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges())
            if (!b.has_edge(p[e.u], p[e.v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<paintkit::Edge> edges;
    for (const auto& e : g.edges())
        edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), edges);
}

inline int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool ok = true;
            for (const auto& e : g.edges())
                ok = ok && c[e.u] != c[e.v];
            if (ok)
                return k;
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
}

inline bool list_colorable(const Graph& g, const std::vector<std::vector<int>>& lists) {
    const int n = g.vertex_count();
    std::vector<int> c(n, -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == n)
            return true;
        for (int x : lists[v]) {
            bool ok = true;
            for (int w : g.neighbors(v))
                ok = ok && !(w < v && c[w] == x);
            if (!ok)
                continue;
            c[v] = x;
            if (go(v + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

/// Every assignment of f(v)-subsets of {0..palette-1}.
inline bool choosable(const Graph& g, const std::vector<int>& f, int palette) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::vector<int>>> options(n);
    for (int v = 0; v < n; ++v)
        for (Mask s = 0; s < (Mask(1) << palette); ++s)
            if (popcount(s) == f[v]) {
                std::vector<int> l;
                for (int x = 0; x < palette; ++x)
                    if (s >> x & 1)
                        l.push_back(x);
                options[v].push_back(l);
            }
    std::vector<std::vector<int>> lists(n);
    std::function<bool(int)> all = [&](int v) {
        if (v == n)
            return list_colorable(g, lists);
        for (const auto& l : options[v]) {
            lists[v] = l;
            if (!all(v + 1))
                return false;
        }
        return true;
    };
    return all(0);
}

/// Online list colouring game tree, exact positions only.
inline bool paintable(const Graph& g, const std::vector<int>& f) {
    const int n = g.vertex_count();
    auto adj = adjacency(g);
    std::map<std::pair<Mask, std::vector<int>>, bool> memo;
    std::function<bool(Mask, const std::vector<int>&)> win = [&](Mask present, const std::vector<int>& t) {
        if (!present)
            return true;
        auto key = std::make_pair(present, t);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool result = true;
        for (Mask s = present; s && result; s = (s - 1) & present) {
            bool answered = false;
            for (Mask i = s;; i = (i - 1) & s) {
                bool independent = true;
                for (int v = 0; v < n; ++v)
                    if (i >> v & 1 && adj[v] & i)
                        independent = false;
                if (independent) {
                    std::vector<int> next = t;
                    bool alive = true;
                    for (int v = 0; v < n; ++v)
                        if ((s & ~i) >> v & 1 && --next[v] < 1)
                            alive = false;
                    for (int v = 0; v < n; ++v)
                        if (i >> v & 1)
                            next[v] = 0;
                    if (alive && win(present & ~i, next)) {
                        answered = true;
                        break;
                    }
                }
                if (i == 0)
                    break;
            }
            result = answered;
        }
        memo[key] = result;
        return result;
    };
    return win((Mask(1) << n) - 1, f);
}

/// DelSave game over every vertex and every save set.
inline bool removable(const Graph& g, const std::vector<int>& f, bool restricted) {
    const int n = g.vertex_count();
    auto adj = adjacency(g);
    std::map<std::pair<Mask, std::vector<int>>, bool> memo;
    std::function<bool(Mask, const std::vector<int>&)> win = [&](Mask present, const std::vector<int>& t) {
        if (!present)
            return true;
        auto key = std::make_pair(present, t);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool result = false;
        for (int u = 0; u < n && !result; ++u) {
            if (!(present >> u & 1))
                continue;
            Mask nb = adj[u] & present;
            for (Mask w = nb;; w = (w - 1) & nb) {
                if (!restricted || popcount(w) <= 1) {
                    int sum = 0;
                    for (int x = 0; x < n; ++x)
                        if (w >> x & 1)
                            sum += t[x];
                    if (t[u] > sum) {
                        std::vector<int> next = t;
                        bool ok = true;
                        for (int x = 0; x < n; ++x)
                            if ((nb & ~w) >> x & 1 && --next[x] < 1)
                                ok = false;
                        next[u] = 0;
                        if (ok && win(present & ~(Mask(1) << u), next)) {
                            result = true;
                            break;
                        }
                    }
                }
                if (w == 0)
                    break;
            }
        }
        memo[key] = result;
        return result;
    };
    return win((Mask(1) << n) - 1, f);
}

/// ReduceValue / EdgeDelete search on (edge set, tokens).
inline bool sd3_degenerate(const Graph& g, const std::vector<int>& f) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::map<std::pair<std::uint64_t, std::vector<int>>, bool> memo;
    std::function<bool(std::uint64_t, const std::vector<int>&)> win = [&](std::uint64_t left,
                                                                        const std::vector<int>& t) {
        if (!left)
            return true;
        auto key = std::make_pair(left, t);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool result = false;
        std::set<int> touched;
        for (int i = 0; i < m && !result; ++i) {
            if (!(left >> i & 1))
                continue;
            auto [a, b] = std::pair{edges[i].u, edges[i].v};
            touched.insert(a);
            touched.insert(b);
            for (auto [v, w] : {std::pair{a, b}, std::pair{b, a}})
                if (t[v] > t[w]) {
                    std::vector<int> next = t;
                    next[v] -= t[w];
                    if (win(left & ~(std::uint64_t(1) << i), next)) {
                        result = true;
                        break;
                    }
                }
        }
        for (int v : touched) {
            if (result)
                break;
            if (t[v] >= 2) {
                std::vector<int> next = t;
                --next[v];
                result = win(left, next);
            }
        }
        memo[key] = result;
        return result;
    };
    return win(m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1, f);
}

/// AT(G) from the expansion of the graph polynomial prod_{u<v} (x_u - x_v).
inline int alon_tarsi_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return 1;
    std::map<std::vector<int>, long long> poly{{std::vector<int>(n, 0), 1}};
    for (const auto& e : g.edges()) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [mono, c] : poly) {
            auto a = mono, b = mono;
            ++a[e.u];
            ++b[e.v];
            next[a] += c;
            next[b] -= c;
        }
        poly.clear();
        for (auto& [mono, c] : next)
            if (c != 0)
                poly[mono] = c;
    }
    int best = n + 1;
    for (const auto& [mono, c] : poly)
        best = std::min(best, *std::max_element(mono.begin(), mono.end()) + 1);
    return best;
}

struct Parity {
    long long even = 0, odd = 0;
};

/// Balanced arc subsets counted by enumeration.
inline Parity eulerian_subgraphs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Parity p;
    const int m = static_cast<int>(arcs.size());
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
        std::vector<int> bal(n, 0);
        for (int i = 0; i < m; ++i)
            if (s >> i & 1) {
                ++bal[arcs[i].first];
                --bal[arcs[i].second];
            }
        if (std::all_of(bal.begin(), bal.end(), [](int x) { return x == 0; }))
            (__builtin_popcountll(s) % 2 ? p.odd : p.even)++;
    }
    return p;
}

/// A closed directed walk of odd length exists iff some (v, even) reaches (v, odd).
inline bool has_odd_directed_cycle(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : arcs)
        out[a].push_back(b);
    for (int s = 0; s < n; ++s) {
        std::vector<char> seen(2 * n, 0);
        std::vector<int> stack{2 * s};
        seen[2 * s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : out[x / 2]) {
                int y = 2 * w + (x % 2 ^ 1);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        if (seen[2 * s + 1])
            return true;
    }
    return false;
}

/// DP-colourability with k colours per vertex: every cover that matches
/// L(u) and L(v) by a permutation along each edge.
inline bool dp_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> choice(edges.size(), 0);
    while (true) {
        std::vector<int> c(n, 0);
        bool found = false;
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < edges.size() && ok; ++i)
                ok = perms[choice[i]][c[edges[i].u]] != c[edges[i].v];
            if (ok) {
                found = true;
                break;
            }
            int i = 0;
            while (i < n && ++c[i] == k)
                c[i++] = 0;
            if (i == n)
                break;
        }
        if (!found)
            return false;
        std::size_t i = 0;
        while (i < edges.size() && ++choice[i] == static_cast<int>(perms.size()))
            choice[i++] = 0;
        if (i == edges.size())
            return true;
    }
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            out.push_back(line);
    return out;
}

} // namespace oracle
