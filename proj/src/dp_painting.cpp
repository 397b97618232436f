#include "paintkit/exact.hpp"

#include "paintkit/structure.hpp"
#include "position_key.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

namespace paintkit {

namespace {

using namespace detail;

// Matching between L(a) and L(b): element i of L(a) meets partner[i] of L(b) (-1 for none).
struct CoverEdge {
    int a = 0, b = 0;
    std::vector<int> partner;
};

class DpSearch {
public:
    DpSearch(const Graph& g, const ExactLimits& limits) : n_(g.vertex_count()), adj_(g.adjacency_masks()),
        counter_(limits.node_budget) {}

    bool wins(Mask present, const std::vector<int>& t) {
        reduce(present, t);
        if (!present)
            return true;
        counter_.tick();
        std::string ek = exact_key(present, t);
        if (auto it = exact_.find(ek); it != exact_.end())
            return it->second;
        std::string ck = canonical_key(adj_, present, t);
        if (auto it = canonical_.find(ck); it != canonical_.end()) {
            exact_.emplace(ek, it->second);
            return it->second;
        }
        bool result = true;
        std::vector<int> verts;
        for (int v = 0; present >> v; ++v)
            if (present >> v & 1)
                verts.push_back(v);
        std::vector<int> take(n_, 0);
        // Lister's removal vectors, largest first
        std::function<bool(std::size_t)> each_g = [&](std::size_t i) -> bool {
            if (i == verts.size()) {
                bool any = std::any_of(take.begin(), take.end(), [](int x) { return x > 0; });
                return !any || !lister_wins_turn(present, t, take);
            }
            int v = verts[i];
            for (int x = t[v]; x >= 0; --x) {
                take[v] = x;
                if (!each_g(i + 1))
                    return false;
            }
            take[v] = 0;
            return true;
        };
        result = each_g(0);
        exact_.emplace(std::move(ek), result);
        canonical_.emplace(std::move(ck), result);
        return result;
    }

    // One turn where the whole token supply goes at once: Painter must mark everything.
    bool single_turn(const std::vector<int>& t) {
        Mask all = all_vertices(n_);
        bool painter = true;
        std::vector<CoverEdge> cover;
        auto [tree, extra] = forest(all, t);
        enumerate_covers(tree, extra, 0, t, cover, [&](const std::vector<CoverEdge>& c) {
            auto marks = markable(all, t, c, all);
            if (std::find(marks.begin(), marks.end(), all) == marks.end()) {
                painter = false;
                return false;
            }
            return true;
        });
        return painter;
    }

private:
    void reduce(Mask& present, const std::vector<int>& t) const {
        bool again = true;
        while (again) {
            again = false;
            for (int v = 0; present >> v; ++v)
                if (present >> v & 1 && t[v] > popcount(adj_[v] & present)) {
                    present &= ~bit(v);
                    again = true;
                }
        }
    }

    // Spanning forest of the support (parent, child) in BFS order, plus remaining edges.
    std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> forest(Mask present,
                                                                                        const std::vector<int>& take) const {
        Mask supp = 0;
        for (int v = 0; present >> v; ++v)
            if (present >> v & 1 && take[v] > 0)
                supp |= bit(v);
        std::vector<std::pair<int, int>> tree, extra;
        Mask reached = 0;
        for (int root = 0; supp >> root; ++root) {
            if (!(supp >> root & 1) || reached >> root & 1)
                continue;
            reached |= bit(root);
            std::deque<int> q{root};
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                Mask nb = adj_[v] & supp;
                for (int w = 0; nb >> w; ++w)
                    if (nb >> w & 1 && !(reached >> w & 1)) {
                        reached |= bit(w);
                        tree.emplace_back(v, w);
                        q.push_back(w);
                    }
            }
        }
        for (int u = 0; supp >> u; ++u) {
            if (!(supp >> u & 1))
                continue;
            Mask nb = adj_[u] & supp & ~(bit(u + 1) - 1);
            for (int w = 0; nb >> w; ++w)
                if (nb >> w & 1) {
                    bool in_tree = std::any_of(tree.begin(), tree.end(), [&](auto& e) {
                        return (e.first == u && e.second == w) || (e.first == w && e.second == u);
                    });
                    if (!in_tree)
                        extra.emplace_back(u, w);
                }
        }
        return {tree, extra};
    }

    // Calls visit(cover) for each canonical cover; stops when visit returns false.
    bool enumerate_covers(const std::vector<std::pair<int, int>>& tree, const std::vector<std::pair<int, int>>& extra,
                          std::size_t i, const std::vector<int>& take, std::vector<CoverEdge>& cover,
                          const std::function<bool(const std::vector<CoverEdge>&)>& visit) {
        if (i == tree.size() + extra.size())
            return visit(cover);
        if (i < tree.size()) {
            auto [p, c] = tree[i];
            if (take[c] > take[p]) {
                CoverEdge e{p, c, std::vector<int>(take[p])};
                for (int k = 0; k < take[p]; ++k)
                    e.partner[k] = k;
                cover.push_back(std::move(e));
                bool go = enumerate_covers(tree, extra, i + 1, take, cover, visit);
                cover.pop_back();
                return go;
            }
            // child's elements go to an increasing subset of the parent's
            const int big = take[p], small = take[c];
            std::vector<int> pick(small);
            std::function<bool(int, int)> choose = [&](int at, int from) -> bool {
                if (at == small) {
                    cover.push_back({c, p, pick});
                    bool go = enumerate_covers(tree, extra, i + 1, take, cover, visit);
                    cover.pop_back();
                    return go;
                }
                for (int x = from; x <= big - (small - at); ++x) {
                    pick[at] = x;
                    if (!choose(at + 1, x + 1))
                        return false;
                }
                return true;
            };
            return choose(0, 0);
        }
        auto [u, w] = extra[i - tree.size()];
        int a = u, b = w;
        if (take[w] < take[u])
            std::swap(a, b);
        const int small = take[a], big = take[b];
        std::vector<int> image(small);
        std::vector<char> used(big, 0);
        std::function<bool(int)> inject = [&](int at) -> bool {
            if (at == small) {
                cover.push_back({a, b, image});
                bool go = enumerate_covers(tree, extra, i + 1, take, cover, visit);
                cover.pop_back();
                return go;
            }
            for (int x = 0; x < big; ++x) {
                if (used[x])
                    continue;
                used[x] = 1;
                image[at] = x;
                bool go = inject(at + 1);
                used[x] = 0;
                if (!go)
                    return false;
            }
            return true;
        };
        return inject(0);
    }

    // Maximal sets of vertices Painter can mark with one independent set of the cover.
    std::vector<Mask> markable(Mask present, const std::vector<int>& take, const std::vector<CoverEdge>& cover,
                               Mask must) const {
        std::vector<int> verts;
        for (int v = 0; present >> v; ++v)
            if (present >> v & 1 && take[v] > 0)
                verts.push_back(v);
        std::vector<int> chosen(n_, -1);
        std::vector<Mask> found;
        std::function<void(std::size_t, Mask)> go = [&](std::size_t i, Mask marked) {
            if (i == verts.size()) {
                if ((marked & must) == (must & present))
                    found.push_back(marked);
                return;
            }
            int v = verts[i];
            for (int el = 0; el < take[v]; ++el) {
                bool clash = false;
                for (const auto& e : cover) {
                    if (e.a == v && chosen[e.b] >= 0 && e.partner[el] == chosen[e.b])
                        clash = true;
                    else if (e.b == v && chosen[e.a] >= 0 && e.partner[chosen[e.a]] == el)
                        clash = true;
                    if (clash)
                        break;
                }
                if (clash)
                    continue;
                chosen[v] = el;
                go(i + 1, marked | bit(v));
                chosen[v] = -1;
            }
            if (!(must >> v & 1))
                go(i + 1, marked);
        };
        go(0, 0);
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        std::vector<Mask> maximal;
        for (Mask m : found) {
            bool dominated = false;
            for (Mask o : found)
                if (o != m && (o & m) == m) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                maximal.push_back(m);
        }
        return maximal;
    }

    bool lister_wins_turn(Mask present, const std::vector<int>& t, const std::vector<int>& take) {
        Mask exhausted = 0;
        for (int v = 0; present >> v; ++v)
            if (present >> v & 1 && take[v] == t[v])
                exhausted |= bit(v);
        std::map<Mask, bool> outcome;
        auto painter_wins_after = [&](Mask marked) {
            auto it = outcome.find(marked);
            if (it != outcome.end())
                return it->second;
            std::vector<int> next = t;
            for (int v = 0; present >> v; ++v)
                if (present >> v & 1)
                    next[v] -= take[v];
            bool w = wins(present & ~marked, next);
            outcome[marked] = w;
            return w;
        };
        auto [tree, extra] = forest(present, take);
        std::vector<CoverEdge> cover;
        bool lister = false;
        enumerate_covers(tree, extra, 0, take, cover, [&](const std::vector<CoverEdge>& c) {
            counter_.tick();
            for (Mask m : markable(present, take, c, exhausted))
                if (painter_wins_after(m))
                    return true;
            lister = true;
            return false;
        });
        return lister;
    }

    int n_;
    std::vector<Mask> adj_;
    NodeCounter counter_;
    std::unordered_map<std::string, bool> exact_;
    std::unordered_map<std::string, bool> canonical_;
};

} // namespace

bool is_dp_f_paintable(const Graph& g, const TokenState& f, const ExactLimits& limits) {
    check_caps(g, f, limits);
    for (int x : f)
        if (x < 1)
            return false;
    DpSearch search(g, limits);
    return search.wins(all_vertices(g.vertex_count()), f);
}

int dp_paintability(const Graph& g, const ExactLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0)
        return 1;
    const int upper = degeneracy_ordering(g).strict_degeneracy();
    for (int k = 1; k <= upper; ++k)
        if (is_dp_f_paintable(g, TokenState(n, k), limits))
            return k;
    throw VerificationFailed("not DP-paintable at the strict degeneracy");
}

bool is_dp_f_colorable(const Graph& g, const TokenState& f, const ExactLimits& limits) {
    check_caps(g, f, limits);
    for (int x : f)
        if (x < 1)
            return false;
    DpSearch search(g, limits);
    return search.single_turn(f);
}

} // namespace paintkit
