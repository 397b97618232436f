#include "paintkit/exact.hpp"

#include "paintkit/structure.hpp"
#include "position_key.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace paintkit {

namespace {

using namespace detail;

// Colours are class indices; lists[v] is a bitmask of classes containing v.
bool class_colorable(const std::vector<Mask>& adj, Mask vertices, const std::vector<Mask>& lists,
                     std::vector<int>& choice, std::vector<Mask>& used_by) {
    int best = -1, best_size = 1 << 30;
    for (int v = 0; vertices >> v; ++v) {
        if (!(vertices >> v & 1) || choice[v] >= 0)
            continue;
        Mask options = lists[v];
        for (int c = 0; options >> c; ++c)
            if (options >> c & 1 && used_by[c] & adj[v])
                options &= ~bit(c);
        int size = popcount(options);
        if (size < best_size) {
            best = v;
            best_size = size;
        }
    }
    if (best < 0)
        return true;
    if (best_size == 0)
        return false;
    Mask options = lists[best];
    for (int c = 0; options >> c; ++c) {
        if (!(options >> c & 1) || used_by[c] & adj[best])
            continue;
        choice[best] = c;
        used_by[c] |= bit(best);
        if (class_colorable(adj, vertices, lists, choice, used_by))
            return true;
        used_by[c] &= ~bit(best);
        choice[best] = -1;
    }
    return false;
}

bool colorable(const std::vector<Mask>& adj, Mask vertices, const std::vector<Mask>& lists, int colors) {
    std::vector<int> choice(adj.size(), -1);
    std::vector<Mask> used_by(static_cast<std::size_t>(colors), 0);
    return class_colorable(adj, vertices, lists, choice, used_by);
}

class ChoosabilitySearch {
public:
    ChoosabilitySearch(const Graph& g, const TokenState& f, const ExactLimits& limits)
        : n_(g.vertex_count()), adj_(g.adjacency_masks()), f_(f), counter_(limits.node_budget) {}

    // Bad assignment (classes as vertex masks) for `present`, if one exists.
    std::optional<std::vector<Mask>> bad(Mask present) {
        Mask core = present;
        bool again = true;
        while (again) {
            again = false;
            for (int v = 0; core >> v; ++v)
                if (core >> v & 1 && f_[v] > popcount(adj_[v] & core)) {
                    core &= ~bit(v);
                    again = true;
                }
        }
        if (!core)
            return std::nullopt;
        if (auto it = memo_.find(core); it != memo_.end())
            return it->second;
        std::optional<std::vector<Mask>> result;
        for (int v = 0; core >> v && !result; ++v)
            if (core >> v & 1)
                result = bad(core & ~bit(v));
        if (!result)
            result = nested_lists(core);
        if (!result)
            result = direct(core);
        memo_[core] = result;
        return result;
    }

    ListAssignment lists_for(Mask present, const std::vector<Mask>& classes) const {
        ListAssignment lists(n_);
        int next = 0;
        for (const Mask c : classes) {
            for (int v = 0; c >> v; ++v)
                if (c >> v & 1)
                    lists[v].push_back(next);
            ++next;
        }
        for (int v = 0; v < n_; ++v) {
            if (present >> v & 1)
                continue;
            lists[v].clear();
            for (int k = 0; k < f_[v]; ++k)
                lists[v].push_back(next++);
        }
        return lists;
    }

private:
    // L(v) = {0, ..., f(v) - 1}.
    std::optional<std::vector<Mask>> nested_lists(Mask core) const {
        int top = 0;
        for (int v = 0; core >> v; ++v)
            if (core >> v & 1)
                top = std::max(top, f_[v]);
        std::vector<Mask> classes(top, 0), lists(n_, 0);
        for (int v = 0; core >> v; ++v)
            if (core >> v & 1)
                for (int c = 0; c < f_[v]; ++c) {
                    classes[c] |= bit(v);
                    lists[v] |= bit(c);
                }
        if (colorable(adj_, core, lists, top))
            return std::nullopt;
        return classes;
    }

    bool spans_edge(Mask c) const {
        for (int v = 0; c >> v; ++v)
            if (c >> v & 1 && adj_[v] & c)
                return true;
        return false;
    }

    std::optional<std::vector<Mask>> direct(Mask core) {
        verts_.clear();
        for (int v = 0; core >> v; ++v)
            if (core >> v & 1)
                verts_.push_back(v);
        core_ = core;
        candidates_.assign(verts_.size(), {});
        for (std::size_t p = 0; p < verts_.size(); ++p) {
            Mask above = core & ~(bit(verts_[p] + 1) - 1);
            for (Mask sub = above;; sub = (sub - 1) & above) {
                Mask c = sub | bit(verts_[p]);
                if (spans_edge(c))
                    candidates_[p].push_back(c);
                if (!sub)
                    break;
            }
            std::sort(candidates_[p].begin(), candidates_[p].end());
            candidates_[p].erase(std::unique(candidates_[p].begin(), candidates_[p].end()), candidates_[p].end());
        }
        cover_.assign(n_, 0);
        chosen_.clear();
        found_.reset();
        place(0, 0);
        return found_;
    }

    std::vector<Mask> lists_of_chosen() const {
        std::vector<Mask> lists(n_, 0);
        for (std::size_t c = 0; c < chosen_.size(); ++c)
            for (int v = 0; chosen_[c] >> v; ++v)
                if (chosen_[c] >> v & 1)
                    lists[v] |= bit(static_cast<int>(c));
        return lists;
    }

    void place(std::size_t p, std::size_t from) {
        if (found_)
            return;
        counter_.tick();
        if (p == verts_.size()) {
            if (!colorable(adj_, core_, lists_of_chosen(), static_cast<int>(chosen_.size())))
                found_ = chosen_;
            return;
        }
        const int v = verts_[p];
        if (cover_[v] == f_[v]) {
            // every completion keeps these lists; stop if they already colour the core
            if (p + 1 < verts_.size() && colorable(adj_, core_, lists_of_chosen(), static_cast<int>(chosen_.size())))
                return;
            place(p + 1, 0);
            return;
        }
        for (std::size_t i = from; i < candidates_[p].size() && !found_; ++i) {
            Mask c = candidates_[p][i];
            bool fits = true;
            for (int x = 0; c >> x; ++x)
                if (c >> x & 1 && cover_[x] + 1 > f_[x]) {
                    fits = false;
                    break;
                }
            if (!fits)
                continue;
            if (chosen_.size() >= 63)
                throw CapExceeded("colour classes", static_cast<long long>(chosen_.size()) + 1, 63);
            for (int x = 0; c >> x; ++x)
                if (c >> x & 1)
                    ++cover_[x];
            chosen_.push_back(c);
            place(p, i);
            chosen_.pop_back();
            for (int x = 0; c >> x; ++x)
                if (c >> x & 1)
                    --cover_[x];
        }
    }

    int n_;
    std::vector<Mask> adj_;
    TokenState f_;
    NodeCounter counter_;
    std::unordered_map<Mask, std::optional<std::vector<Mask>>> memo_;

    Mask core_ = 0;
    std::vector<int> verts_;
    std::vector<std::vector<Mask>> candidates_;
    std::vector<int> cover_;
    std::vector<Mask> chosen_;
    std::optional<std::vector<Mask>> found_;
};

} // namespace

std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.size()) != n)
        throw InvalidStep("list count differs from vertex count");
    std::vector<int> color(n, -1);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lists[a].size() < lists[b].size(); });
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == order.size())
            return true;
        int v = order[i];
        for (int c : lists[v]) {
            bool clash = false;
            for (Vertex w : g.neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color[v] = c;
            if (go(i + 1))
                return true;
            color[v] = -1;
        }
        return false;
    };
    if (!go(0))
        return std::nullopt;
    return color;
}

ChoosabilityResult is_f_choosable(const Graph& g, const TokenState& f, const ExactLimits& limits) {
    check_caps(g, f, limits);
    const Mask all = all_vertices(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[v] < 1) {
            ListAssignment lists(g.vertex_count());
            int next = 0;
            for (int w = 0; w < g.vertex_count(); ++w)
                for (int k = 0; k < f[w]; ++k)
                    lists[w].push_back(next++);
            return {false, lists};
        }
    ChoosabilitySearch search(g, f, limits);
    auto classes = search.bad(all);
    if (!classes)
        return {true, std::nullopt};
    // the classes found cover a subset; rebuild lists on that subset and give fresh colours elsewhere
    Mask support = 0;
    for (Mask c : *classes)
        support |= c;
    ListAssignment lists = search.lists_for(support, *classes);
    if (list_coloring(g, lists))
        throw VerificationFailed("bad list assignment turned out colourable");
    return {false, lists};
}

int choosability(const Graph& g, const ExactLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0)
        return 1;
    const int upper = degeneracy_ordering(g).strict_degeneracy();
    for (int k = 1; k <= upper; ++k)
        if (is_f_choosable(g, TokenState(n, k), limits).choosable)
            return k;
    throw VerificationFailed("not choosable at the strict degeneracy");
}

} // namespace paintkit
