#include "paintkit/exact.hpp"

#include "paintkit/structure.hpp"
#include "position_key.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace paintkit {

namespace {

using namespace detail;

class PaintingSearch {
public:
    PaintingSearch(const Graph& g, const ExactLimits& limits) : adj_(g.adjacency_masks()), counter_(limits.node_budget) {}

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

    bool independent(Mask s) const {
        for (int v = 0; s >> v; ++v)
            if (s >> v & 1 && adj_[v] & s)
                return false;
        return true;
    }

    // Painter replies to Lister's S: independent sets holding every vertex of S
    // with one token left, maximal within S.
    std::vector<Mask> replies(Mask s, const std::vector<int>& t) const {
        Mask forced = 0;
        for (int v = 0; s >> v; ++v)
            if (s >> v & 1 && t[v] == 1)
                forced |= bit(v);
        if (!independent(forced))
            return {};
        Mask blocked = forced;
        for (int v = 0; forced >> v; ++v)
            if (forced >> v & 1)
                blocked |= adj_[v];
        Mask rest = s & ~blocked;
        std::vector<Mask> out;
        maximal_independent(rest, rest, 0, forced, out);
        return out;
    }

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
        for (Mask s = present; s && result; s = (s - 1) & present) {
            if (!answer(present, s, t))
                result = false;
        }
        exact_.emplace(std::move(ek), result);
        canonical_.emplace(std::move(ck), result);
        return result;
    }

    // Winning reply to S, if any.
    std::optional<Mask> answer(Mask present, Mask s, const std::vector<int>& t) {
        for (Mask i : replies(s, t)) {
            std::vector<int> next = t;
            Mask hit = s & ~i;
            for (int v = 0; hit >> v; ++v)
                if (hit >> v & 1)
                    --next[v];
            if (wins(present & ~i, next))
                return i;
        }
        return std::nullopt;
    }

private:
    void maximal_independent(Mask within, Mask p, Mask x, Mask cur, std::vector<Mask>& out) const {
        if (!p && !x) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; p >> v; ++v) {
            if (!(p >> v & 1))
                continue;
            Mask closed = (adj_[v] | bit(v)) & within;
            maximal_independent(within, p & ~closed, x & ~closed, cur | bit(v), out);
            p &= ~bit(v);
            x |= bit(v);
        }
    }

    std::vector<Mask> adj_;
    NodeCounter counter_;
    std::unordered_map<std::string, bool> exact_;
    std::unordered_map<std::string, bool> canonical_;
};

VertexSet to_set(Mask m) { return VertexSet::from_mask(m); }

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s)
        m |= bit(v);
    return m;
}

} // namespace

bool is_f_paintable(const Graph& g, const TokenState& f, const ExactLimits& limits) {
    check_caps(g, f, limits);
    for (int x : f)
        if (x < 1)
            return false;
    PaintingSearch search(g, limits);
    return search.wins(all_vertices(g.vertex_count()), f);
}

int paintability(const Graph& g, const ExactLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0)
        return 1;
    const int upper = degeneracy_ordering(g).strict_degeneracy();
    for (int k = 1; k <= upper; ++k)
        if (is_f_paintable(g, TokenState(n, k), limits))
            return k;
    throw VerificationFailed("not paintable at the strict degeneracy");
}

std::optional<PaintingStrategy> painting_strategy(const Graph& g, const TokenState& f, std::size_t policy_cap,
                                                  const ExactLimits& limits) {
    check_caps(g, f, limits);
    for (int x : f)
        if (x < 1)
            return std::nullopt;
    PaintingSearch search(g, limits);
    const Mask all = all_vertices(g.vertex_count());
    if (!search.wins(all, f))
        return std::nullopt;
    PaintingStrategy out;
    out.tokens = f;
    std::map<std::pair<Mask, std::vector<int>>, bool> seen;
    std::deque<std::pair<Mask, std::vector<int>>> queue;
    queue.emplace_back(all, f);
    seen[{all, f}] = true;
    while (!queue.empty()) {
        auto [present, t] = queue.front();
        queue.pop_front();
        for (Mask s = present; s; s = (s - 1) & present) {
            auto reply = search.answer(present, s, t);
            if (!reply)
                throw VerificationFailed("painting strategy extraction lost the winning line");
            if (out.policy.size() >= policy_cap)
                throw CapExceeded("painting policy entries", static_cast<long long>(out.policy.size()) + 1,
                                  static_cast<long long>(policy_cap));
            PolicyEntry e{to_set(present), t, to_set(s), to_set(*reply)};
            out.policy.push_back(std::move(e));
            std::vector<int> next = t;
            Mask hit = s & ~*reply;
            for (int v = 0; hit >> v; ++v)
                if (hit >> v & 1)
                    --next[v];
            Mask rest = present & ~*reply;
            for (int v = 0; *reply >> v; ++v)
                if (*reply >> v & 1)
                    next[v] = 0;
            if (rest && !seen.count({rest, next})) {
                seen[{rest, next}] = true;
                queue.emplace_back(rest, std::move(next));
            }
        }
    }
    return out;
}

Verdict verify_painting_strategy(const Graph& g, const PaintingStrategy& s) {
    const int n = g.vertex_count();
    if (n > 24)
        return {false, -1, "CapExceeded", "strategy verification limited to 24 vertices"};
    if (static_cast<int>(s.tokens.size()) != n)
        return {false, -1, "InvalidTokens", "token vector length differs from vertex count"};
    for (int x : s.tokens)
        if (x < 1)
            return {false, -1, "InvalidTokens", "tokens must be positive"};
    std::vector<Mask> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    std::map<std::pair<Mask, std::vector<int>>, std::map<Mask, std::pair<Mask, int>>> table;
    for (std::size_t i = 0; i < s.policy.size(); ++i) {
        const auto& e = s.policy[i];
        if (static_cast<int>(e.tokens.size()) != n)
            return {false, static_cast<int>(i), "InvalidEntry", "token vector length differs from vertex count"};
        table[{to_mask(e.remaining), e.tokens}][to_mask(e.lister)] = {to_mask(e.painter), static_cast<int>(i)};
    }
    std::map<std::pair<Mask, std::vector<int>>, bool> seen;
    std::deque<std::pair<Mask, std::vector<int>>> queue;
    queue.emplace_back(all_vertices(n), s.tokens);
    seen[queue.front()] = true;
    while (!queue.empty()) {
        auto [present, t] = queue.front();
        queue.pop_front();
        if (!present)
            continue;
        auto it = table.find({present, t});
        if (it == table.end())
            return {false, -1, "MissingPosition",
                    "no policy for remaining set " + std::to_string(present) + " reached by Lister"};
        for (Mask lister = present; lister; lister = (lister - 1) & present) {
            auto jt = it->second.find(lister);
            if (jt == it->second.end())
                return {false, -1, "MissingMove", "no reply to Lister move " + std::to_string(lister)};
            auto [painter, idx] = jt->second;
            if (painter & ~lister)
                return {false, idx, "InvalidReply", "painted vertices outside Lister's set"};
            for (int v = 0; painter >> v; ++v)
                if (painter >> v & 1 && adj[v] & painter)
                    return {false, idx, "InvalidReply", "painted set is not independent"};
            std::vector<int> next = t;
            Mask hit = lister & ~painter;
            for (int v = 0; hit >> v; ++v)
                if (hit >> v & 1 && --next[v] < 1)
                    return {false, idx, "TokenExhausted", "vertex " + std::to_string(v) + " left uncoloured"};
            for (int v = 0; painter >> v; ++v)
                if (painter >> v & 1)
                    next[v] = 0;
            Mask rest = present & ~painter;
            if (rest && !seen.count({rest, next})) {
                seen[{rest, next}] = true;
                queue.emplace_back(rest, std::move(next));
            }
        }
    }
    return {};
}

} // namespace paintkit
