#include "paintkit/exact.hpp"

#include "paintkit/structure.hpp"
#include "position_key.hpp"

#include <numeric>
#include <unordered_map>

namespace paintkit {

namespace {

using namespace detail;

struct Move {
    int vertex;
    Mask save;
};

class RemovalSearch {
public:
    RemovalSearch(const Graph& g, const RemovabilityOptions& options, const ExactLimits& limits)
        : adj_(g.adjacency_masks()), options_(options), counter_(limits.node_budget) {}

    // Drops vertices holding more tokens than their degree; returns them in drop order.
    std::vector<int> reduce(Mask& present, const std::vector<int>& t) const {
        std::vector<int> dropped;
        bool again = true;
        while (again) {
            again = false;
            for (int v = 0; present >> v; ++v)
                if (present >> v & 1 && t[v] > popcount(adj_[v] & present)) {
                    present &= ~bit(v);
                    dropped.push_back(v);
                    again = true;
                }
        }
        return dropped;
    }

    std::vector<Move> moves(Mask present, const std::vector<int>& t) const {
        std::vector<Move> out;
        for (int u = 0; present >> u; ++u) {
            if (!(present >> u & 1))
                continue;
            Mask nb = adj_[u] & present;
            Mask forced = 0;
            long long forced_sum = 0;
            for (int w = 0; nb >> w; ++w)
                if (nb >> w & 1 && t[w] == 1) {
                    forced |= bit(w);
                    forced_sum += t[w];
                }
            if (forced_sum >= t[u])
                continue;
            if (options_.restricted) {
                if (popcount(forced) > 1)
                    continue;
                if (forced) {
                    out.push_back({u, forced});
                    continue;
                }
                bool any = false;
                for (int w = 0; nb >> w; ++w)
                    if (nb >> w & 1 && t[w] < t[u]) {
                        out.push_back({u, bit(w)});
                        any = true;
                    }
                if (!any)
                    out.push_back({u, 0});
                continue;
            }
            std::vector<int> optional;
            for (int w = 0; nb >> w; ++w)
                if (nb >> w & 1 && !(forced >> w & 1))
                    optional.push_back(w);
            maximal_saves(u, t, optional, 0, forced, forced_sum, out);
        }
        return out;
    }

    bool wins(Mask present, std::vector<int>& t) {
        reduce(present, t);
        if (!present)
            return true;
        counter_.tick();
        if (options_.edge_count_pruning) {
            long long sum = 0, edges = 0;
            for (int v = 0; present >> v; ++v)
                if (present >> v & 1) {
                    sum += t[v];
                    edges += popcount(adj_[v] & present);
                }
            if (sum <= edges / 2)
                return false;
        }
        std::string ek = exact_key(present, t);
        if (auto it = exact_.find(ek); it != exact_.end())
            return it->second;
        std::string ck = canonical_key(adj_, present, t);
        if (auto it = canonical_.find(ck); it != canonical_.end()) {
            exact_.emplace(ek, it->second);
            return it->second;
        }
        bool result = false;
        for (const Move& mv : moves(present, t)) {
            std::vector<int> next = apply(present, t, mv);
            if (wins(present & ~bit(mv.vertex), next)) {
                result = true;
                break;
            }
        }
        exact_.emplace(std::move(ek), result);
        canonical_.emplace(std::move(ck), result);
        return result;
    }

    std::vector<int> apply(Mask present, const std::vector<int>& t, const Move& mv) const {
        std::vector<int> next = t;
        Mask hurt = adj_[mv.vertex] & present & ~mv.save;
        for (int w = 0; hurt >> w; ++w)
            if (hurt >> w & 1)
                --next[w];
        next[mv.vertex] = 0;
        return next;
    }

    RemovalScheme extract(Mask present, std::vector<int> t) {
        RemovalScheme scheme;
        std::vector<std::vector<int>> tails;
        for (;;) {
            auto dropped = reduce(present, t);
            tails.push_back(dropped);
            if (!present)
                break;
            bool advanced = false;
            for (const Move& mv : moves(present, t)) {
                std::vector<int> next = apply(present, t, mv);
                std::vector<int> probe = next;
                if (wins(present & ~bit(mv.vertex), probe)) {
                    DelSaveStep step;
                    step.vertex = mv.vertex;
                    for (int w = 0; mv.save >> w; ++w)
                        if (mv.save >> w & 1)
                            step.save.insert(w);
                    scheme.steps.push_back(step);
                    present &= ~bit(mv.vertex);
                    t = std::move(next);
                    advanced = true;
                    break;
                }
            }
            if (!advanced)
                throw VerificationFailed("removability witness extraction lost the winning line");
        }
        for (auto it = tails.rbegin(); it != tails.rend(); ++it)
            for (auto v = it->rbegin(); v != it->rend(); ++v)
                scheme.steps.push_back({*v, {}});
        return scheme;
    }

private:
    void maximal_saves(int u, const std::vector<int>& t, const std::vector<int>& optional, std::size_t i, Mask chosen,
                       long long sum, std::vector<Move>& out) const {
        if (i == optional.size()) {
            for (int w : optional)
                if (!(chosen >> w & 1) && sum + t[w] < t[u])
                    return;
            out.push_back({u, chosen});
            return;
        }
        int w = optional[i];
        if (sum + t[w] < t[u])
            maximal_saves(u, t, optional, i + 1, chosen | bit(w), sum + t[w], out);
        maximal_saves(u, t, optional, i + 1, chosen, sum, out);
    }

    std::vector<Mask> adj_;
    RemovabilityOptions options_;
    NodeCounter counter_;
    std::unordered_map<std::string, bool> exact_;
    std::unordered_map<std::string, bool> canonical_;
};

} // namespace

std::optional<RemovalScheme> removability(const Graph& g, const TokenState& f, const RemovabilityOptions& options,
                                          const ExactLimits& limits) {
    check_caps(g, f, limits);
    for (int x : f)
        if (x < 1)
            return std::nullopt;
    RemovalSearch search(g, options, limits);
    std::vector<int> t = f;
    Mask all = all_vertices(g.vertex_count());
    if (!search.wins(all, t))
        return std::nullopt;
    RemovalScheme scheme = search.extract(all, f);
    auto verdict = verify_removal_scheme(g, f, scheme, options.restricted);
    if (!verdict)
        throw VerificationFailed("removability witness rejected: " + verdict.cause + " " + verdict.detail);
    return scheme;
}

int removability_number(const Graph& g, bool restricted, const ExactLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0)
        return 1;
    const long long m = static_cast<long long>(g.edge_count());
    int k = static_cast<int>(m / n) + 1;
    const int upper = degeneracy_ordering(g).strict_degeneracy();
    RemovabilityOptions options;
    options.restricted = restricted;
    for (; k <= upper; ++k)
        if (removability(g, TokenState(n, k), options, limits))
            return k;
    throw VerificationFailed("no removal scheme at the strict degeneracy");
}

} // namespace paintkit
