#pragma once

// Random instances shared by the unit tests and the acceptance run.

#include "paintkit/formats.hpp"
#include "paintkit/structure.hpp"
#include "paintkit/tokens.hpp"
#include "paintkit/witness.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace instances {

using namespace paintkit;
namespace gen = paintkit::generators;

// Random scheme on g where every neighbour deleted before v saves v and v
// saves nothing, with the smallest tokens that make it legal plus slack.
struct Instance {
    Graph g;
    TokenState f;
    RemovalScheme s;
    Vertex v;
};

inline Instance random_minus_one_instance(Rng& rng, int max_n) {
    int n = rng.between(2, max_n);
    Graph g = gen::gnp(n, 0.55, rng);
    Vertex v = static_cast<Vertex>(rng.below(n));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order.begin(), order.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    std::vector<VertexSet> save(n);
    for (Vertex u : order) {
        std::vector<Vertex> w;
        for (Vertex x : g.neighbors(u))
            if (pos[x] > pos[u] && u != v && (x == v || rng.bernoulli(0.3)))
                w.push_back(x);
        save[u] = VertexSet(w);
    }
    // hurt_before[u][i]: hurts u received from the first i deletions.
    auto hurts_until = [&](Vertex u, int step) {
        int h = 0;
        for (Vertex b : g.neighbors(u))
            if (pos[b] < step && !save[b].contains(u))
                ++h;
        return h;
    };
    TokenState f(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        Vertex u = order[i];
        int budget = 0;
        for (Vertex w : save[u])
            budget += f[w] - hurts_until(w, i);
        int need = std::max(hurts_until(u, n) + 1, hurts_until(u, i) + budget + 1);
        f[u] = need + static_cast<int>(rng.below(2));
    }
    RemovalScheme s;
    for (Vertex u : order)
        s.steps.push_back({u, save[u]});
    return {g, f, s, v};
}

inline WitnessDocument random_document(Rng& rng) {
    int n = static_cast<int>(rng.between(1, 7));
    Graph g = gen::gnp(n, 0.5, rng);
    TokenState f(n);
    for (auto& x : f)
        x = static_cast<int>(rng.between(1, 9));
    switch (rng.below(5)) {
    case 0: {
        Orientation o(g);
        for (const auto& e : g.edges())
            if (rng.bernoulli(0.5))
                o.set_direction(e.v, e.u);
        return orientation_witness(o, rng.bernoulli(0.5) ? OrientationClaim::AlonTarsi : OrientationClaim::OddCycleFree,
                                   static_cast<int>(rng.below(6)));
    }
    case 1: {
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order.begin(), order.end());
        RemovalScheme s;
        std::vector<char> gone(n, 0);
        for (Vertex v : order) {
            std::vector<Vertex> save;
            for (Vertex w : g.neighbors(v))
                if (!gone[w] && rng.bernoulli(0.3))
                    save.push_back(w);
            gone[v] = 1;
            s.steps.push_back({v, VertexSet(save)});
        }
        std::optional<nlohmann::json> trace;
        if (rng.bernoulli(0.3))
            trace = nlohmann::json{{"note", "x"}, {"values", {1, 2, 3}}};
        return removal_witness(g, f, s, rng.bernoulli(0.5), trace);
    }
    case 2: {
        Sd3Sequence s;
        for (int i = 0; i < 6; ++i) {
            if (g.edge_count() && rng.bernoulli(0.5)) {
                auto e = g.edges()[rng.below(g.edge_count())];
                s.ops.push_back(rng.bernoulli(0.5) ? Sd3Op::edge_delete(e.u, e.v) : Sd3Op::edge_delete(e.v, e.u));
            } else {
                s.ops.push_back(Sd3Op::reduce(static_cast<Vertex>(rng.below(n))));
            }
        }
        return sd3_witness(g, f, s);
    }
    case 3: {
        PaintingStrategy s;
        s.tokens = f;
        for (int i = 0; i < 4; ++i) {
            std::vector<Vertex> rem, lis, pai;
            for (Vertex v = 0; v < n; ++v)
                if (rng.bernoulli(0.7)) {
                    rem.push_back(v);
                    if (rng.bernoulli(0.5)) {
                        lis.push_back(v);
                        if (rng.bernoulli(0.5))
                            pai.push_back(v);
                    }
                }
            TokenState t(n, 0);
            for (Vertex v : rem)
                t[v] = static_cast<int>(rng.between(1, 5));
            s.policy.push_back({VertexSet(rem), t, VertexSet(lis), VertexSet(pai)});
        }
        return painting_witness(g, s);
    }
    default: {
        nlohmann::json params = nlohmann::json::object();
        for (const char* name : {"chi", "ch", "AT", "sd3"}) {
            switch (rng.below(3)) {
            case 0: params[name] = {{"status", "computed"}, {"value", rng.below(9)}}; break;
            case 1: params[name] = {{"status", "bounded"}, {"lower", 2}, {"upper", 3 + rng.below(3)}}; break;
            default: params[name] = {{"status", "capped"}};
            }
        }
        return {"parameter-report", kWitnessVersion, graph_hash(g),
                nlohmann::json{{"graph6", encode_graph6(g)}, {"parameters", params}, {"violations", nlohmann::json::array()}}};
    }
    }
}

/// DelSave replay written from the rules alone.
inline bool replays(const Graph& g, const TokenState& f, const RemovalScheme& s) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n || static_cast<int>(s.steps.size()) != n)
        return false;
    std::vector<int> t = f;
    std::vector<char> alive(n, 1);
    for (const auto& step : s.steps) {
        Vertex u = step.vertex;
        if (u < 0 || u >= n || !alive[u])
            return false;
        long long saved = 0;
        for (Vertex w : step.save) {
            if (w < 0 || w >= n || !alive[w] || !g.has_edge(u, w))
                return false;
            saved += t[w];
        }
        if (t[u] <= saved)
            return false;
        alive[u] = 0;
        for (Vertex w : g.neighbors(u))
            if (alive[w] && !step.save.contains(w) && --t[w] < 1)
                return false;
    }
    return true;
}

} // namespace instances
