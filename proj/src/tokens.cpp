#include "paintkit/tokens.hpp"

#include <algorithm>
#include <numeric>

namespace paintkit {

Position Position::start(const Graph& g, const TokenState& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw InvalidStep("token vector length " + std::to_string(f.size()) + " differs from vertex count " +
                          std::to_string(g.vertex_count()));
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 1)
            throw TokenExhausted(static_cast<Vertex>(v));
    return {std::vector<char>(f.size(), 1), f};
}

int Position::remaining() const { return static_cast<int>(std::count(present.begin(), present.end(), 1)); }

Position apply_delsave(const Graph& g, const Position& at, const DelSaveStep& step, bool restricted) {
    const Vertex u = step.vertex;
    if (!g.is_vertex(u) || !at.present[u])
        throw InvalidStep("vertex " + std::to_string(u) + " is not present");
    for (Vertex w : step.save)
        if (!g.is_vertex(w) || !at.present[w] || !g.has_edge(u, w))
            throw InvalidStep("saved vertex " + std::to_string(w) + " is not a remaining neighbour of " +
                              std::to_string(u));
    if (restricted && step.save.size() > 1)
        throw RestrictionViolated("restricted step at " + std::to_string(u) + " saves " +
                                  std::to_string(step.save.size()) + " vertices");
    long long saved = 0;
    for (Vertex w : step.save)
        saved += at.tokens[w];
    if (at.tokens[u] <= saved)
        throw IllegalSave("vertex " + std::to_string(u) + " holds " + std::to_string(at.tokens[u]) +
                          " tokens but the save set holds " + std::to_string(saved));
    Position next = at;
    next.present[u] = 0;
    next.tokens[u] = 0;
    Vertex exhausted = -1;
    for (Vertex w : g.neighbors(u)) {
        if (!at.present[w] || step.save.contains(w))
            continue;
        if (--next.tokens[w] == 0 && exhausted < 0)
            exhausted = w;
    }
    if (exhausted >= 0)
        throw TokenExhausted(exhausted);
    return next;
}

Verdict verify_removal_scheme(const Graph& g, const TokenState& f, const RemovalScheme& s, bool restricted) {
    Verdict out;
    Position pos;
    try {
        pos = Position::start(g, f);
    } catch (const Error& e) {
        return {false, -1, "InvalidTokens", e.what()};
    }
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        try {
            pos = apply_delsave(g, pos, s.steps[i], restricted);
        } catch (const IllegalSave& e) {
            return {false, static_cast<int>(i), "IllegalSave", e.what()};
        } catch (const TokenExhausted& e) {
            return {false, static_cast<int>(i), "TokenExhausted", e.what()};
        } catch (const RestrictionViolated& e) {
            return {false, static_cast<int>(i), "RestrictionViolated", e.what()};
        } catch (const InvalidStep& e) {
            return {false, static_cast<int>(i), "InvalidStep", e.what()};
        }
    }
    if (pos.remaining() != 0) {
        Vertex left = static_cast<Vertex>(std::find(pos.present.begin(), pos.present.end(), 1) - pos.present.begin());
        return {false, -1, "IncompleteDeletion", "vertex " + std::to_string(left) + " is never deleted"};
    }
    return out;
}

Verdict verify_sd3_sequence(const Graph& g, const TokenState& f, const Sd3Sequence& s) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        return {false, -1, "InvalidTokens", "token vector length differs from vertex count"};
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 1)
            return {false, -1, "NonPositiveToken", "vertex " + std::to_string(v) + " starts without tokens"};
    TokenState t = f;
    std::vector<char> alive(g.edge_count(), 1);
    std::size_t edges_left = g.edge_count();
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const auto& op = s.ops[i];
        const int step = static_cast<int>(i);
        if (!g.is_vertex(op.v))
            return {false, step, "InvalidStep", "unknown vertex " + std::to_string(op.v)};
        if (op.kind == Sd3Op::Kind::ReduceValue) {
            if (--t[op.v] < 1)
                return {false, step, "NonPositiveToken", "vertex " + std::to_string(op.v) + " reduced to 0"};
            continue;
        }
        if (!g.has_edge(op.v, op.w))
            return {false, step, "InvalidStep", "no edge " + std::to_string(op.v) + "-" + std::to_string(op.w)};
        std::size_t idx = g.edge_index(op.v, op.w);
        if (!alive[idx])
            return {false, step, "InvalidStep", "edge " + std::to_string(op.v) + "-" + std::to_string(op.w) +
                                                    " already deleted"};
        alive[idx] = 0;
        --edges_left;
        t[op.v] -= t[op.w];
        if (t[op.v] < 1)
            return {false, step, "NonPositiveToken",
                    "vertex " + std::to_string(op.v) + " dropped to " + std::to_string(t[op.v])};
    }
    if (edges_left != 0)
        return {false, -1, "EdgesRemain", std::to_string(edges_left) + " edges remain"};
    return {};
}

bool edge_count_condition(const Graph& g, const TokenState& f) {
    long long sum = std::accumulate(f.begin(), f.end(), 0LL);
    return sum > static_cast<long long>(g.edge_count());
}

MinusOneResult minus_one_transform(const Graph& g, const TokenState& tokens, const RemovalScheme& s, Vertex v) {
    if (!verify_removal_scheme(g, tokens, s, false))
        throw HypothesisViolated(v, "input scheme does not replay");
    std::vector<int> when(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.steps.size(); ++i)
        when[s.steps[i].vertex] = static_cast<int>(i);
    const DelSaveStep& own = s.steps[when[v]];
    for (Vertex u : g.neighbors(v)) {
        if (when[u] < when[v]) {
            if (!s.steps[when[u]].save.contains(v))
                throw HypothesisViolated(u, "neighbour " + std::to_string(u) + " is deleted before " +
                                                std::to_string(v) + " without saving it");
        } else if (own.save.contains(u)) {
            throw HypothesisViolated(u, "vertex " + std::to_string(v) + " saves later neighbour " + std::to_string(u));
        }
    }

    MinusOneResult out;
    auto sub = induced_subgraph(g, VertexSet::range(g.vertex_count()).set_difference(VertexSet{v}));
    out.graph = sub.graph;
    out.to_host = sub.to_host;
    out.tokens.resize(sub.to_host.size());
    for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
        Vertex host = sub.to_host[i];
        out.tokens[i] = tokens[host] - (g.has_edge(host, v) ? 1 : 0);
    }
    for (const auto& step : s.steps) {
        if (step.vertex == v)
            continue;
        DelSaveStep mapped;
        mapped.vertex = sub.from_host[step.vertex];
        for (Vertex w : step.save)
            if (w != v)
                mapped.save.insert(sub.from_host[w]);
        out.scheme.steps.push_back(mapped);
    }
    auto verdict = verify_removal_scheme(out.graph, out.tokens, out.scheme, false);
    if (!verdict)
        throw VerificationFailed("transformed scheme rejected: " + verdict.cause + " " + verdict.detail);
    return out;
}

std::set<std::pair<Vertex, Vertex>> hurts_relation(const Graph& g, const RemovalScheme& s) {
    std::vector<char> gone(g.vertex_count(), 0);
    std::set<std::pair<Vertex, Vertex>> out;
    for (const auto& step : s.steps) {
        for (Vertex a : g.neighbors(step.vertex))
            if (!gone[a] && !step.save.contains(a))
                out.emplace(step.vertex, a);
        gone[step.vertex] = 1;
    }
    return out;
}

RemovalScheme restrict_scheme(const RemovalScheme& s, const VertexSet& keep) {
    RemovalScheme out;
    for (const auto& step : s.steps)
        if (keep.contains(step.vertex))
            out.steps.push_back({step.vertex, step.save.set_intersection(keep)});
    return out;
}

RemovalScheme adapt_scheme_to_tokens(const Graph& g, const TokenState& reference, const TokenState& actual,
                                     const RemovalScheme& s) {
    TokenState ref = reference, act = actual;
    std::vector<char> gone(g.vertex_count(), 0);
    RemovalScheme out;
    for (const auto& step : s.steps) {
        DelSaveStep adapted{step.vertex, {}};
        for (Vertex x : step.save)
            if (act[x] == ref[x])
                adapted.save.insert(x);
        for (Vertex w : g.neighbors(step.vertex)) {
            if (gone[w])
                continue;
            if (!step.save.contains(w))
                --ref[w];
            if (!adapted.save.contains(w))
                --act[w];
        }
        gone[step.vertex] = 1;
        out.steps.push_back(std::move(adapted));
    }
    return out;
}

RemovalScheme greedy_scheme(const std::vector<Vertex>& order) {
    RemovalScheme out;
    for (Vertex v : order)
        out.steps.push_back({v, {}});
    return out;
}

int token_spread(const TokenState& f) {
    if (f.empty())
        return 0;
    auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    return *hi - *lo;
}

} // namespace paintkit
