#include "paintkit/scheme_builder.hpp"

#include "paintkit/structure.hpp"

#include <algorithm>
#include <cmath>

namespace paintkit {

using nlohmann::json;

PipelineFailed::PipelineFailed(std::string phase_, Vertex vertex_, const std::string& detail, json trace_)
    : Error("pipeline failed in phase " + phase_ + (vertex_ >= 0 ? " at vertex " + std::to_string(vertex_) : "") +
            ": " + detail),
      phase(std::move(phase_)), vertex(vertex_), trace(std::move(trace_)) {}

int default_save_budget(double alpha, int d) {
    if (d < 2)
        return 0;
    return static_cast<int>(std::floor(alpha / 1000.0 * std::sqrt(d * std::log(double(d))) + 1e-12));
}

namespace {

json steps_json(const std::vector<DelSaveStep>& steps) {
    json out = json::array();
    for (const auto& s : steps)
        out.push_back(json{{"save", s.save.members()}, {"vertex", s.vertex}});
    return out;
}

int min_remaining(const Position& p) {
    int best = 0;
    bool any = false;
    for (std::size_t v = 0; v < p.present.size(); ++v)
        if (p.present[v]) {
            best = any ? std::min(best, p.tokens[v]) : p.tokens[v];
            any = true;
        }
    return best;
}

std::string describe(const Verdict& v) { return v.cause + (v.detail.empty() ? "" : ": " + v.detail); }

} // namespace

json SchemePipelineTrace::to_json() const {
    const auto& k = plan.constants;
    json parts = json::array();
    for (int m = 0; m <= plan.star_index(); ++m)
        parts.push_back(plan.b_part(m).members());
    json stars_json = json::array();
    for (std::size_t m = 0; m < stars.h.size(); ++m) {
        json edges = json::array();
        for (const Edge& e : stars.h[m])
            edges.push_back({e.u, e.v});
        stars_json.push_back(json{{"m", m}, {"t", stars.t[m]}, {"target", stars.target[m]}, {"edges", edges}});
    }
    json phase_json = json::array();
    for (const auto& p : phases)
        phase_json.push_back(
            json{{"name", p.name}, {"steps", steps_json(p.steps)}, {"min_tokens_after", p.min_tokens_after}});
    return json{
        {"constants",
         {{"alpha", k.alpha}, {"d", k.d}, {"c", k.c}, {"beta", k.beta}, {"epsilon", k.epsilon}, {"p_S", k.p_s},
          {"p", k.p}, {"p_star", k.p_star()}}},
        {"S", plan.s.members()},
        {"parts", parts},
        {"resamples", resampled.size()},
        {"star_system", stars_json},
        {"save_budget", save_budget},
        {"phases", phase_json},
        {"s_tokens_at_phase", s_tokens_at_phase},
        {"s_gate_at_phase", s_gate_at_phase},
        {"s_gate_ok", s_gate_ok},
        {"legality_margin_ok", legality_margin_ok},
        {"b_star_protected", b_star_protected},
    };
}

BipartiteScheme build_bipartite_scheme(const Graph& g, const BipartiteSchemeOptions& o) {
    const int n = g.vertex_count();
    auto sides = o.sides ? o.sides : bipartition(g);
    if (!sides)
        throw NotBipartite();
    const int d = o.d.value_or(std::max(1, g.max_degree()));
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > d)
            throw DegreeExceeds(v, g.degree(v), d);

    BipartiteScheme out;
    auto& trace = out.trace;
    trace.save_budget = o.save_budget.value_or(default_save_budget(o.alpha, d));
    for (Vertex v = 0; v < n; ++v) {
        out.tokens.push_back(g.degree(v) - trace.save_budget);
        if (out.tokens.back() < 1)
            throw PipelineFailed("tokens", v, "deg(v) - s is below 1");
    }

    PartitionConstants constants = PartitionConstants::make(o.alpha, d, o.overrides);
    try {
        auto sample = sample_partition(g, constants, o.seed, o.resample_budget, sides);
        trace.plan = std::move(sample.plan);
        trace.resampled = std::move(sample.resampled);
    } catch (const ResampleBudgetExceeded& e) {
        throw PipelineFailed("partition", -1, e.what());
    }
    const auto& plan = trace.plan;
    try {
        trace.stars = build_star_system(g, plan);
    } catch (const RatioViolated& e) {
        throw PipelineFailed("star-system", -1, e.what(), trace.to_json());
    } catch (const Infeasible& e) {
        throw PipelineFailed("star-system", -1, e.what(), trace.to_json());
    }

    for (int m = 0; m <= constants.beta; ++m) {
        PhaseLog log{"B" + std::to_string(m), {}, 0};
        for (Vertex b : plan.b_part(m))
            log.steps.push_back({b, trace.stars.saved_by[b]});
        trace.phases.push_back(std::move(log));
    }
    VertexSet a_minus_s = plan.a_side.set_difference(plan.s);
    trace.phases.push_back({"A-S", {}, 0});
    for (Vertex a : a_minus_s)
        trace.phases.back().steps.push_back({a, {}});
    trace.phases.push_back({"B*", {}, 0});
    for (Vertex b : plan.b_part(plan.star_index())) {
        trace.phases.back().steps.push_back({b, {}});
        int in_s = 0;
        for (Vertex a : g.neighbors(b))
            in_s += plan.s.contains(a);
        trace.b_star_protected = trace.b_star_protected && in_s > g.degree(b) - out.tokens[b];
    }
    trace.phases.push_back({"S", {}, 0});
    for (Vertex s : plan.s)
        trace.phases.back().steps.push_back({s, {}});

    Position pos = Position::start(g, out.tokens);
    for (std::size_t p = 0; p < trace.phases.size(); ++p) {
        auto& phase = trace.phases[p];
        if (p >= 1 && p <= static_cast<std::size_t>(constants.beta)) {
            int top = 0;
            for (Vertex s : plan.s)
                top = std::max(top, pos.tokens[s]);
            double gate = constants.c * d / static_cast<double>(p);
            trace.s_tokens_at_phase.push_back(top);
            trace.s_gate_at_phase.push_back(gate);
            trace.s_gate_ok = trace.s_gate_ok && top <= gate;
        }
        for (const auto& step : phase.steps) {
            int top = 0;
            for (Vertex w : step.save)
                top = std::max(top, pos.tokens[w]);
            if (!step.save.empty() &&
                pos.tokens[step.vertex] <= static_cast<long long>(step.save.size()) * top)
                trace.legality_margin_ok = false;
            try {
                pos = apply_delsave(g, pos, step, false);
            } catch (const Error& e) {
                throw PipelineFailed(phase.name, step.vertex, e.what(), trace.to_json());
            }
            out.scheme.steps.push_back(step);
        }
        phase.min_tokens_after = min_remaining(pos);
    }
    Verdict v = verify_removal_scheme(g, out.tokens, out.scheme, false);
    if (!v) {
        Vertex at = v.failing_step >= 0 ? out.scheme.steps[v.failing_step].vertex : -1;
        throw PipelineFailed("verify", at, describe(v), trace.to_json());
    }
    return out;
}

json ChromaticScheme::trace_json() const {
    json lv = json::array();
    for (const auto& l : levels)
        lv.push_back(json{{"core", l.core.members()},
                          {"piece", l.piece.members()},
                          {"piece_min_degree", l.piece_min_degree},
                          {"bipartite", l.trace.to_json()}});
    return json{{"levels", lv}, {"greedy_order", greedy_order}};
}

ChromaticScheme build_chromatic_scheme(const Graph& g, int d, const ProperColoring& coloring,
                                       const ChromaticSchemeOptions& o) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.color.size()) != n || !is_proper_coloring(g, coloring))
        throw InvalidGraph("coloring is not a proper coloring of the graph");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > d)
            throw DegreeExceeds(v, g.degree(v), d);
    const int r = std::max(1, coloring.classes);
    const double c = 1.0 / (4000.0 * r);
    const double alpha = 1.0 / (4.0 * r);
    const int s = o.save_budget.value_or(d >= 2 ? static_cast<int>(std::floor(c * std::sqrt(d * std::log(double(d))) + 1e-12)) : 0);

    ChromaticScheme out;
    out.tokens.assign(n, d - s);
    if (n > 0 && d - s < 1)
        throw PipelineFailed("tokens", 0, "d - floor(c sqrt(d ln d)) is below 1");

    VertexSet rest = VertexSet::range(n);
    const int half = (d + 1) / 2;
    while (true) {
        auto sub = induced_subgraph(g, rest);
        auto deg = degeneracy_ordering(sub.graph);
        if (2 * deg.degeneracy < d) {
            for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it)
                out.greedy_order.push_back(sub.to_host[*it]);
            break;
        }
        VertexSet core_local = min_degree_core(sub.graph, half);
        auto core = induced_subgraph(sub.graph, core_local);
        ProperColoring core_colors;
        core_colors.classes = r;
        for (Vertex v : core.to_host)
            core_colors.color.push_back(coloring.color[sub.to_host[v]]);
        VertexSet piece_local = ekt_bipartite_subgraph(core.graph, core_colors, half);
        ChromaticLevel level;
        std::vector<Vertex> core_host, piece_host;
        for (Vertex v : core_local)
            core_host.push_back(sub.to_host[v]);
        for (Vertex v : piece_local)
            piece_host.push_back(sub.to_host[core.to_host[v]]);
        level.core = VertexSet(core_host);
        level.piece = VertexSet(piece_host);
        Graph piece = induced_subgraph(g, level.piece).graph;
        level.piece_min_degree = piece.min_degree();
        if (4LL * r * level.piece_min_degree < d)
            throw VerificationFailed("bipartite piece has minimum degree below d/(4r)");
        rest = rest.set_difference(level.piece);
        out.levels.push_back(std::move(level));
    }

    out.scheme = greedy_scheme(out.greedy_order);
    Position pos = Position::start(g, out.tokens);
    for (const auto& step : out.scheme.steps) {
        try {
            pos = apply_delsave(g, pos, step, false);
        } catch (const Error& e) {
            throw PipelineFailed("greedy", step.vertex, e.what(), out.trace_json());
        }
    }
    for (std::size_t i = out.levels.size(); i-- > 0;) {
        auto& level = out.levels[i];
        const std::string phase = "level " + std::to_string(i);
        auto piece = induced_subgraph(g, level.piece);
        BipartiteSchemeOptions bo;
        bo.alpha = alpha;
        bo.d = d;
        bo.save_budget = s;
        bo.seed = o.seed + i;
        bo.overrides = o.overrides;
        bo.resample_budget = o.resample_budget;
        BipartiteScheme bip;
        try {
            bip = build_bipartite_scheme(piece.graph, bo);
        } catch (const PipelineFailed& e) {
            Vertex host = e.vertex >= 0 ? piece.to_host[e.vertex] : -1;
            throw PipelineFailed(phase + " " + e.phase, host, e.what(), out.trace_json());
        }
        level.trace = bip.trace;
        TokenState actual;
        for (Vertex v : piece.to_host)
            actual.push_back(pos.tokens[v]);
        RemovalScheme adapted = adapt_scheme_to_tokens(piece.graph, bip.tokens, actual, bip.scheme);
        for (const auto& step : adapted.steps) {
            std::vector<Vertex> save;
            for (Vertex w : step.save)
                save.push_back(piece.to_host[w]);
            DelSaveStep host_step{piece.to_host[step.vertex], VertexSet(save)};
            try {
                pos = apply_delsave(g, pos, host_step, false);
            } catch (const Error& e) {
                throw PipelineFailed(phase, host_step.vertex, e.what(), out.trace_json());
            }
            out.scheme.steps.push_back(std::move(host_step));
        }
    }
    Verdict v = verify_removal_scheme(g, out.tokens, out.scheme, false);
    if (!v) {
        Vertex at = v.failing_step >= 0 ? out.scheme.steps[v.failing_step].vertex : -1;
        throw PipelineFailed("verify", at, describe(v), out.trace_json());
    }
    return out;
}

} // namespace paintkit
