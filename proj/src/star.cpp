#include "paintkit/star.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace paintkit {

Infeasible::Infeasible(VertexSet hall_set_, int neighborhood_, int t_)
    : Error("no star saturation: " + std::to_string(hall_set_.size()) + " vertices of S see only " +
            std::to_string(neighborhood_) + " vertices, need t = " + std::to_string(t_) + " each"),
      hall_set(std::move(hall_set_)), neighborhood(neighborhood_), t(t_) {}

RatioViolated::RatioViolated(int m_, int z_, int q1_, int q2_, int t_)
    : Error("ratio check failed for m = " + std::to_string(m_) + ", round " + std::to_string(z_) + ": t = " +
            std::to_string(t_) + ", q1 = " + std::to_string(q1_) + ", q2 = " + std::to_string(q2_)),
      m(m_), z(z_), q1(q1_), q2(q2_), t(t_) {}

namespace {

struct FlowNetwork {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNetwork(int nodes) : out(nodes) {}

    int add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
        return static_cast<int>(arcs.size()) - 2;
    }

    // BFS augmenting paths; arcs are scanned in insertion order.
    int max_flow(int source, int sink) {
        int flow = 0;
        const int nodes = static_cast<int>(out.size());
        while (true) {
            std::vector<int> via(nodes, -1);
            std::vector<char> seen(nodes, 0);
            std::queue<int> q;
            q.push(source);
            seen[source] = 1;
            while (!q.empty() && !seen[sink]) {
                int x = q.front();
                q.pop();
                for (int id : out[x])
                    if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
                        seen[arcs[id].to] = 1;
                        via[arcs[id].to] = id;
                        q.push(arcs[id].to);
                    }
            }
            if (!seen[sink])
                return flow;
            int push = std::numeric_limits<int>::max();
            for (int x = sink; x != source; x = arcs[via[x] ^ 1].to)
                push = std::min(push, arcs[via[x]].cap);
            for (int x = sink; x != source; x = arcs[via[x] ^ 1].to) {
                arcs[via[x]].cap -= push;
                arcs[via[x] ^ 1].cap += push;
            }
            flow += push;
        }
    }

    std::vector<char> reachable(int source) const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int id : out[x])
                if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
                    seen[arcs[id].to] = 1;
                    q.push(arcs[id].to);
                }
        }
        return seen;
    }
};

std::vector<Vertex> saturate(const Graph& g, const VertexSet& b_side, const VertexSet& s_side, int t,
                             const std::set<Edge>& used) {
    const int n = g.vertex_count();
    std::vector<Vertex> result(n, -1);
    if (s_side.empty() || t == 0)
        return result;
    std::vector<char> in_s(n, 0);
    for (Vertex s : s_side)
        in_s[s] = 1;
    const int source = n, sink = n + 1;
    const int big = std::numeric_limits<int>::max() / 4;
    FlowNetwork net(n + 2);
    std::vector<std::pair<int, int>> middle; // arc id, (b, s) via arcs
    for (Vertex b : b_side) {
        net.add(source, b, 1);
        for (Vertex s : g.neighbors(b))
            if (in_s[s] && !used.count(Edge(b, s)))
                middle.push_back({net.add(b, s, big), b});
    }
    for (Vertex s : s_side)
        net.add(s, sink, t);
    int flow = net.max_flow(source, sink);
    if (flow < t * static_cast<int>(s_side.size())) {
        auto seen = net.reachable(source);
        std::vector<Vertex> hall;
        std::set<Vertex> nbhd;
        for (Vertex s : s_side)
            if (!seen[s])
                hall.push_back(s);
        for (Vertex s : hall)
            for (Vertex b : g.neighbors(s))
                if (b_side.contains(b) && !used.count(Edge(b, s)))
                    nbhd.insert(b);
        throw Infeasible(VertexSet(hall), static_cast<int>(nbhd.size()), t);
    }
    for (auto [id, b] : middle)
        if (net.arcs[id ^ 1].cap > 0)
            result[b] = net.arcs[id].to;
    return result;
}

} // namespace

std::vector<Vertex> star_saturating_map(const Graph& g, const VertexSet& b_side, const VertexSet& s_side, int t) {
    if (t < 0)
        throw InvalidGraph("t must be non-negative");
    return saturate(g, b_side, s_side, t, {});
}

StarSystem build_star_system(const Graph& g, const PartitionPlan& plan) {
    const auto& k = plan.constants;
    const int n = g.vertex_count();
    StarSystem sys;
    sys.t.assign(k.beta + 1, 0);
    sys.target.assign(k.beta + 1, 0);
    sys.h.assign(k.beta + 1, {});
    sys.saved_by.assign(n, {});
    std::vector<std::vector<Vertex>> saved(n);
    for (int m = 1; m <= k.beta; ++m) {
        const double ratio = k.p_s > 0 ? k.c * k.p[m] / k.p_s : 0.0;
        sys.t[m] = static_cast<int>(std::ceil(ratio - 1e-12));
        sys.target[m] = m * sys.t[m];
        VertexSet bm = plan.b_part(m);
        std::set<Edge> used;
        for (int z = 1; z <= m; ++z) {
            if (plan.s.empty())
                break;
            int q1 = 0, q2 = std::numeric_limits<int>::max();
            for (Vertex b : bm) {
                int deg = 0;
                for (Vertex s : g.neighbors(b))
                    deg += plan.s.contains(s) && !used.count(Edge(b, s));
                q1 = std::max(q1, deg);
            }
            for (Vertex s : plan.s) {
                int deg = 0;
                for (Vertex b : g.neighbors(s))
                    deg += bm.contains(b) && !used.count(Edge(b, s));
                q2 = std::min(q2, deg);
            }
            const int t = sys.t[m];
            if (t > 0 && (q1 == 0 || static_cast<long long>(t) * q1 > q2))
                throw RatioViolated(m, z, q1, q2, t);
            auto map = saturate(g, bm, plan.s, t, used);
            for (Vertex b : bm)
                if (map[b] >= 0) {
                    used.insert(Edge(b, map[b]));
                    sys.h[m].push_back(Edge(b, map[b]));
                    saved[b].push_back(map[b]);
                    saved[map[b]].push_back(b);
                }
        }
        std::sort(sys.h[m].begin(), sys.h[m].end());
    }
    for (Vertex v = 0; v < n; ++v)
        sys.saved_by[v] = VertexSet(saved[v]);
    if (!check_star_system(g, plan, sys))
        throw VerificationFailed("star system degree invariants failed on recount");
    return sys;
}

bool check_star_system(const Graph& g, const PartitionPlan& plan, const StarSystem& sys) {
    const auto& k = plan.constants;
    if (static_cast<int>(sys.h.size()) != k.beta + 1 || static_cast<int>(sys.target.size()) != k.beta + 1)
        return false;
    if (!sys.h.empty() && !sys.h[0].empty())
        return false;
    std::set<Edge> all;
    for (int m = 1; m <= k.beta; ++m) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (const Edge& e : sys.h[m]) {
            if (!g.has_edge(e.u, e.v) || !all.insert(e).second)
                return false;
            Vertex s = plan.s.contains(e.u) ? e.u : e.v;
            Vertex b = s == e.u ? e.v : e.u;
            if (!plan.s.contains(s) || plan.part[b] != m)
                return false;
            ++deg[s];
            ++deg[b];
        }
        for (Vertex s : plan.s)
            if (deg[s] != sys.target[m])
                return false;
        for (Vertex b : plan.b_part(m))
            if (deg[b] > m)
                return false;
    }
    return true;
}

} // namespace paintkit
