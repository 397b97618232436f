#include "paintkit/lll.hpp"

#include "paintkit/rng.hpp"
#include "paintkit/structure.hpp"

#include <cmath>

namespace paintkit {

PartitionConstants PartitionConstants::make(double alpha, int d, const std::map<std::string, double>& overrides) {
    if (!(alpha > 0 && alpha <= 1))
        throw InvalidConstants("alpha must lie in (0, 1]");
    if (d < 1)
        throw InvalidConstants("d must be positive");
    PartitionConstants k;
    k.alpha = alpha;
    k.d = d;
    k.c = alpha / 2;
    k.beta = static_cast<int>(std::floor(std::pow(double(d), 0.01) + 1e-12));
    k.epsilon = std::pow(double(d), -0.125);
    k.p_s = std::sqrt(std::log(double(d)) / d);
    auto take = [&](const char* name, auto& field) {
        auto it = overrides.find(name);
        if (it != overrides.end())
            field = static_cast<std::decay_t<decltype(field)>>(it->second);
    };
    take("c", k.c);
    take("beta", k.beta);
    take("epsilon", k.epsilon);
    take("p_S", k.p_s);
    if (k.beta < 0)
        throw InvalidConstants("beta must be non-negative");
    k.p.assign(k.beta + 1, 0.0);
    k.p[0] = 1 - k.c;
    if (k.beta >= 1)
        k.p[1] = 2 * k.c / 3;
    for (int m = 2; m <= k.beta; ++m)
        k.p[m] = k.c / ((m + 1.0) * (m + 2.0));
    for (const auto& [name, value] : overrides) {
        if (name == "c" || name == "beta" || name == "epsilon" || name == "p_S")
            continue;
        if (name.size() > 1 && name[0] == 'p' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
            int m = std::stoi(name.substr(1));
            if (m > k.beta)
                throw InvalidConstants("override " + name + " is beyond beta");
            k.p[m] = value;
            continue;
        }
        throw InvalidConstants("unknown constant " + name);
    }
    for (double x : k.p)
        if (x < 0 || x > 1)
            throw InvalidConstants("part probabilities must lie in [0, 1]");
    if (k.p_star() < -1e-12)
        throw InvalidConstants("part probabilities sum above 1");
    if (!(k.p_s >= 0 && k.p_s <= 1))
        throw InvalidConstants("p_S must lie in [0, 1]");
    if (k.epsilon < 0)
        throw InvalidConstants("epsilon must be non-negative");
    return k;
}

double PartitionConstants::p_star() const {
    double sum = 0;
    for (double x : p)
        sum += x;
    return 1 - sum;
}

VertexSet PartitionPlan::b_part(int m) const {
    std::vector<Vertex> out;
    for (Vertex b : b_side)
        if (part[b] == m)
            out.push_back(b);
    return VertexSet(out);
}

bool BadEventLedger::clean() const { return bad_count() == 0; }

int BadEventLedger::bad_count() const {
    int n = 0;
    for (const auto& row : x)
        for (char c : row)
            n += c;
    for (char c : y)
        n += c;
    return n;
}

ResampleBudgetExceeded::ResampleBudgetExceeded(long long budget, BadEventLedger snapshot)
    : Error("resample budget of " + std::to_string(budget) + " exhausted with " +
            std::to_string(snapshot.bad_count()) + " bad events"),
      budget(budget), snapshot(std::move(snapshot)) {}

namespace {

bool outside(int count, double expected, double eps) {
    const double slack = 1e-9;
    return count < (1 - eps) * expected - slack || count > (1 + eps) * expected + slack;
}

void validate(const Graph& g, const PartitionPlan& plan) {
    const int n = g.vertex_count();
    if (static_cast<int>(plan.part.size()) != n)
        throw MalformedPartition("part[] has the wrong length");
    std::vector<int> side(n, -1);
    for (Vertex a : plan.a_side) {
        if (!g.is_vertex(a))
            throw MalformedPartition("side A vertex out of range");
        side[a] = 0;
    }
    for (Vertex b : plan.b_side) {
        if (!g.is_vertex(b) || side[b] != -1)
            throw MalformedPartition("sides overlap or leave the graph");
        side[b] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (side[v] == -1)
            throw MalformedPartition("vertex " + std::to_string(v) + " is on neither side");
        if (side[v] == 0 && plan.part[v] != -1)
            throw MalformedPartition("side A vertex " + std::to_string(v) + " has a B part");
        if (side[v] == 1 && (plan.part[v] < 0 || plan.part[v] > plan.star_index()))
            throw MalformedPartition("vertex " + std::to_string(v) + " has no valid part");
    }
    for (const Edge& e : g.edges())
        if (side[e.u] == side[e.v])
            throw MalformedPartition("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " inside a side");
    for (Vertex s : plan.s)
        if (!g.is_vertex(s) || side[s] != 0)
            throw MalformedPartition("S leaves side A");
}

void evaluate(const Graph& g, const PartitionPlan& plan, BadEventLedger& ledger) {
    const auto& k = plan.constants;
    const int n = g.vertex_count();
    ledger.x.assign(n, {});
    ledger.y.assign(n, 0);
    std::vector<char> in_s(n, 0);
    for (Vertex s : plan.s)
        in_s[s] = 1;
    std::vector<int> count(k.beta + 2);
    for (Vertex a : plan.a_side) {
        std::fill(count.begin(), count.end(), 0);
        for (Vertex b : g.neighbors(a))
            ++count[plan.part[b]];
        ledger.x[a].assign(k.beta + 1, 0);
        for (int m = 0; m <= k.beta; ++m)
            ledger.x[a][m] = outside(count[m], k.p[m] * g.degree(a), k.epsilon);
    }
    for (Vertex b : plan.b_side) {
        int in = 0;
        for (Vertex a : g.neighbors(b))
            in += in_s[a];
        ledger.y[b] = outside(in, k.p_s * g.degree(b), k.epsilon);
    }
}

} // namespace

BadEventLedger check_partition(const Graph& g, const PartitionPlan& plan) {
    validate(g, plan);
    BadEventLedger ledger;
    evaluate(g, plan, ledger);
    ledger.x_resamples.assign(g.vertex_count(), {});
    for (Vertex a : plan.a_side)
        ledger.x_resamples[a].assign(plan.constants.beta + 1, 0);
    ledger.y_resamples.assign(g.vertex_count(), 0);
    return ledger;
}

SampleOutcome sample_partition(const Graph& g, const PartitionConstants& constants, std::uint64_t seed,
                               long long budget, const std::optional<std::pair<VertexSet, VertexSet>>& sides) {
    auto ab = sides ? sides : bipartition(g);
    if (!ab)
        throw NotBipartite();
    const int n = g.vertex_count();
    Rng rng(seed);
    SampleOutcome out;
    PartitionPlan& plan = out.plan;
    plan.constants = constants;
    plan.a_side = ab->first;
    plan.b_side = ab->second;
    plan.part.assign(n, -1);
    std::vector<char> in_s(n, 0);

    auto draw_s = [&](Vertex a) { in_s[a] = rng.bernoulli(constants.p_s) ? 1 : 0; };
    auto draw_part = [&](Vertex b) {
        double u = rng.uniform01();
        int m = 0;
        for (; m <= constants.beta; ++m) {
            if (u < constants.p[m])
                break;
            u -= constants.p[m];
        }
        plan.part[b] = m;
    };
    auto sync_s = [&] {
        std::vector<Vertex> s;
        for (Vertex a : plan.a_side)
            if (in_s[a])
                s.push_back(a);
        plan.s = VertexSet(s);
    };

    for (Vertex a : plan.a_side)
        draw_s(a);
    for (Vertex b : plan.b_side)
        draw_part(b);
    sync_s();
    out.ledger = check_partition(g, plan);

    for (long long round = 0;; ++round) {
        std::optional<BadEvent> bad;
        for (Vertex a : plan.a_side) {
            for (int m = 0; m <= constants.beta && !bad; ++m)
                if (out.ledger.x[a][m])
                    bad = BadEvent{a, m};
            if (bad)
                break;
        }
        if (!bad)
            for (Vertex b : plan.b_side)
                if (out.ledger.y[b]) {
                    bad = BadEvent{b, -1};
                    break;
                }
        if (!bad)
            return out;
        if (round >= budget)
            throw ResampleBudgetExceeded(budget, out.ledger);
        auto [v, m] = *bad;
        if (m >= 0) {
            for (Vertex b : g.neighbors(v))
                draw_part(b);
            ++out.ledger.x_resamples[v][m];
        } else {
            for (Vertex a : g.neighbors(v))
                draw_s(a);
            sync_s();
            ++out.ledger.y_resamples[v];
        }
        out.resampled.push_back(*bad);
        evaluate(g, plan, out.ledger);
    }
}

} // namespace paintkit
