#include "paintkit/exact.hpp"

#include "paintkit/canonical.hpp"
#include "paintkit/structure.hpp"
#include "position_key.hpp"

#include <unordered_map>

namespace paintkit {

namespace {

using namespace detail;

class Sd3Search {
public:
    Sd3Search(const Graph& g, const ExactLimits& limits)
        : n_(g.vertex_count()), edges_(g.edges()), counter_(limits.node_budget) {
        if (edges_.size() > 64)
            throw CapExceeded("edge count for sd3 search", static_cast<long long>(edges_.size()), 64);
    }

    // Charges every edge of a vertex that outweighs its neighbourhood to that vertex.
    void reduce(Mask& live, std::vector<int>& t, std::vector<Sd3Op>* log) const {
        bool again = true;
        while (again) {
            again = false;
            for (int v = 0; v < n_; ++v) {
                long long around = 0;
                bool has = false;
                for (std::size_t i = 0; i < edges_.size(); ++i)
                    if (live >> i & 1 && (edges_[i].u == v || edges_[i].v == v)) {
                        has = true;
                        around += t[edges_[i].u == v ? edges_[i].v : edges_[i].u];
                    }
                if (!has || t[v] <= around)
                    continue;
                for (std::size_t i = 0; i < edges_.size(); ++i)
                    if (live >> i & 1 && (edges_[i].u == v || edges_[i].v == v)) {
                        Vertex w = edges_[i].u == v ? edges_[i].v : edges_[i].u;
                        t[v] -= t[w];
                        live &= ~bit(static_cast<int>(i));
                        if (log)
                            log->push_back(Sd3Op::edge_delete(v, w));
                    }
                again = true;
            }
        }
    }

    std::string key(Mask live, const std::vector<int>& t) const {
        std::vector<int> id(n_, -1);
        std::vector<int> colors;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (!(live >> i & 1))
                continue;
            for (Vertex x : {edges_[i].u, edges_[i].v})
                if (id[x] < 0) {
                    id[x] = static_cast<int>(colors.size());
                    colors.push_back(t[x]);
                }
            es.emplace_back(id[edges_[i].u], id[edges_[i].v]);
        }
        return canonical_form_colored(Graph(static_cast<int>(colors.size()), es), colors, 64);
    }

    std::vector<Sd3Op> moves(Mask live, const std::vector<int>& t) const {
        std::vector<Sd3Op> out;
        std::vector<char> touched(n_, 0);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (!(live >> i & 1))
                continue;
            auto [a, b] = edges_[i];
            touched[a] = touched[b] = 1;
            if (t[a] > t[b])
                out.push_back(Sd3Op::edge_delete(a, b));
            if (t[b] > t[a])
                out.push_back(Sd3Op::edge_delete(b, a));
        }
        for (int v = 0; v < n_; ++v)
            if (touched[v] && t[v] >= 2)
                out.push_back(Sd3Op::reduce(v));
        return out;
    }

    Mask apply(Mask live, std::vector<int>& t, const Sd3Op& op) const {
        if (op.kind == Sd3Op::Kind::ReduceValue) {
            --t[op.v];
            return live;
        }
        t[op.v] -= t[op.w];
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (live >> i & 1 && edges_[i] == Edge(op.v, op.w))
                return live & ~bit(static_cast<int>(i));
        return live;
    }

    bool wins(Mask live, std::vector<int> t) {
        reduce(live, t, nullptr);
        if (!live)
            return true;
        counter_.tick();
        std::string k = key(live, t);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;
        bool result = false;
        for (const Sd3Op& op : moves(live, t)) {
            std::vector<int> next = t;
            Mask nl = apply(live, next, op);
            if (wins(nl, std::move(next))) {
                result = true;
                break;
            }
        }
        memo_.emplace(std::move(k), result);
        return result;
    }

    Sd3Sequence extract(Mask live, std::vector<int> t) {
        Sd3Sequence seq;
        for (;;) {
            reduce(live, t, &seq.ops);
            if (!live)
                return seq;
            bool advanced = false;
            for (const Sd3Op& op : moves(live, t)) {
                std::vector<int> next = t;
                Mask nl = apply(live, next, op);
                if (wins(nl, next)) {
                    seq.ops.push_back(op);
                    live = nl;
                    t = std::move(next);
                    advanced = true;
                    break;
                }
            }
            if (!advanced)
                throw VerificationFailed("sd3 witness extraction lost the winning line");
        }
    }

private:
    int n_;
    std::vector<Edge> edges_;
    NodeCounter counter_;
    std::unordered_map<std::string, bool> memo_;
};

} // namespace

std::optional<Sd3Sequence> is_sd3_degenerate(const Graph& g, const TokenState& f, const ExactLimits& limits) {
    check_caps(g, f, limits);
    for (int x : f)
        if (x < 1)
            return std::nullopt;
    Sd3Search search(g, limits);
    Mask live = all_vertices(static_cast<int>(g.edge_count()));
    if (!search.wins(live, f))
        return std::nullopt;
    Sd3Sequence seq = search.extract(live, f);
    auto verdict = verify_sd3_sequence(g, f, seq);
    if (!verdict)
        throw VerificationFailed("sd3 witness rejected: " + verdict.cause + " " + verdict.detail);
    return seq;
}

int sd3(const Graph& g, const ExactLimits& limits) {
    const int n = g.vertex_count();
    if (n == 0)
        return 1;
    const int upper = degeneracy_ordering(g).strict_degeneracy();
    for (int k = 1; k <= upper; ++k)
        if (is_sd3_degenerate(g, TokenState(n, k), limits))
            return k;
    throw VerificationFailed("no sd3 sequence at the strict degeneracy");
}

} // namespace paintkit
