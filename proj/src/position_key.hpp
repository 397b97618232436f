#pragma once

#include "paintkit/canonical.hpp"
#include "paintkit/errors.hpp"
#include "paintkit/exact.hpp"
#include "paintkit/graph.hpp"
#include "paintkit/tokens.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paintkit::detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int v) { return Mask{1} << v; }

inline Mask all_vertices(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

inline void check_caps(const Graph& g, const TokenState& f, const ExactLimits& limits) {
    if (g.vertex_count() > limits.vertex_cap)
        throw CapExceeded("vertex count", g.vertex_count(), limits.vertex_cap);
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw InvalidStep("token vector length differs from vertex count");
    for (int x : f)
        if (x > limits.token_cap)
            throw CapExceeded("token value", x, limits.token_cap);
}

/// Exact key of a position (vertex mask and tokens on it).
inline std::string exact_key(Mask present, const std::vector<int>& tokens) {
    std::string k(reinterpret_cast<const char*>(&present), sizeof present);
    for (int v = 0; present >> v; ++v)
        if (present >> v & 1)
            k += static_cast<char>(tokens[v] + 1);
    return k;
}

/// Isomorphism-invariant key of the induced subgraph on `present` with tokens as labels.
inline std::string canonical_key(const std::vector<Mask>& adj, Mask present, const std::vector<int>& tokens) {
    std::vector<int> ids;
    for (int v = 0; present >> v; ++v)
        if (present >> v & 1)
            ids.push_back(v);
    std::vector<Edge> es;
    std::vector<int> colors;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        colors.push_back(tokens[ids[i]]);
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (adj[ids[i]] >> ids[j] & 1)
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    Graph sub(static_cast<int>(ids.size()), es);
    return canonical_form_colored(sub, colors, 64);
}

/// Counts search nodes against a budget.
class NodeCounter {
public:
    explicit NodeCounter(long long budget) : budget_(budget) {}
    void tick() {
        if (budget_ > 0 && ++nodes_ > budget_)
            throw CapExceeded("search nodes", nodes_, budget_);
    }
    long long nodes() const { return nodes_; }

private:
    long long budget_;
    long long nodes_ = 0;
};

} // namespace paintkit::detail
