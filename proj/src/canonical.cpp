#include "paintkit/canonical.hpp"

#include "paintkit/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace paintkit {

namespace {

// Stable colour refinement; returns a cell rank per vertex. Ranks are ordered
// by invariant keys so isomorphic inputs get matching cell sequences.
std::vector<int> refine(const Graph& g, const std::vector<int>& colors) {
    const int n = g.vertex_count();
    std::vector<int> rank(n);
    {
        std::map<std::pair<int, int>, int> keys;
        for (Vertex v = 0; v < n; ++v)
            keys[{colors.empty() ? 0 : colors[v], g.degree(v)}] = 0;
        int r = 0;
        for (auto& [k, val] : keys)
            val = r++;
        for (Vertex v = 0; v < n; ++v)
            rank[v] = keys[{colors.empty() ? 0 : colors[v], g.degree(v)}];
    }
    int cells = 0;
    for (int x : rank)
        cells = std::max(cells, x + 1);
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(rank[v]);
            std::vector<int> around;
            for (Vertex w : g.neighbors(v))
                around.push_back(rank[w]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> keys;
        for (Vertex v = 0; v < n; ++v)
            keys[sig[v]] = 0;
        int r = 0;
        for (auto& [k, val] : keys)
            val = r++;
        for (Vertex v = 0; v < n; ++v)
            rank[v] = keys[sig[v]];
        if (r == cells)
            break;
        cells = r;
    }
    return rank;
}

class Search {
public:
    Search(const Graph& g, const std::vector<int>& rank) : n_(g.vertex_count()), adj_(g.adjacency_masks()) {
        for (Vertex v = 0; v < n_; ++v)
            by_rank_.emplace_back(rank[v], v);
        std::sort(by_rank_.begin(), by_rank_.end());
        cell_of_pos_.resize(n_);
        for (int i = 0; i < n_; ++i)
            cell_of_pos_[i] = by_rank_[i].first;
        rank_ = rank;
        twin_rep_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            twin_rep_[v] = v;
            for (Vertex u = 0; u < v; ++u) {
                if (rank[u] != rank[v])
                    continue;
                std::uint64_t open_u = adj_[u] & ~(std::uint64_t{1} << v);
                std::uint64_t open_v = adj_[v] & ~(std::uint64_t{1} << u);
                if (open_u == open_v) {
                    twin_rep_[v] = twin_rep_[u];
                    break;
                }
            }
        }
        best_.assign(n_, UINT64_MAX);
        order_.resize(n_);
    }

    std::vector<Vertex> run() {
        dfs(0, 0);
        return best_order_;
    }

private:
    std::uint64_t column(Vertex v, int depth) const {
        std::uint64_t col = 0;
        for (int i = 0; i < depth; ++i)
            if (adj_[v] >> order_[i] & 1)
                col |= std::uint64_t{1} << (63 - i);
        return col;
    }

    void dfs(int depth, std::uint64_t placed) {
        if (depth == n_) {
            best_order_ = order_;
            return;
        }
        const int cell = cell_of_pos_[depth];
        std::vector<std::pair<std::uint64_t, Vertex>> cand;
        for (Vertex v = 0; v < n_; ++v) {
            if (placed >> v & 1 || rank_[v] != cell)
                continue;
            bool skip = false;
            for (Vertex u = 0; u < v; ++u)
                if (!(placed >> u & 1) && twin_rep_[u] == twin_rep_[v]) {
                    skip = true;
                    break;
                }
            if (!skip)
                cand.emplace_back(column(v, depth), v);
        }
        std::uint64_t lowest = UINT64_MAX;
        for (auto& c : cand)
            lowest = std::min(lowest, c.first);
        for (auto& [col, v] : cand) {
            if (col != lowest)
                continue;
            if (col > best_[depth])
                return;
            if (col < best_[depth]) {
                best_[depth] = col;
                std::fill(best_.begin() + depth + 1, best_.end(), UINT64_MAX);
            }
            order_[depth] = v;
            dfs(depth + 1, placed | std::uint64_t{1} << v);
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, Vertex>> by_rank_;
    std::vector<int> cell_of_pos_;
    std::vector<int> rank_;
    std::vector<Vertex> twin_rep_;
    std::vector<std::uint64_t> best_;
    std::vector<Vertex> order_;
    std::vector<Vertex> best_order_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("vertex count for canonical form", n, cap);
    if (n > 64)
        throw CapExceeded("vertex count for canonical form", n, 64);
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw InvalidGraph("colour vector length differs from vertex count");

    CanonicalLabeling out;
    out.order = n == 0 ? std::vector<Vertex>{} : Search(g, refine(g, colors)).run();

    std::string& code = out.code;
    code = std::to_string(n);
    if (!colors.empty()) {
        code += '|';
        for (Vertex v : out.order) {
            code += std::to_string(colors[v]);
            code += ',';
        }
    }
    code += '|';
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(out.order[i], out.order[j]) ? 1 : 0);
            if (++bits == 6) {
                code += static_cast<char>(63 + acc);
                acc = bits = 0;
            }
        }
    if (bits > 0)
        code += static_cast<char>(63 + (acc << (6 - bits)));
    return out;
}

std::string canonical_form(const Graph& g, int cap) { return canonical_labeling(g, {}, cap).code; }

std::string canonical_form_colored(const Graph& g, const std::vector<int>& colors, int cap) {
    return canonical_labeling(g, colors, cap).code;
}

} // namespace paintkit
