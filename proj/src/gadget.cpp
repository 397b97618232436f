#include "paintkit/gadget.hpp"

#include <algorithm>

namespace paintkit {

Gadget build_nonconstant_gadget(const Graph& h_graph, const TokenState& h, const Sd3Sequence* source_sequence,
                                bool raise_all_copies) {
    const int n = h_graph.vertex_count();
    if (static_cast<int>(h.size()) != n)
        throw InvalidStep("token vector length differs from vertex count");
    if (n == 0 || token_spread(h) == 0)
        throw ConstantInput();
    for (int x : h)
        if (x < 1)
            throw InvalidStep("token values must be positive");

    Gadget out;
    GadgetReport& rep = out.report;
    rep.small_m = *std::min_element(h.begin(), h.end());
    rep.big_m = *std::max_element(h.begin(), h.end());
    rep.spread = rep.big_m - rep.small_m;
    rep.raised_copies = raise_all_copies ? rep.big_m : rep.small_m;
    const int copies = rep.big_m;
    rep.apex = copies * n;

    std::vector<Edge> es;
    out.tokens.assign(copies * n + 1, 0);
    for (int i = 0; i < copies; ++i) {
        std::vector<Vertex> ids(n);
        std::vector<Vertex> a;
        for (Vertex x = 0; x < n; ++x) {
            ids[x] = i * n + x;
            out.tokens[ids[x]] = h[x];
            if (h[x] == rep.small_m) {
                a.push_back(ids[x]);
                es.emplace_back(ids[x], rep.apex);
                if (i < rep.raised_copies)
                    ++out.tokens[ids[x]];
            }
        }
        for (const auto& e : h_graph.edges())
            es.emplace_back(ids[e.u], ids[e.v]);
        rep.copies.push_back(std::move(ids));
        rep.a_sets.emplace_back(std::move(a));
    }
    out.tokens[rep.apex] = copies;
    out.graph = Graph(copies * n + 1, es);

    if (source_sequence != nullptr && verify_sd3_sequence(h_graph, h, *source_sequence)) {
        Sd3Sequence seq;
        for (int k = 1; k < copies; ++k)
            seq.ops.push_back(Sd3Op::reduce(rep.apex));
        for (Vertex x : out.graph.neighbors(rep.apex))
            seq.ops.push_back(Sd3Op::edge_delete(x, rep.apex));
        for (const auto& ids : rep.copies)
            for (const auto& op : source_sequence->ops)
                seq.ops.push_back(op.kind == Sd3Op::Kind::ReduceValue ? Sd3Op::reduce(ids[op.v])
                                                                      : Sd3Op::edge_delete(ids[op.v], ids[op.w]));
        rep.sequence_verdict = verify_sd3_sequence(out.graph, out.tokens, seq);
        if (rep.sequence_verdict)
            rep.sequence = std::move(seq);
    } else {
        rep.sequence_verdict = {false, -1, "NoSourceSequence", "no verified sequence for the source pair"};
    }
    return out;
}

} // namespace paintkit
