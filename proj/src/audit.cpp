#include "paintkit/audit.hpp"

#include "paintkit/errors.hpp"
#include "paintkit/formats.hpp"
#include "paintkit/orientation.hpp"
#include "paintkit/structure.hpp"

#include <algorithm>

namespace paintkit {

using nlohmann::json;

ParameterEntry ParameterEntry::computed(int v, std::string witness) {
    ParameterEntry e;
    e.status = Status::Computed;
    e.value = v;
    e.witness = std::move(witness);
    return e;
}

ParameterEntry ParameterEntry::bounded(int lo, int hi) {
    ParameterEntry e;
    e.status = Status::Bounded;
    e.lower = lo;
    e.upper = hi;
    return e;
}

ParameterEntry ParameterEntry::capped() { return {}; }

const ParameterEntry& ParameterReport::at(const std::string& name) const {
    static const ParameterEntry missing;
    auto it = entries.find(name);
    return it == entries.end() ? missing : it->second;
}

json ParameterReport::to_json(const std::vector<std::string>& violations) const {
    json params = json::object();
    for (const auto& [name, e] : entries) {
        json j;
        switch (e.status) {
        case ParameterEntry::Status::Computed:
            j["status"] = "computed";
            j["value"] = *e.value;
            break;
        case ParameterEntry::Status::Bounded:
            j["status"] = "bounded";
            j["lower"] = *e.lower;
            j["upper"] = *e.upper;
            break;
        case ParameterEntry::Status::Capped:
            j["status"] = "capped";
            break;
        }
        if (!e.witness.empty())
            j["witness"] = e.witness;
        params[name] = j;
    }
    return json{{"graph6", graph6}, {"parameters", params}, {"violations", violations}};
}

ParameterReport ParameterReport::from_json(const json& payload) {
    ParameterReport r;
    if (payload.contains("graph6"))
        r.graph6 = payload["graph6"].get<std::string>();
    for (auto it = payload["parameters"].begin(); it != payload["parameters"].end(); ++it) {
        const json& j = it.value();
        ParameterEntry e;
        if (j["status"] == "computed")
            e = ParameterEntry::computed(j["value"].get<int>());
        else if (j["status"] == "bounded")
            e = ParameterEntry::bounded(j["lower"].get<int>(), j["upper"].get<int>());
        if (j.contains("witness"))
            e.witness = j["witness"].get<std::string>();
        r.entries[it.key()] = e;
    }
    return r;
}

const std::vector<std::pair<std::string, std::string>>& chain_relations() {
    static const std::vector<std::pair<std::string, std::string>> rel = {
        {"chi", "ch"},     {"ch", "chi_P"}, {"chi_P", "AT"},   {"AT", "sd3"}, {"chi_P", "chi_DPP"},
        {"chi_DPP", "sd3"}, {"sd3", "rem"}, {"rem", "sd4"},    {"sd3", "sd4"}, {"sd4", "sd"},
    };
    return rel;
}

std::vector<std::string> chain_violations(const ParameterReport& r) {
    std::vector<std::string> out;
    for (const auto& [a, b] : chain_relations()) {
        auto lo = r.at(a).low();
        auto hi = r.at(b).high();
        if (lo && hi && *lo > *hi)
            out.push_back(a + " <= " + b + " fails: " + std::to_string(*lo) + " > " + std::to_string(*hi));
    }
    return out;
}

namespace {

TokenState constant(const Graph& g, int k) { return TokenState(g.vertex_count(), k); }

void check(bool ok, const std::string& what) {
    if (!ok)
        throw VerificationFailed(what + " certificate did not replay");
}

template <class F>
ParameterEntry guarded(F&& f) {
    try {
        return f();
    } catch (const CapExceeded&) {
        return ParameterEntry::capped();
    }
}

int dp_colouring_number(const Graph& g, const ExactLimits& limits, int upper) {
    for (int k = 1; k < upper; ++k)
        if (is_dp_f_colorable(g, constant(g, k), limits))
            return k;
    return upper;
}

} // namespace

ParameterReport compute_parameters(const Graph& g, const AuditOptions& o) {
    ParameterReport r;
    r.graph6 = encode_graph6(g);
    const int n = g.vertex_count();

    auto deg = degeneracy_ordering(g);
    const int sd = deg.strict_degeneracy();
    {
        std::vector<Vertex> order(deg.order.rbegin(), deg.order.rend());
        check(bool(verify_removal_scheme(g, constant(g, sd), greedy_scheme(order), true)), "sd");
        r.entries["sd"] = ParameterEntry::computed(sd, "removal-scheme");
    }

    r.entries["chi"] = guarded([&] {
        int chi = chromatic_number_exact(g);
        auto c = proper_coloring(g, chi);
        check(c && is_proper_coloring(g, *c), "chi");
        return ParameterEntry::computed(chi, "coloring");
    });

    r.entries["ch"] = guarded([&] {
        int ch = choosability(g, o.choosability);
        if (ch > 1) {
            auto bad = is_f_choosable(g, constant(g, ch - 1), o.choosability);
            check(!bad.choosable && bad.bad_lists && !list_coloring(g, *bad.bad_lists), "ch");
        }
        return ParameterEntry::computed(ch, ch > 1 ? "bad-lists" : "");
    });

    r.entries["chi_P"] = guarded([&] {
        int p = paintability(g, o.painting);
        std::string witness;
        try {
            auto s = painting_strategy(g, constant(g, p), 200000, o.painting);
            check(s && bool(verify_painting_strategy(g, *s)), "chi_P");
            witness = "painting-strategy";
        } catch (const CapExceeded&) {
        }
        return ParameterEntry::computed(p, witness);
    });

    r.entries["AT"] = guarded([&] {
        int at = at_number(g, o.at_edge_cap);
        auto orient = is_f_alon_tarsi(g, constant(g, at), o.at_edge_cap);
        check(orient.has_value() && (n == 0 || orient->max_out_degree() < at), "AT");
        ParityCount pc = eulerian_parity(*orient, o.at_edge_cap);
        check(pc.even != pc.odd, "AT");
        return ParameterEntry::computed(at, "orientation");
    });

    r.entries["sd3"] = guarded([&] {
        int v = paintkit::sd3(g, o.sd3);
        auto seq = is_sd3_degenerate(g, constant(g, v), o.sd3);
        check(seq && bool(verify_sd3_sequence(g, constant(g, v), *seq)), "sd3");
        return ParameterEntry::computed(v, "sd3-sequence");
    });

    for (bool restricted : {true, false}) {
        r.entries[restricted ? "sd4" : "rem"] = guarded([&] {
            int v = removability_number(g, restricted, o.removability);
            auto s = removability(g, constant(g, v), {restricted, true}, o.removability);
            check(s && bool(verify_removal_scheme(g, constant(g, v), *s, restricted)), "removability");
            return ParameterEntry::computed(v, "removal-scheme");
        });
    }

    r.entries["chi_DPP"] = guarded([&] {
        ExactLimits exact = kDpPaintingLimits;
        if (n <= o.dp_exact_vertices) {
            exact.vertex_cap = std::max(exact.vertex_cap, o.dp_exact_vertices);
            return ParameterEntry::computed(dp_paintability(g, exact));
        }
        // Bracket: max(chi_P, DP-colouring number) <= chi_DPP <= sd3.
        auto upper = r.at("sd3").high();
        auto painting = r.at("chi_P").low();
        if (!upper || !painting)
            return ParameterEntry::capped();
        ExactLimits bracket{n, *upper, o.dp_bracket_budget};
        int lo = std::max(*painting, dp_colouring_number(g, bracket, *upper));
        int hi = *upper;
        if (lo < hi) {
            try {
                if (is_dp_f_paintable(g, constant(g, lo), bracket))
                    hi = lo;
                else
                    ++lo;
            } catch (const CapExceeded&) {
            }
        }
        if (lo == hi)
            return ParameterEntry::computed(lo);
        return ParameterEntry::bounded(lo, hi);
    });
    return r;
}

AuditResult chain_audit(const std::vector<Graph>& corpus, const AuditOptions& options) {
    AuditResult out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        out.reports.push_back(compute_parameters(corpus[i], options));
        for (const auto& v : chain_violations(out.reports.back()))
            out.violations.push_back("graph " + std::to_string(i) + " (" + out.reports.back().graph6 + "): " + v);
    }
    return out;
}

} // namespace paintkit
