#include "paintkit/witness.hpp"

#include "paintkit/audit.hpp"
#include "paintkit/formats.hpp"

#include <cstdio>
#include <set>

namespace paintkit {

using nlohmann::json;

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : encode_graph6(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string encode_witness(const WitnessDocument& doc) {
    json j;
    j["kind"] = doc.kind;
    j["version"] = doc.version;
    j["graph_hash"] = doc.graph_hash;
    j["payload"] = doc.payload;
    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& detail) { throw SchemaViolation(path, detail); }

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
               std::initializer_list<const char*> optional = {}) {
    if (!j.is_object())
        fail(path, "expected an object");
    for (const char* k : required)
        if (!j.contains(k))
            fail(path + "." + k, "missing field");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : required)
            known = known || it.key() == k;
        for (const char* k : optional)
            known = known || it.key() == k;
        if (!known)
            fail(path + "." + it.key(), "unexpected field");
    }
}

long long integer(const json& j, const std::string& path, long long lo = 0) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    long long x = j.get<long long>();
    if (x < lo)
        fail(path, "value below " + std::to_string(lo));
    if (x > INT32_MAX)
        fail(path, "value too large");
    return x;
}

std::vector<int> int_array(const json& j, const std::string& path, long long lo = 0) {
    if (!j.is_array())
        fail(path, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(static_cast<int>(integer(j[i], path + "[" + std::to_string(i) + "]", lo)));
    return out;
}

VertexSet vertex_set(const json& j, const std::string& path) {
    auto xs = int_array(j, path);
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1])
            fail(path, "vertex lists must be strictly increasing");
    return VertexSet(xs);
}

json set_json(const VertexSet& s) { return json(s.members()); }

void check_tokens(const std::vector<int>& t, const std::string& path, const Graph* g) {
    if (g && static_cast<int>(t.size()) != g->vertex_count())
        fail(path, "expected " + std::to_string(g->vertex_count()) + " token counts");
}

void check_vertex(int v, const std::string& path, const Graph* g) {
    if (g && !g->is_vertex(v))
        fail(path, "vertex " + std::to_string(v) + " out of range");
}

const char* claim_name(OrientationClaim c) { return c == OrientationClaim::AlonTarsi ? "alon-tarsi" : "odd-cycle-free"; }

void validate_orientation(const json& p, const Graph* g) {
    only_keys(p, "$.payload", {"arcs", "claim", "outdegree_limit"});
    if (!p["claim"].is_string() || (p["claim"] != "odd-cycle-free" && p["claim"] != "alon-tarsi"))
        fail("$.payload.claim", "expected \"odd-cycle-free\" or \"alon-tarsi\"");
    integer(p["outdegree_limit"], "$.payload.outdegree_limit");
    const json& arcs = p["arcs"];
    if (!arcs.is_array())
        fail("$.payload.arcs", "expected an array");
    std::set<Edge> seen;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        std::string path = "$.payload.arcs[" + std::to_string(i) + "]";
        auto pair = int_array(arcs[i], path);
        if (pair.size() != 2)
            fail(path, "expected [tail, head]");
        check_vertex(pair[0], path, g);
        check_vertex(pair[1], path, g);
        if (g && !g->has_edge(pair[0], pair[1]))
            fail(path, "not an edge of the graph");
        if (!seen.insert(Edge(pair[0], pair[1])).second)
            fail(path, "edge oriented twice");
    }
    if (g && seen.size() != g->edge_count())
        fail("$.payload.arcs", "some edges are not oriented");
}

void validate_removal(const json& p, const Graph* g) {
    only_keys(p, "$.payload", {"restricted", "steps", "tokens"}, {"trace"});
    if (!p["restricted"].is_boolean())
        fail("$.payload.restricted", "expected a boolean");
    auto tokens = int_array(p["tokens"], "$.payload.tokens", 1);
    check_tokens(tokens, "$.payload.tokens", g);
    if (p.contains("trace") && !p["trace"].is_object())
        fail("$.payload.trace", "expected an object");
    const json& steps = p["steps"];
    if (!steps.is_array())
        fail("$.payload.steps", "expected an array");
    std::vector<char> gone(g ? g->vertex_count() : 0, 0);
    std::set<int> deleted;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string path = "$.payload.steps[" + std::to_string(i) + "]";
        only_keys(steps[i], path, {"save", "vertex"});
        int u = static_cast<int>(integer(steps[i]["vertex"], path + ".vertex"));
        VertexSet save = vertex_set(steps[i]["save"], path + ".save");
        check_vertex(u, path + ".vertex", g);
        if (!deleted.insert(u).second)
            fail(path + ".vertex", "vertex deleted twice");
        if (save.contains(u))
            fail(path + ".save", "a vertex cannot save itself");
        if (g) {
            for (Vertex w : save)
                if (!g->is_vertex(w) || gone[w] || !g->has_edge(u, w))
                    fail(path + ".save", "vertex " + std::to_string(w) + " is not a remaining neighbour of " +
                                             std::to_string(u));
            gone[u] = 1;
        }
    }
}

void validate_sd3(const json& p, const Graph* g) {
    only_keys(p, "$.payload", {"ops", "tokens"});
    auto tokens = int_array(p["tokens"], "$.payload.tokens", 1);
    check_tokens(tokens, "$.payload.tokens", g);
    const json& ops = p["ops"];
    if (!ops.is_array())
        fail("$.payload.ops", "expected an array");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        std::string path = "$.payload.ops[" + std::to_string(i) + "]";
        if (!ops[i].is_object() || !ops[i].contains("op") || !ops[i]["op"].is_string())
            fail(path + ".op", "missing operation name");
        if (ops[i]["op"] == "reduce") {
            only_keys(ops[i], path, {"op", "v"});
            check_vertex(static_cast<int>(integer(ops[i]["v"], path + ".v")), path + ".v", g);
        } else if (ops[i]["op"] == "edge_delete") {
            only_keys(ops[i], path, {"op", "v", "w"});
            int v = static_cast<int>(integer(ops[i]["v"], path + ".v"));
            int w = static_cast<int>(integer(ops[i]["w"], path + ".w"));
            check_vertex(v, path + ".v", g);
            check_vertex(w, path + ".w", g);
            if (v == w || (g && !g->has_edge(v, w)))
                fail(path, "not an edge of the graph");
        } else {
            fail(path + ".op", "expected \"reduce\" or \"edge_delete\"");
        }
    }
}

void validate_painting(const json& p, const Graph* g) {
    only_keys(p, "$.payload", {"policy", "tokens"});
    auto tokens = int_array(p["tokens"], "$.payload.tokens", 1);
    check_tokens(tokens, "$.payload.tokens", g);
    const json& policy = p["policy"];
    if (!policy.is_array())
        fail("$.payload.policy", "expected an array");
    for (std::size_t i = 0; i < policy.size(); ++i) {
        std::string path = "$.payload.policy[" + std::to_string(i) + "]";
        only_keys(policy[i], path, {"lister", "painter", "remaining", "tokens"});
        VertexSet rem = vertex_set(policy[i]["remaining"], path + ".remaining");
        VertexSet lister = vertex_set(policy[i]["lister"], path + ".lister");
        VertexSet painter = vertex_set(policy[i]["painter"], path + ".painter");
        auto t = int_array(policy[i]["tokens"], path + ".tokens");
        if (t.size() != tokens.size())
            fail(path + ".tokens", "token vector length differs from the start position");
        if (lister.set_difference(rem).size() != 0)
            fail(path + ".lister", "Lister's set must lie in the remaining vertices");
        if (painter.set_difference(lister).size() != 0)
            fail(path + ".painter", "Painter's set must lie in Lister's set");
        for (Vertex v : rem)
            check_vertex(v, path + ".remaining", g);
    }
}

void validate_report(const json& p) {
    only_keys(p, "$.payload", {"parameters", "violations"}, {"graph6"});
    if (p.contains("graph6") && !p["graph6"].is_string())
        fail("$.payload.graph6", "expected a string");
    const json& params = p["parameters"];
    if (!params.is_object())
        fail("$.payload.parameters", "expected an object");
    for (auto it = params.begin(); it != params.end(); ++it) {
        std::string path = "$.payload.parameters." + it.key();
        only_keys(it.value(), path, {"status"}, {"lower", "upper", "value", "witness"});
        const json& e = it.value();
        const json& st = e["status"];
        if (!st.is_string() || (st != "computed" && st != "bounded" && st != "capped"))
            fail(path + ".status", "expected \"computed\", \"bounded\" or \"capped\"");
        if (e.contains("witness") && !e["witness"].is_string())
            fail(path + ".witness", "expected a string");
        auto require = [&](const char* key, bool wanted) {
            if (wanted && !e.contains(key))
                fail(path + "." + key, "missing field");
            if (!wanted && e.contains(key))
                fail(path + "." + key, std::string("not allowed for status ") + st.get<std::string>());
            if (wanted)
                integer(e[key], path + "." + key);
        };
        require("value", st == "computed");
        require("lower", st == "bounded");
        require("upper", st == "bounded");
    }
    const json& viol = p["violations"];
    if (!viol.is_array())
        fail("$.payload.violations", "expected an array");
    for (std::size_t i = 0; i < viol.size(); ++i)
        if (!viol[i].is_string())
            fail("$.payload.violations[" + std::to_string(i) + "]", "expected a string");
}

} // namespace

void validate_witness(const WitnessDocument& doc, const Graph* g) {
    if (doc.version != kWitnessVersion)
        fail("$.version", "unsupported version " + std::to_string(doc.version));
    if (g && doc.graph_hash != graph_hash(*g))
        throw HashMismatch(doc.graph_hash, graph_hash(*g));
    if (doc.kind == "orientation")
        validate_orientation(doc.payload, g);
    else if (doc.kind == "removal-scheme")
        validate_removal(doc.payload, g);
    else if (doc.kind == "sd3-sequence")
        validate_sd3(doc.payload, g);
    else if (doc.kind == "painting-strategy")
        validate_painting(doc.payload, g);
    else if (doc.kind == "parameter-report")
        validate_report(doc.payload);
    else
        fail("$.kind", "unknown kind \"" + doc.kind + "\"");
}

WitnessDocument decode_witness(std::string_view text, const Graph* g) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaViolation("$", std::string("not valid JSON: ") + e.what());
    }
    only_keys(j, "$", {"graph_hash", "kind", "payload", "version"});
    if (!j["kind"].is_string())
        fail("$.kind", "expected a string");
    if (!j["graph_hash"].is_string())
        fail("$.graph_hash", "expected a string");
    if (!j["payload"].is_object())
        fail("$.payload", "expected an object");
    WitnessDocument doc;
    doc.kind = j["kind"].get<std::string>();
    doc.version = static_cast<int>(integer(j["version"], "$.version"));
    doc.graph_hash = j["graph_hash"].get<std::string>();
    doc.payload = j["payload"];
    validate_witness(doc, g);
    return doc;
}

WitnessDocument orientation_witness(const Orientation& o, OrientationClaim claim, int outdegree_limit) {
    json arcs = json::array();
    for (auto [a, b] : o.arcs())
        arcs.push_back({a, b});
    return {"orientation", kWitnessVersion, graph_hash(o.host()),
            json{{"arcs", arcs}, {"claim", claim_name(claim)}, {"outdegree_limit", outdegree_limit}}};
}

OrientationWitness read_orientation_witness(const WitnessDocument& doc, const Graph& g) {
    validate_witness(doc, &g);
    if (doc.kind != "orientation")
        fail("$.kind", "expected an orientation witness");
    std::vector<Arc> arcs;
    for (const auto& a : doc.payload["arcs"])
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    OrientationWitness w;
    w.orientation = Orientation::from_arcs(g, arcs);
    w.claim = doc.payload["claim"] == "alon-tarsi" ? OrientationClaim::AlonTarsi : OrientationClaim::OddCycleFree;
    w.outdegree_limit = doc.payload["outdegree_limit"].get<int>();
    return w;
}

WitnessDocument removal_witness(const Graph& g, const TokenState& f, const RemovalScheme& s, bool restricted,
                                const std::optional<json>& trace) {
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back(json{{"save", set_json(st.save)}, {"vertex", st.vertex}});
    json p{{"restricted", restricted}, {"steps", steps}, {"tokens", f}};
    if (trace)
        p["trace"] = *trace;
    return {"removal-scheme", kWitnessVersion, graph_hash(g), p};
}

RemovalWitness read_removal_witness(const WitnessDocument& doc) {
    if (doc.kind != "removal-scheme")
        fail("$.kind", "expected a removal-scheme witness");
    validate_removal(doc.payload, nullptr);
    RemovalWitness w;
    w.tokens = doc.payload["tokens"].get<std::vector<int>>();
    w.restricted = doc.payload["restricted"].get<bool>();
    for (const auto& st : doc.payload["steps"])
        w.scheme.steps.push_back({st["vertex"].get<int>(), VertexSet(st["save"].get<std::vector<int>>())});
    return w;
}

WitnessDocument sd3_witness(const Graph& g, const TokenState& f, const Sd3Sequence& s) {
    json ops = json::array();
    for (const auto& op : s.ops) {
        if (op.kind == Sd3Op::Kind::ReduceValue)
            ops.push_back(json{{"op", "reduce"}, {"v", op.v}});
        else
            ops.push_back(json{{"op", "edge_delete"}, {"v", op.v}, {"w", op.w}});
    }
    return {"sd3-sequence", kWitnessVersion, graph_hash(g), json{{"ops", ops}, {"tokens", f}}};
}

Sd3Witness read_sd3_witness(const WitnessDocument& doc) {
    if (doc.kind != "sd3-sequence")
        fail("$.kind", "expected an sd3-sequence witness");
    validate_sd3(doc.payload, nullptr);
    Sd3Witness w;
    w.tokens = doc.payload["tokens"].get<std::vector<int>>();
    for (const auto& op : doc.payload["ops"]) {
        if (op["op"] == "reduce")
            w.sequence.ops.push_back(Sd3Op::reduce(op["v"].get<int>()));
        else
            w.sequence.ops.push_back(Sd3Op::edge_delete(op["v"].get<int>(), op["w"].get<int>()));
    }
    return w;
}

WitnessDocument painting_witness(const Graph& g, const PaintingStrategy& s) {
    json policy = json::array();
    for (const auto& e : s.policy)
        policy.push_back(json{{"lister", set_json(e.lister)},
                              {"painter", set_json(e.painter)},
                              {"remaining", set_json(e.remaining)},
                              {"tokens", e.tokens}});
    return {"painting-strategy", kWitnessVersion, graph_hash(g), json{{"policy", policy}, {"tokens", s.tokens}}};
}

PaintingStrategy read_painting_witness(const WitnessDocument& doc) {
    if (doc.kind != "painting-strategy")
        fail("$.kind", "expected a painting-strategy witness");
    validate_painting(doc.payload, nullptr);
    PaintingStrategy s;
    s.tokens = doc.payload["tokens"].get<std::vector<int>>();
    for (const auto& e : doc.payload["policy"])
        s.policy.push_back({VertexSet(e["remaining"].get<std::vector<int>>()), e["tokens"].get<std::vector<int>>(),
                            VertexSet(e["lister"].get<std::vector<int>>()),
                            VertexSet(e["painter"].get<std::vector<int>>())});
    return s;
}

Verdict verify_witness(const WitnessDocument& doc, const Graph& g) {
    try {
        validate_witness(doc, &g);
    } catch (const HashMismatch& e) {
        return {false, -1, "HashMismatch", e.what()};
    } catch (const SchemaViolation& e) {
        return {false, -1, "SchemaViolation", e.what()};
    }
    if (doc.kind == "orientation") {
        auto w = read_orientation_witness(doc, g);
        if (w.orientation.max_out_degree() > w.outdegree_limit)
            return {false, -1, "OutdegreeExceeded",
                    "maximum out-degree " + std::to_string(w.orientation.max_out_degree()) + " above " +
                        std::to_string(w.outdegree_limit)};
        if (w.claim == OrientationClaim::OddCycleFree) {
            if (has_directed_odd_cycle(w.orientation).found)
                return {false, -1, "DirectedOddCycle", "orientation has a directed odd cycle"};
        } else {
            ParityCount pc = eulerian_parity(w.orientation);
            if (pc.even == pc.odd)
                return {false, -1, "NotAlonTarsi", "even and odd Eulerian subgraph counts agree"};
        }
        return {};
    }
    if (doc.kind == "removal-scheme") {
        auto w = read_removal_witness(doc);
        return verify_removal_scheme(g, w.tokens, w.scheme, w.restricted);
    }
    if (doc.kind == "sd3-sequence") {
        auto w = read_sd3_witness(doc);
        return verify_sd3_sequence(g, w.tokens, w.sequence);
    }
    if (doc.kind == "painting-strategy")
        return verify_painting_strategy(g, read_painting_witness(doc));
    auto report = ParameterReport::from_json(doc.payload);
    auto violations = chain_violations(report);
    if (!violations.empty())
        return {false, -1, "ChainViolation", violations.front()};
    if (!doc.payload["violations"].empty())
        return {false, -1, "ChainViolation", doc.payload["violations"][0].get<std::string>()};
    return {};
}

} // namespace paintkit
