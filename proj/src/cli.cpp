#include "paintkit/cli.hpp"

#include "paintkit/audit.hpp"
#include "paintkit/formats.hpp"
#include "paintkit/gadget.hpp"
#include "paintkit/knn.hpp"
#include "paintkit/orientation.hpp"
#include "paintkit/scheme_builder.hpp"
#include "paintkit/structure.hpp"
#include "paintkit/witness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace paintkit::cli {

using nlohmann::json;

namespace {

class IoError : public Error {
  public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw IoError("cannot write " + path);
}

bool is_graph6_name(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    return ext == ".g6" || ext == ".graph6";
}

/// "g6:<text>" is a literal graph6 string; otherwise a file, graph6 by
/// extension (.g6, .graph6) or when `format` says so, else an edge list.
std::vector<Graph> load_graphs(const std::string& arg, const std::string& format) {
    if (arg.rfind("g6:", 0) == 0)
        return {decode_graph6(arg.substr(3))};
    std::string text = read_file(arg);
    bool g6 = format == "g6" || (format == "auto" && is_graph6_name(arg));
    if (g6)
        return decode_graph6_lines(text);
    return {decode_edge_list(text)};
}

Graph load_graph(const std::string& arg, const std::string& format) {
    auto gs = load_graphs(arg, format);
    if (gs.size() != 1)
        throw IoError(arg + " holds " + std::to_string(gs.size()) + " graphs, expected one");
    return gs.front();
}

TokenState parse_tokens(const std::string& arg) {
    std::string text = std::filesystem::exists(arg) ? read_file(arg) : arg;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    TokenState t;
    std::string word;
    while (in >> word) {
        try {
            std::size_t used = 0;
            int x = std::stoi(word, &used);
            if (used != word.size())
                throw std::invalid_argument(word);
            t.push_back(x);
        } catch (const std::exception&) {
            throw ParseError(ParseError::Kind::Syntax, t.size(), "token value '" + word + "' is not an integer");
        }
    }
    return t;
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--override-const", "expected name=value, got " + item);
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--override-const", "bad value in " + item);
        }
    }
    return out;
}

ProperColoring coloring_for(const Graph& g, std::optional<int> r) {
    int k = r ? *r : chromatic_number_exact(g, 64);
    auto c = proper_coloring(g, k);
    if (!c)
        throw VerificationFailed("graph is not " + std::to_string(k) + "-colourable");
    return *c;
}

json report_json(const ParameterReport& r) { return r.to_json(chain_violations(r)); }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph colouring parameters, removal schemes and their certificates."};
    app.name("paintkit");
    app.require_subcommand(1, 1);

    std::string graph_arg, witness_arg, tokens_arg, output, format = "auto";
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_arg, "graph file (.g6 or edge list) or g6:<text>")->required();
        sub->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "g6", "edges"}));
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", output, "output file (default stdout)"); };

    auto* params = app.add_subcommand("params", "parameter report of one graph");
    add_graph(params);
    add_out(params);
    int dp_exact = 4;
    params->add_option("--dp-exact-vertices", dp_exact, "compute chi_DPP exactly up to this many vertices");

    auto* audit = app.add_subcommand("audit", "chain audit of a graph6 corpus");
    std::string corpus;
    audit->add_option("corpus", corpus, "graph6 file, one graph per line")->required();
    audit->add_option("--dp-exact-vertices", dp_exact, "compute chi_DPP exactly up to this many vertices");
    add_out(audit);

    auto* orient = app.add_subcommand("orient-at", "bounded orientation without directed odd cycles");
    add_graph(orient);
    add_out(orient);
    std::optional<int> r_opt, d_opt;
    orient->add_option("--r", r_opt, "number of colour classes (default: chromatic number)");
    orient->add_option("--d", d_opt, "degree bound (default: maximum degree)");

    auto* build = app.add_subcommand("build-scheme", "removal scheme from the bipartite or chromatic pipeline");
    add_graph(build);
    add_out(build);
    bool bipartite = false, chromatic = false;
    double alpha = 0;
    std::optional<int> save_budget;
    std::uint64_t seed = 0;
    std::vector<std::string> override_items;
    auto* bip_flag = build->add_flag("--bipartite", bipartite, "bipartite pipeline (default)");
    build->add_flag("--chromatic", chromatic, "chromatic recursion")->excludes(bip_flag);
    build->add_option("--alpha", alpha, "alpha for --bipartite (default: min degree / d)");
    build->add_option("--save-budget", save_budget, "s in f = deg - s (or d - s)");
    build->add_option("--seed", seed, "random seed");
    build->add_option("--override-const", override_items, "name=value, e.g. epsilon=0.5");
    build->add_option("--r", r_opt, "colour classes for --chromatic (default: chromatic number)");
    build->add_option("--d", d_opt, "degree bound (default: maximum degree)");

    auto* verify = app.add_subcommand("verify", "replay a witness against a graph");
    add_graph(verify);
    verify->add_option("witness", witness_arg, "witness JSON file")->required();

    auto* knn = app.add_subcommand("knn", "removability study of K_{n,n}");
    int knn_n = 1;
    bool long_run = false;
    knn->add_option("--n", knn_n, "side size")->required()->check(CLI::PositiveNumber);
    knn->add_flag("--long", long_run, "allow n = 4 (minutes)");
    add_out(knn);

    auto* gadget = app.add_subcommand("gadget", "token-spread reducing gadget of a sd3-degenerate pair");
    add_graph(gadget);
    gadget->add_option("tokens", tokens_arg, "token values, comma separated or a file")->required();
    bool first_m_copies = false;
    std::string witness_out, graph_out;
    gadget->add_flag("--raise-first-m", first_m_copies, "raise only the first m copies");
    gadget->add_option("--witness-out", witness_out, "write the gadget's sd3 witness here");
    gadget->add_option("--graph-out", graph_out, "write the gadget graph (graph6) here");
    add_out(gadget);

    auto* convert = app.add_subcommand("convert", "convert between graph6 and edge lists");
    std::string convert_in, convert_out, to_format = "auto";
    convert->add_option("input", convert_in, "input file")->required();
    convert->add_option("output", convert_out, "output file, - for stdout")->required();
    convert->add_option("--from", format, "input format")->check(CLI::IsMember({"auto", "g6", "edges"}));
    convert->add_option("--to", to_format, "output format")->check(CLI::IsMember({"auto", "g6", "edges"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*params) {
            Graph g = load_graph(graph_arg, format);
            AuditOptions opts;
            opts.dp_exact_vertices = dp_exact;
            auto report = compute_parameters(g, opts);
            WitnessDocument doc{"parameter-report", kWitnessVersion, graph_hash(g), report_json(report)};
            write_output(output, encode_witness(doc), out);
            return kOk;
        }
        if (*audit) {
            auto graphs = load_graphs(corpus, "g6");
            AuditOptions opts;
            opts.dp_exact_vertices = dp_exact;
            auto result = chain_audit(graphs, opts);
            json reports = json::array();
            for (const auto& r : result.reports)
                reports.push_back(report_json(r));
            json doc{{"graphs", graphs.size()}, {"violations", result.violations}, {"reports", reports}};
            write_output(output, doc.dump(2) + "\n", out);
            for (const auto& v : result.violations)
                err << "violation: " << v << "\n";
            err << graphs.size() << " graphs, " << result.violations.size() << " violations\n";
            return result.violations.empty() ? kOk : kRejected;
        }
        if (*orient) {
            Graph g = load_graph(graph_arg, format);
            auto coloring = coloring_for(g, r_opt);
            int d = d_opt.value_or(g.max_degree());
            auto bo = odd_cycle_free_bounded_orientation(g, d, coloring);
            auto doc = orientation_witness(bo.orientation, OrientationClaim::OddCycleFree, bo.outdegree_limit);
            write_output(output, encode_witness(doc), out);
            return kOk;
        }
        if (*build) {
            Graph g = load_graph(graph_arg, format);
            auto overrides = parse_overrides(override_items);
            try {
                if (chromatic) {
                    auto coloring = coloring_for(g, r_opt);
                    ChromaticSchemeOptions co;
                    co.seed = seed;
                    co.overrides = overrides;
                    co.save_budget = save_budget;
                    auto res = build_chromatic_scheme(g, d_opt.value_or(g.max_degree()), coloring, co);
                    write_output(output, encode_witness(removal_witness(g, res.tokens, res.scheme, false,
                                                                        res.trace_json())),
                                 out);
                } else {
                    BipartiteSchemeOptions bo;
                    int d = d_opt.value_or(std::max(1, g.max_degree()));
                    bo.alpha = alpha > 0 ? alpha : std::max(1, g.min_degree()) / double(d);
                    bo.alpha = std::min(1.0, bo.alpha);
                    bo.d = d;
                    bo.save_budget = save_budget;
                    bo.seed = seed;
                    bo.overrides = overrides;
                    auto res = build_bipartite_scheme(g, bo);
                    write_output(output, encode_witness(removal_witness(g, res.tokens, res.scheme, false,
                                                                        res.trace.to_json())),
                                 out);
                }
            } catch (const PipelineFailed& e) {
                json report{{"result", "PipelineFailed"},
                            {"phase", e.phase},
                            {"vertex", e.vertex},
                            {"detail", e.what()},
                            {"trace", e.trace}};
                write_output(output, report.dump(2) + "\n", out);
            }
            return kOk;
        }
        if (*verify) {
            Graph g = load_graph(graph_arg, format);
            auto doc = decode_witness(read_file(witness_arg));
            Verdict v = verify_witness(doc, g);
            if (v) {
                out << "accepted " << doc.kind << "\n";
                return kOk;
            }
            out << "rejected " << doc.kind << ": " << v.cause;
            if (v.failing_step >= 0)
                out << " at step " << v.failing_step;
            if (!v.detail.empty())
                out << " (" << v.detail << ")";
            out << "\n";
            return kRejected;
        }
        if (*knn) {
            KnnOptions opts;
            opts.n_cap = long_run ? 4 : 3;
            auto st = knn_study(knn_n, opts);
            json schemes = json::array();
            for (const auto& s : st.schemes) {
                json profile = json::array();
                for (const auto& p : s.profile)
                    profile.push_back(json{{"vertex", p.vertex},
                                           {"side", p.side},
                                           {"index", p.index},
                                           {"save_size", p.save_size},
                                           {"cap", p.cap},
                                           {"within", p.within}});
                schemes.push_back(json{{"tokens", s.tokens},
                                       {"sigma_a", s.sigma_a},
                                       {"sigma_b", s.sigma_b},
                                       {"sigma_bound", s.sigma_bound},
                                       {"harmonic_ok", s.harmonic_ok},
                                       {"profile", profile}});
            }
            json doc{{"n", st.n},
                     {"k", st.k},
                     {"lower_bound", st.lower_bound},
                     {"trivial_upper", st.trivial_upper},
                     {"bound_holds", st.bound_holds},
                     {"harmonic_ok", st.harmonic_ok},
                     {"schemes", schemes}};
            write_output(output, doc.dump(2) + "\n", out);
            return st.bound_holds && st.harmonic_ok ? kOk : kRejected;
        }
        if (*gadget) {
            Graph g = load_graph(graph_arg, format);
            TokenState h = parse_tokens(tokens_arg);
            if (static_cast<int>(h.size()) != g.vertex_count())
                throw ParseError(ParseError::Kind::Syntax, h.size(),
                                 "expected " + std::to_string(g.vertex_count()) + " token values");
            auto source = is_sd3_degenerate(g, h);
            auto gd = build_nonconstant_gadget(g, h, source ? &*source : nullptr, !first_m_copies);
            json a_sets = json::array();
            for (const auto& a : gd.report.a_sets)
                a_sets.push_back(a.members());
            json doc{{"graph6", encode_graph6(gd.graph)},
                     {"tokens", gd.tokens},
                     {"M", gd.report.big_m},
                     {"m", gd.report.small_m},
                     {"spread_in", gd.report.spread},
                     {"spread_out", token_spread(gd.tokens)},
                     {"apex", gd.report.apex},
                     {"a_sets", a_sets},
                     {"raised_copies", gd.report.raised_copies},
                     {"source_sd3_degenerate", source.has_value()},
                     {"sequence_verdict", gd.report.sequence_verdict.accepted ? "accepted"
                                                                               : gd.report.sequence_verdict.cause}};
            if (!graph_out.empty())
                write_output(graph_out, encode_graph6(gd.graph) + "\n", out);
            if (!witness_out.empty() && gd.report.sequence)
                write_output(witness_out, encode_witness(sd3_witness(gd.graph, gd.tokens, *gd.report.sequence)),
                             out);
            write_output(output, doc.dump(2) + "\n", out);
            return gd.report.sequence_verdict.accepted ? kOk : kRejected;
        }
        if (*convert) {
            auto graphs = load_graphs(convert_in, format);
            bool to_g6 = to_format == "g6" || (to_format == "auto" && is_graph6_name(convert_out));
            std::string text;
            if (to_g6) {
                for (const auto& g : graphs)
                    text += encode_graph6(g) + "\n";
            } else {
                if (graphs.size() != 1)
                    throw IoError("edge lists hold exactly one graph; input has " + std::to_string(graphs.size()));
                text = encode_edge_list(graphs.front());
            }
            write_output(convert_out, text, out);
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << " (offset " << e.position << ")\n";
        return kInputError;
    } catch (const SchemaViolation& e) {
        err << "schema violation: " << e.what() << "\n";
        return kInputError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kInputError;
    } catch (const VerificationFailed& e) {
        err << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kRejected;
    }
    return kUsage;
}

} // namespace paintkit::cli
