#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paintkit/cli.hpp"
#include "paintkit/exact.hpp"
#include "paintkit/formats.hpp"
#include "paintkit/structure.hpp"
#include "paintkit/witness.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace paintkit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "paintkit_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int system_status(const std::string& cmd) {
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

} // namespace

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"params"}).code == cli::kUsage);
    CHECK(run({"build-scheme", "g6:Cl", "--bipartite", "--chromatic"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("parse errors carry offsets") {
    auto r = run({"params", "g6:D?{"});
    CHECK(r.code == cli::kOk);
    auto bad = run({"params", "g6:D?\x7f"});
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("offset 2") != std::string::npos);
    CHECK(run({"params", scratch("missing.g6").string()}).code == cli::kInputError);
}

TEST_CASE("cap exceeded") {
    CHECK(run({"knn", "--n", "4"}).code == cli::kCapExceeded);
}

TEST_CASE("verify accepts and rejects") {
    Graph c4 = generators::cycle(4);
    auto seq = is_sd3_degenerate(c4, TokenState(4, 3));
    REQUIRE(seq);
    auto good = scratch("c4_sd3.json");
    write(good, encode_witness(sd3_witness(c4, TokenState(4, 3), *seq)));
    auto ok = run({"verify", "g6:Cl", good.string()});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out == "accepted sd3-sequence\n");

    auto bad = scratch("c4_scheme.json");
    RemovalScheme greedy = greedy_scheme({0, 1, 2, 3});
    write(bad, encode_witness(removal_witness(c4, TokenState(4, 2), greedy, false)));
    auto no = run({"verify", "g6:Cl", bad.string()});
    CHECK(no.code == cli::kRejected);
    CHECK(no.out.rfind("rejected removal-scheme", 0) == 0);

    auto other = run({"verify", "g6:C~", good.string()});
    CHECK(other.code == cli::kRejected);
    CHECK(other.out.find("HashMismatch") != std::string::npos);

    auto garbage = scratch("garbage.json");
    write(garbage, "{\"kind\": 3");
    CHECK(run({"verify", "g6:Cl", garbage.string()}).code == cli::kInputError);
}

TEST_CASE("witnesses verify in a separate process") {
    const std::string exe = PAINTKIT_CLI;
    auto g = scratch("c4.g6");
    write(g, "Cl\n");
    auto seq = scratch("proc_sd3.json");
    auto seq_doc = sd3_witness(generators::cycle(4), TokenState(4, 3),
                               *is_sd3_degenerate(generators::cycle(4), TokenState(4, 3)));
    write(seq, encode_witness(seq_doc));
    CHECK(system_status(exe + " verify " + g.string() + " " + seq.string() + " > /dev/null") == 0);

    auto orient = scratch("orient.json");
    CHECK(system_status(exe + " orient-at " + g.string() + " -o " + orient.string()) == 0);
    CHECK(system_status(exe + " verify " + g.string() + " " + orient.string() + " > /dev/null") == 0);

    auto report = scratch("params.json");
    CHECK(system_status(exe + " params " + g.string() + " -o " + report.string()) == 0);
    CHECK(system_status(exe + " verify " + g.string() + " " + report.string() + " > /dev/null") == 0);

    auto tree = scratch("tree.edges");
    write(tree, "0 1\n1 2\n1 3\n3 4\n4 5\n");
    auto scheme = scratch("tree_scheme.json");
    CHECK(system_status(exe + " build-scheme " + tree.string() + " --chromatic --d 4 -o " + scheme.string()) == 0);
    CHECK(system_status(exe + " verify " + tree.string() + " " + scheme.string() + " > /dev/null") == 0);

    auto gadget = scratch("gadget.json");
    auto gadget_graph = scratch("gadget.g6");
    CHECK(system_status(exe + " gadget g6:A_ 1,2 --witness-out " + gadget.string() + " --graph-out " +
                        gadget_graph.string() + " > /dev/null") == 0);
    CHECK(system_status(exe + " verify " + gadget_graph.string() + " " + gadget.string() + " > /dev/null") == 0);
}

TEST_CASE("identical invocations give identical bytes") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"params", "g6:D?{"}, {"knn", "--n", "2"}, {"orient-at", "g6:C~"},
          {"build-scheme", "g6:Cl", "--save-budget", "0", "--seed", "3"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    auto failed = run({"build-scheme", "g6:Cl", "--save-budget", "0"});
    CHECK(failed.code == cli::kOk);
    CHECK(failed.out.find("PipelineFailed") != std::string::npos);
}

TEST_CASE("audit of small graphs") {
    std::string corpus;
    for (const auto& line : std::vector<std::string>{"?", "@", "A?", "A_", "B?", "BG", "Bo", "Bw", "C?", "Cr", "C~"})
        corpus += line + "\n";
    auto path = scratch("small.g6");
    write(path, corpus);
    auto r = run({"audit", path.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.err.find("11 graphs, 0 violations") != std::string::npos);
    auto out = scratch("audit.json");
    CHECK(run({"audit", path.string(), "-o", out.string()}).code == cli::kOk);
    CHECK(slurp(out) == r.out);
}

TEST_CASE("convert round trip") {
    auto edges = scratch("k4.edges");
    CHECK(run({"convert", "g6:C~", edges.string(), "--to", "edges"}).code == cli::kOk);
    auto back = run({"convert", edges.string(), "-", "--to", "g6"});
    CHECK(back.code == cli::kOk);
    CHECK(back.out == "C~\n");
}
