#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "paintkit/canonical.hpp"
#include "paintkit/errors.hpp"
#include "paintkit/formats.hpp"
#include "paintkit/structure.hpp"

#include <set>

using namespace paintkit;
namespace gen = paintkit::generators;

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidGraph);
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges().front() == Edge(0, 3));
    CHECK(g.has_edge(1, 2));
    CHECK(g.edge_index(2, 1) == 1);
    CHECK_THROWS_AS(g.edge_index(0, 1), InvalidGraph);
    CHECK(g.with_edge(0, 1).edge_count() == 3);
    CHECK(g.without_edge(0, 3).edge_count() == 1);
}

TEST_CASE("vertex sets are sorted and deduplicated") {
    VertexSet s{3, 1, 3, 0};
    CHECK(s.members() == std::vector<Vertex>{0, 1, 3});
    CHECK(s.set_union({2}).size() == 4);
    CHECK(s.set_difference({1}).members() == std::vector<Vertex>{0, 3});
    CHECK(s.set_intersection({3, 4}).members() == std::vector<Vertex>{3});
    CHECK(VertexSet::from_mask(0b1010).members() == std::vector<Vertex>{1, 3});
}

TEST_CASE("induced subgraphs") {
    Graph c4 = gen::cycle(4);
    CHECK(induced_subgraph(c4, VertexSet::range(4)).graph == c4);
    Graph k4 = gen::complete(4);
    CHECK(induced_subgraph(k4, {0, 2, 3}).graph == gen::complete(3));

    Rng rng(7);
    Graph p = gen::petersen();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vertex> ids(10);
        std::iota(ids.begin(), ids.end(), 0);
        rng.shuffle(ids.begin(), ids.end());
        ids.resize(6);
        VertexSet keep(ids);
        auto sub = induced_subgraph(p, keep);
        std::set<std::pair<int, int>> expected, got;
        for (const auto& e : p.edges())
            if (keep.contains(e.u) && keep.contains(e.v))
                expected.insert({e.u, e.v});
        for (const auto& e : sub.graph.edges())
            got.insert({sub.to_host[e.u], sub.to_host[e.v]});
        CHECK(got == expected);
    }
}

TEST_CASE("canonical form is a relabelling invariant") {
    Graph p3a(3, {{0, 1}, {1, 2}});
    Graph p3b(3, {{2, 0}, {0, 1}});
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    Graph c4 = gen::cycle(4);
    Graph k3_plus(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(canonical_form(c4) != canonical_form(k3_plus));

    Rng rng(11);
    Graph g = gen::gnp(7, 0.5, rng);
    std::set<std::string> forms;
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 1000; ++i) {
        rng.shuffle(perm.begin(), perm.end());
        forms.insert(canonical_form(oracle::relabel(g, perm)));
    }
    CHECK(forms.size() == 1);
}

TEST_CASE("canonical forms separate the atlas up to 6 vertices") {
    auto lines = oracle::read_lines(PAINTKIT_TEST_DATA "/atlas_upto7.g6");
    std::set<std::string> forms;
    int count = 0;
    for (const auto& line : lines) {
        Graph g = decode_graph6(line);
        if (g.vertex_count() > 6)
            continue;
        ++count;
        forms.insert(canonical_form(g));
    }
    CHECK(count == 209);
    CHECK(forms.size() == 209);
}

TEST_CASE("canonical form agrees with brute-force isomorphism on random pairs") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Graph a = gen::gnp(6, 0.45, rng);
        Graph b = gen::gnp(6, 0.45, rng);
        CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("coloured canonical form respects colours") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(canonical_form_colored(p3, {1, 2, 1}) == canonical_form_colored(p3, {1, 2, 1}));
    CHECK(canonical_form_colored(p3, {1, 2, 3}) == canonical_form_colored(Graph(3, {{2, 1}, {1, 0}}), {3, 2, 1}));
    CHECK(canonical_form_colored(p3, {2, 1, 1}) != canonical_form_colored(p3, {1, 2, 1}));
    CHECK_THROWS_AS(canonical_form(gen::complete(11)), CapExceeded);
}

TEST_CASE("degeneracy ordering") {
    Rng rng(5);
    CHECK(degeneracy_ordering(gen::random_tree(12, rng)).degeneracy == 1);
    CHECK(degeneracy_ordering(gen::complete(5)).degeneracy == 4);
    CHECK(degeneracy_ordering(gen::complete(5)).strict_degeneracy() == 5);
    for (int i = 0; i < 10; ++i) {
        Graph g = gen::gnp(12, 0.5, rng);
        auto d = degeneracy_ordering(g);
        CHECK(d.degeneracy == oracle::degeneracy(g));
        std::vector<int> pos(12);
        for (int k = 0; k < 12; ++k)
            pos[d.order[k]] = k;
        for (Vertex v = 0; v < 12; ++v) {
            int later = 0;
            for (Vertex w : g.neighbors(v))
                later += pos[w] > pos[v];
            CHECK(later <= d.degeneracy);
        }
    }
}

TEST_CASE("k-cores") {
    CHECK(min_degree_core(gen::cycle(5), 2) == VertexSet::range(5));
    Rng rng(9);
    CHECK(min_degree_core(gen::random_tree(9, rng), 2).empty());
    for (int i = 0; i < 20; ++i) {
        Graph g = gen::gnp(14, 0.3, rng);
        std::vector<char> alive(14, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < 14; ++v) {
                if (!alive[v])
                    continue;
                int deg = 0;
                for (Vertex w : g.neighbors(v))
                    deg += alive[w];
                if (deg < 3) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        std::vector<Vertex> expected;
        for (Vertex v = 0; v < 14; ++v)
            if (alive[v])
                expected.push_back(v);
        CHECK(min_degree_core(g, 3) == VertexSet(expected));
    }
}

TEST_CASE("bipartitions") {
    auto sides = bipartition(gen::cycle(6));
    REQUIRE(sides);
    CHECK(sides->first.size() == 3);
    CHECK(sides->second.size() == 3);
    CHECK_FALSE(bipartition(gen::cycle(5)));
    Rng rng(2);
    for (int i = 0; i < 10; ++i)
        CHECK(is_bipartite(gen::bipartite_double_cover(gen::gnp(8, 0.5, rng))));
}

TEST_CASE("proper colourings and chromatic number") {
    CHECK(chromatic_number_exact(gen::complete(4)) == 4);
    CHECK(chromatic_number_exact(gen::cycle(5)) == 3);
    CHECK(chromatic_number_exact(gen::petersen()) == 3);
    CHECK_FALSE(proper_coloring(gen::petersen(), 2));
    auto c = proper_coloring(gen::petersen(), 3);
    REQUIRE(c);
    CHECK(is_proper_coloring(gen::petersen(), *c));
    Rng rng(4);
    for (int i = 0; i < 30; ++i) {
        Graph g = gen::gnp(7, 0.5, rng);
        CHECK(chromatic_number_exact(g) == oracle::chromatic_number(g));
    }
}

namespace {

void check_completion(const Graph& g, int d) {
    auto rc = regular_bipartite_completion(g, d);
    CHECK(is_bipartite(rc.graph));
    for (Vertex v = 0; v < rc.graph.vertex_count(); ++v)
        CHECK(rc.graph.degree(v) == d);
    for (const auto& e : g.edges())
        CHECK(rc.graph.has_edge(rc.embedding[e.u], rc.embedding[e.v]));
}

} // namespace

TEST_CASE("regular bipartite completion") {
    auto c4 = regular_bipartite_completion(gen::cycle(4), 2);
    CHECK(c4.graph == gen::cycle(4));
    check_completion(gen::path(2), 2);
    check_completion(gen::star(3), 3);
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        Graph g = gen::random_bipartite(5, 7, 0.4, rng);
        check_completion(g, std::max(1, g.max_degree()) + i % 3);
    }
    CHECK_THROWS_AS(regular_bipartite_completion(gen::cycle(5), 2), NotBipartite);
    CHECK_THROWS_AS(regular_bipartite_completion(gen::star(3), 2), DegreeExceeds);
}

TEST_CASE("bipartite subgraph of large minimum degree") {
    Graph c6 = gen::cycle(6);
    auto two = proper_coloring(c6, 2);
    REQUIRE(two);
    auto s = ekt_bipartite_subgraph(c6, *two, 2);
    CHECK(is_ekt_witness(c6, s, 2, 2));

    Graph k3 = gen::complete(3);
    auto three = ProperColoring::from_colors({0, 1, 2});
    auto e = ekt_bipartite_subgraph(k3, three, 2);
    CHECK(e.size() == 2);
    CHECK(is_ekt_witness(k3, e, 3, 2));

    Rng rng(12);
    auto planted = gen::planted_colorable(45, 3, 14, 0.8, rng);
    Graph core = induced_subgraph(planted.graph, min_degree_core(planted.graph, 9)).graph;
    if (core.vertex_count() > 0) {
        auto core_sub = induced_subgraph(planted.graph, min_degree_core(planted.graph, 9));
        ProperColoring cc;
        cc.classes = 3;
        for (Vertex v : core_sub.to_host)
            cc.color.push_back(planted.coloring.color[v]);
        auto w = ekt_bipartite_subgraph(core, cc, 9);
        Graph h = induced_subgraph(core, w).graph;
        CHECK(h.min_degree() >= 2);
        CHECK(is_bipartite(h));
    }
}

TEST_CASE("generators") {
    Rng rng(1);
    CHECK(gen::petersen().edge_count() == 15);
    CHECK(gen::wheel(4).edge_count() == 8);
    CHECK(gen::complete_multipartite({2, 2, 1}).edge_count() == 8);
    Graph r = gen::random_regular_bipartite(20, 7, rng);
    for (Vertex v = 0; v < 40; ++v)
        CHECK(r.degree(v) == 7);
    CHECK(is_bipartite(r));
    auto p = gen::planted_colorable(30, 4, 6, 0.7, rng);
    CHECK(is_proper_coloring(p.graph, p.coloring));
    CHECK(p.graph.max_degree() <= 6);
}
