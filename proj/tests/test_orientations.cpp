#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "paintkit/errors.hpp"
#include "paintkit/formats.hpp"
#include "paintkit/orientation.hpp"
#include "paintkit/structure.hpp"

using namespace paintkit;
namespace gen = paintkit::generators;

namespace {

Orientation directed_cycle(int n) {
    Graph c = gen::cycle(n);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        arcs.emplace_back(i, (i + 1) % n);
    return Orientation::from_arcs(c, arcs);
}

Orientation random_orientation(const Graph& g, Rng& rng) {
    Orientation o(g);
    for (const auto& e : g.edges())
        if (rng.bernoulli(0.5))
            o.set_direction(e.v, e.u);
    return o;
}

} // namespace

TEST_CASE("orientation basics") {
    Graph p = gen::path(3);
    Orientation o(p);
    CHECK(o.out_degrees() == std::vector<int>{1, 1, 0});
    o.set_direction(1, 0);
    CHECK(o.out_degrees() == std::vector<int>{0, 2, 0});
    CHECK_THROWS_AS(Orientation::from_arcs(p, {{0, 1}}), InvalidGraph);
    CHECK_THROWS_AS(Orientation::from_arcs(p, {{0, 1}, {1, 0}}), InvalidGraph);
    CHECK_THROWS_AS(o.set_direction(0, 2), InvalidGraph);
}

TEST_CASE("Eulerian split orientation balances in-degrees") {
    auto check = [](const Graph& g) {
        auto in = eulerian_split_orientation(g).in_degrees();
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            CHECK(in[v] >= g.degree(v) / 2);
            CHECK(in[v] <= (g.degree(v) + 1) / 2);
        }
    };
    auto c4 = eulerian_split_orientation(gen::cycle(4));
    CHECK(c4.in_degrees() == std::vector<int>{1, 1, 1, 1});
    CHECK(c4.out_degrees() == std::vector<int>{1, 1, 1, 1});
    check(gen::star(3));
    check(gen::petersen());
    Rng rng(10);
    for (int i = 0; i < 50; ++i)
        check(gen::gnp(15, 0.3, rng));
}

TEST_CASE("directed odd cycles") {
    auto c3 = has_directed_odd_cycle(directed_cycle(3));
    CHECK(c3.found);
    CHECK(c3.cycle.size() == 3);
    CHECK_FALSE(has_directed_odd_cycle(directed_cycle(4)).found);
    CHECK_FALSE(has_directed_odd_cycle(Orientation(gen::complete(5))).found);

    Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        Graph g = gen::gnp(7, 0.4, rng);
        Orientation o = random_orientation(g, rng);
        auto got = has_directed_odd_cycle(o);
        CHECK(got.found == oracle::has_odd_directed_cycle(7, o.arcs()));
        if (got.found) {
            CHECK(got.cycle.size() % 2 == 1);
            std::set<Vertex> distinct(got.cycle.begin(), got.cycle.end());
            CHECK(distinct.size() == got.cycle.size());
            for (std::size_t k = 0; k < got.cycle.size(); ++k) {
                Vertex a = got.cycle[k], b = got.cycle[(k + 1) % got.cycle.size()];
                auto arcs = o.arcs();
                CHECK(std::find(arcs.begin(), arcs.end(), Arc{a, b}) != arcs.end());
            }
        }
    }
}

TEST_CASE("Eulerian subgraph parity") {
    CHECK(eulerian_parity(directed_cycle(3)) == ParityCount{1, 1});
    CHECK(eulerian_parity(directed_cycle(4)) == ParityCount{2, 0});
    CHECK(eulerian_parity(Orientation(gen::complete(2))) == ParityCount{1, 0});
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Graph g = gen::gnp(6, 0.6, rng);
        Orientation o = random_orientation(g, rng);
        auto want = oracle::eulerian_subgraphs(6, o.arcs());
        auto got = eulerian_parity(o);
        CHECK(got.even == static_cast<std::uint64_t>(want.even));
        CHECK(got.odd == static_cast<std::uint64_t>(want.odd));
        CHECK(eulerian_parity_naive(o) == got);
    }
    Graph k8 = gen::complete(8);
    CHECK_THROWS_AS(eulerian_parity_naive(Orientation(k8)), CapExceeded);
}

TEST_CASE("Alon-Tarsi numbers") {
    CHECK(at_number(gen::complete(1)) == 1);
    CHECK(at_number(gen::cycle(4)) == 2);
    CHECK(at_number(gen::complete(3)) == 3);
    CHECK(at_number(gen::complete(4)) == 4);
    CHECK(at_number(gen::complete_bipartite(3, 3)) == 3);
    CHECK(at_number(Graph(0)) == 1);
    auto w = is_f_alon_tarsi(gen::cycle(4), TokenState(4, 2));
    REQUIRE(w);
    CHECK(w->max_out_degree() <= 1);
    auto pc = eulerian_parity(*w);
    CHECK(pc.even != pc.odd);
    CHECK_FALSE(is_f_alon_tarsi(gen::complete(3), TokenState(3, 2)));
}

TEST_CASE("Alon-Tarsi number matches the graph polynomial on the atlas up to 6 vertices") {
    auto lines = oracle::read_lines(PAINTKIT_TEST_DATA "/atlas_upto7.g6");
    int checked = 0;
    for (const auto& line : lines) {
        Graph g = decode_graph6(line);
        if (g.vertex_count() > 6 || g.edge_count() > 11)
            continue;
        CHECK_MESSAGE(at_number(g) == oracle::alon_tarsi_number(g), line);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("bounded orientation limit") {
    CHECK(bounded_orientation_limit(2, 3) == 2);
    CHECK(bounded_orientation_limit(8, 3) == 8);
    CHECK(bounded_orientation_limit(12, 2) == 11);
}

TEST_CASE("bounded odd-cycle-free orientations") {
    Graph k3 = gen::complete(3);
    auto r = odd_cycle_free_bounded_orientation(k3, 2, ProperColoring::from_colors({0, 1, 2}));
    CHECK(r.orientation.max_out_degree() <= 2);
    CHECK_FALSE(has_directed_odd_cycle(r.orientation).found);

    Rng rng(41);
    Graph bip = gen::random_bipartite(8, 8, 0.5, rng);
    auto two = proper_coloring(bip, 2);
    REQUIRE(two);
    auto b = odd_cycle_free_bounded_orientation(bip, bip.max_degree(), *two);
    CHECK(b.orientation.max_out_degree() <= bounded_orientation_limit(bip.max_degree(), 2));

    for (int i = 0; i < 30; ++i) {
        auto p = gen::planted_colorable(20, 3, 8, 0.9, rng);
        auto o = odd_cycle_free_bounded_orientation(p.graph, 8, p.coloring);
        CHECK(o.orientation.max_out_degree() <= 8);
        CHECK_FALSE(oracle::has_odd_directed_cycle(20, o.orientation.arcs()));
        if (p.graph.edge_count() <= 20) {
            auto pc = oracle::eulerian_subgraphs(20, o.orientation.arcs());
            CHECK(pc.odd == 0);
            CHECK(pc.even >= 1);
        }
    }
    CHECK_THROWS_AS(odd_cycle_free_bounded_orientation(gen::complete(4), 2, ProperColoring::from_colors({0, 1, 2, 3})),
                    DegreeExceeds);
}
