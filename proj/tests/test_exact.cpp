#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "paintkit/audit.hpp"
#include "paintkit/exact.hpp"
#include "paintkit/formats.hpp"
#include "paintkit/knn.hpp"
#include "paintkit/structure.hpp"

#include <cmath>

using namespace paintkit;
namespace gen = paintkit::generators;

namespace {

std::vector<Graph> atlas(int max_n) {
    std::vector<Graph> out;
    for (const auto& line : oracle::read_lines(PAINTKIT_TEST_DATA "/atlas_upto7.g6")) {
        Graph g = decode_graph6(line);
        if (g.vertex_count() <= max_n)
            out.push_back(g);
    }
    return out;
}

TokenState random_tokens(int n, int lo, int hi, Rng& rng) {
    TokenState f(n);
    for (auto& x : f)
        x = rng.between(lo, hi);
    return f;
}

} // namespace

TEST_CASE("choosability matches list enumeration") {
    Rng rng(11);
    for (int t = 0; t < 150; ++t) {
        int n = rng.between(1, 4);
        Graph g = gen::gnp(n, 0.6, rng);
        TokenState f = random_tokens(n, 1, 2, rng);
        auto r = is_f_choosable(g, f);
        CHECK(r.choosable == oracle::choosable(g, f, 4));
        if (!r.choosable) {
            REQUIRE(r.bad_lists);
            CHECK_FALSE(list_coloring(g, *r.bad_lists));
            for (int v = 0; v < n; ++v)
                CHECK(static_cast<int>((*r.bad_lists)[v].size()) == f[v]);
        }
    }
}

TEST_CASE("choosability values") {
    CHECK(choosability(gen::complete(1)) == 1);
    CHECK(choosability(gen::cycle(4)) == 2);
    CHECK(choosability(gen::complete_bipartite(3, 3)) == 3);
    auto r = is_f_choosable(gen::complete_bipartite(3, 3), TokenState(6, 2));
    REQUIRE_FALSE(r.choosable);
    REQUIRE(r.bad_lists);
    CHECK_FALSE(list_coloring(gen::complete_bipartite(3, 3), *r.bad_lists));
}

TEST_CASE("paintability matches the full game") {
    Rng rng(12);
    for (int t = 0; t < 150; ++t) {
        int n = rng.between(1, 5);
        Graph g = gen::gnp(n, 0.55, rng);
        TokenState f = random_tokens(n, 1, 3, rng);
        bool p = is_f_paintable(g, f);
        CHECK(p == oracle::paintable(g, f));
        auto s = painting_strategy(g, f);
        CHECK(s.has_value() == p);
        if (s)
            CHECK(verify_painting_strategy(g, *s));
    }
}

TEST_CASE("paintability values") {
    Graph k2 = gen::complete(2);
    CHECK(is_f_paintable(k2, {1, 2}));
    CHECK_FALSE(is_f_paintable(k2, {1, 1}));
    CHECK(paintability(gen::complete(1)) == 1);
    CHECK(paintability(gen::cycle(4)) == 2);
    CHECK(paintability(gen::complete(4)) == 4);
    CHECK(paintability(gen::complete_bipartite(2, 3)) == 2);
    // Theta graph with paths of lengths 2, 2 and 4: 2-choosable, not 2-paintable.
    Graph theta(7, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 6}, {6, 1}});
    CHECK(choosability(theta) == 2);
    CHECK(paintability(theta) == 3);
}

TEST_CASE("painting with one Lister move is list colouring") {
    // A Lister who presents each colour once, in order, plays a fixed list
    // assignment: any list assignment Painter loses against is a bad one.
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        int n = rng.between(1, 4);
        Graph g = gen::gnp(n, 0.6, rng);
        TokenState f = random_tokens(n, 1, 2, rng);
        if (is_f_paintable(g, f))
            CHECK(oracle::choosable(g, f, 4));
    }
}

TEST_CASE("removability matches the full game") {
    Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        int n = rng.between(1, 5);
        Graph g = gen::gnp(n, 0.55, rng);
        TokenState f = random_tokens(n, 1, 4, rng);
        for (bool restricted : {false, true}) {
            auto s = removability(g, f, {restricted, true});
            CHECK(s.has_value() == oracle::removable(g, f, restricted));
            if (s)
                CHECK(verify_removal_scheme(g, f, *s, restricted));
        }
    }
}

TEST_CASE("removability values") {
    CHECK(removability_number(gen::cycle(4), false) == 3);
    CHECK(removability_number(gen::cycle(4), true) == 3);
    CHECK(removability_number(gen::complete(2), false) == 2);
    auto s = removability(gen::complete(2), {2, 1});
    REQUIRE(s);
    CHECK(verify_removal_scheme(gen::complete(2), {2, 1}, *s, false));
    CHECK_FALSE(removability(gen::complete(2), {1, 1}));
}

TEST_CASE("sd3 matches the operation search") {
    Rng rng(15);
    for (int t = 0; t < 200; ++t) {
        int n = rng.between(1, 5);
        Graph g = gen::gnp(n, 0.55, rng);
        TokenState f = random_tokens(n, 1, 4, rng);
        auto s = is_sd3_degenerate(g, f);
        CHECK(s.has_value() == oracle::sd3_degenerate(g, f));
        if (s)
            CHECK(verify_sd3_sequence(g, f, *s));
    }
    CHECK(sd3(gen::complete(3)) == 3);
    CHECK(sd3(gen::cycle(4)) == 3);
    CHECK(sd3(gen::complete(1)) == 1);
}

TEST_CASE("DP colouring and painting on small graphs") {
    for (const Graph& g : atlas(4)) {
        int n = g.vertex_count();
        for (int k = 1; k <= 3; ++k)
            CHECK(is_dp_f_colorable(g, TokenState(n, k)) == oracle::dp_colorable(g, k));
    }
    CHECK(dp_paintability(gen::complete(1)) == 1);
    CHECK(dp_paintability(gen::complete(2)) == 2);
    CHECK(dp_paintability(gen::cycle(4)) == 3);
    for (const Graph& g : atlas(4)) {
        int n = g.vertex_count();
        int dpp = dp_paintability(g);
        int dp = 0;
        while (!is_dp_f_colorable(g, TokenState(n, dp)))
            ++dp;
        CHECK(dp <= dpp);
        CHECK(dpp <= sd3(g));
    }
}

TEST_CASE("parameters grow with added edges") {
    Rng rng(16);
    for (int t = 0; t < 40; ++t) {
        int n = rng.between(2, 6);
        Graph g = gen::gnp(n, 0.4, rng);
        std::vector<Edge> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v))
                    missing.push_back({u, v});
        if (missing.empty())
            continue;
        Edge e = missing[rng.below(missing.size())];
        Graph h = g.with_edge(e.u, e.v);
        CHECK(choosability(g) <= choosability(h));
        CHECK(paintability(g) <= paintability(h));
        CHECK(sd3(g) <= sd3(h));
        CHECK(removability_number(g, false) <= removability_number(h, false));
        CHECK(removability_number(g, true) <= removability_number(h, true));
    }
}

TEST_CASE("chain audit on graphs up to four vertices") {
    auto corpus = atlas(4);
    CHECK(corpus.size() == 19);
    auto res = chain_audit(corpus);
    CHECK(res.violations.empty());
    REQUIRE(res.reports.size() == corpus.size());
    for (const auto& r : res.reports)
        for (const char* name : kParameterNames)
            CHECK(r.at(name).status == ParameterEntry::Status::Computed);

    auto k4 = std::find_if(res.reports.begin(), res.reports.end(),
                           [](const ParameterReport& r) { return r.graph6 == encode_graph6(gen::complete(4)); });
    REQUIRE(k4 != res.reports.end());
    ParameterReport broken = *k4;
    broken.entries["AT"] = ParameterEntry::computed(*broken.at("AT").value - 1);
    auto v = chain_violations(broken);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("AT") != std::string::npos);
}

TEST_CASE("complete bipartite removability study") {
    CHECK(knn_study(1).k == 2);
    CHECK(knn_study(2).k == 3);
    auto s3 = knn_study(3);
    CHECK(s3.k >= std::ceil(knn_lower_bound(3)));
    CHECK(s3.k <= 4);
    CHECK(s3.bound_holds);
    CHECK(s3.harmonic_ok);
    CHECK(s3.trivial_upper == 4);
    CHECK(s3.schemes.size() == static_cast<std::size_t>(s3.trivial_upper - s3.k + 1));
    for (const auto& a : s3.schemes) {
        CHECK(verify_removal_scheme(gen::complete_bipartite(3, 3), TokenState(6, a.tokens), a.scheme, false));
        CHECK(a.sigma_bound == doctest::Approx((a.tokens - 1) * (std::log(a.tokens) + 1)));
    }
    CHECK_THROWS_AS(knn_study(5), CapExceeded);
}
