#include <doctest.h>

#include "ecci/families.hpp"
#include "ecci/extremal.hpp"
#include "ecci/metrics.hpp"
#include "oracles.hpp"

using namespace ecci;

TEST_CASE("all-pairs distances on the Example 1 digraph") {
    Digraph d = fixture(FixtureId::fig1);
    DistanceData dd = all_pairs_distances(d);
    CHECK(dd.dist(0, 2) == 1);
    CHECK(dd.dist(2, 0) == 2);
    CHECK(dd.md(0, 2) == 2);
    for (int v = 0; v < 3; ++v) CHECK(dd.dist(v, v) == 0);
    CHECK(dd.all_finite());
}

TEST_CASE("distance basics") {
    DistanceData c4 = all_pairs_distances(gen_directed_cycle(4));
    CHECK(c4.dist(0, 3) == 3);
    CHECK(c4.dist(3, 0) == 1);
    CHECK(c4.md(0, 3) == 3);

    DistanceData path = all_pairs_distances(Digraph(3, {{0, 1}, {1, 2}}));
    CHECK(path.dist(2, 0) == kUnreachable);
    CHECK(!path.all_finite());
}

TEST_CASE("dist[u][v] == 1 iff arc, against the oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Digraph d = random_strong_digraph(6, 0.4, seed);
        DistanceData dd = all_pairs_distances(d);
        auto fw = ecci_test::fw_distances(d);
        for (int u = 0; u < 6; ++u)
            for (int v = 0; v < 6; ++v) {
                CHECK(dd.dist(u, v) == fw[u][v]);
                if (u != v) CHECK((dd.dist(u, v) == 1) == d.has_arc(u, v));
            }
    }
}

TEST_CASE("ecc profile of Example 1") {
    EccProfile p = ecc_profile(fixture(FixtureId::fig1));
    CHECK(p.mecc == std::vector<std::uint32_t>{2, 1, 2});
    CHECK(p.mrad == 1);
    CHECK(p.mdiam == 2);
    CHECK(!p.self_centered);
}

TEST_CASE("ecc profile edge cases") {
    EccProfile k5 = ecc_profile(gen_bidirected_complete(5));
    for (auto e : k5.mecc) CHECK(e == 1);
    CHECK(k5.self_centered);

    EccProfile c4 = ecc_profile(gen_directed_cycle(4));
    for (auto e : c4.mecc) CHECK(e == 3);
    CHECK(c4.mrad == 3);
    CHECK(c4.self_centered);

    EccProfile single = ecc_profile(Digraph(1, {}));
    CHECK(single.mrad == 0);
    CHECK(single.self_centered);

    CHECK_THROWS_AS(ecc_profile(Digraph(3, {{0, 1}, {1, 2}})), NotStronglyConnected);
}

TEST_CASE("md is a metric on strong digraphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Digraph d = random_strong_digraph(7, 0.35, seed + 100);
        DistanceData dd = all_pairs_distances(d);
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v) {
                CHECK(dd.md(u, v) == dd.md(v, u));
                if (u != v) CHECK(dd.md(u, v) >= 1);
                for (int w = 0; w < 7; ++w)
                    CHECK(dd.md(u, w) <= dd.md(u, v) + dd.md(v, w));
            }
    }
}

TEST_CASE("reverse duality of eccentricities") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Digraph d = random_strong_digraph(6, 0.5, seed + 50);
        EccProfile p = ecc_profile(d);
        EccProfile pr = ecc_profile(reverse(d));
        CHECK(p.ecc_out == pr.ecc_in);
        CHECK(p.ecc_in == pr.ecc_out);
        CHECK(p.mecc == pr.mecc);
    }
}

TEST_CASE("biorientation collapses to undirected eccentricity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        UndirectedGraph g = random_connected_graph(8, 0.25, seed);
        EccProfile p = ecc_profile(biorient(g));
        auto ecc = undirected_eccentricities(g);
        CHECK(p.mecc == ecc);
    }
}

TEST_CASE("mecc = 1 exactly at full degree") {
    Digraph t1 = fixture(FixtureId::t1);
    EccProfile p = ecc_profile(t1);
    for (int v = 0; v < 5; ++v) {
        auto [o, i] = t1.degree_pair(v);
        CHECK((p.mecc[v] == 1) == (o == 4 && i == 4));
    }
    EccProfile k4 = ecc_profile(gen_bidirected_complete(4));
    for (auto e : k4.mecc) CHECK(e == 1);
}
