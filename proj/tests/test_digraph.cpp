#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecci/digraph.hpp"
#include "ecci/extremal.hpp"
#include "ecci/families.hpp"

using namespace ecci;

namespace {
Digraph fig1() { return fixture(FixtureId::fig1); }
}

TEST_CASE("digraph construction and invariants") {
    Digraph d = fig1();
    CHECK(d.order() == 3);
    CHECK(d.arc_count() == 5);
    CHECK(d.out(0) == std::vector<int>{1, 2});
    CHECK(d.in(0) == std::vector<int>{1});

    // consistency: u in out(v) <=> v in in(u); degree sums match arc count
    int out_sum = 0, in_sum = 0;
    for (int v = 0; v < d.order(); ++v) {
        auto [o, i] = d.degree_pair(v);
        out_sum += o;
        in_sum += i;
        for (int w : d.out(v))
            CHECK(std::find(d.in(w).begin(), d.in(w).end(), v) != d.in(w).end());
    }
    CHECK(out_sum == d.arc_count());
    CHECK(in_sum == d.arc_count());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), LoopArc);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), DuplicateArc);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), VertexOutOfRange);
    CHECK_THROWS_AS(Digraph(0, {}), EmptyVertexSet);
    CHECK(Digraph(1, {}).arc_count() == 0);
}

TEST_CASE("reverse") {
    Digraph d = fig1();
    Digraph r = reverse(d);
    CHECK(r.has_arc(2, 0));
    CHECK(!r.has_arc(0, 2));
    CHECK(reverse(r) == d);

    Digraph c3 = gen_directed_cycle(3);
    CHECK(reverse(c3).has_arc(0, 2));

    Digraph sym = gen_bidirected_path(4);
    CHECK(reverse(sym) == sym);
}

TEST_CASE("complement") {
    CHECK(complement(gen_bidirected_complete(4)).arc_count() == 0);
    Digraph c3 = gen_directed_cycle(3);
    CHECK(complement(c3) == reverse(c3));
    Digraph comp = complement(fig1());
    CHECK(comp.arcs() == std::vector<Arc>{{2, 0}});
    // involution, and arc counts partition the n(n-1) ordered pairs
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Digraph d = random_strong_digraph(5, 0.5, seed);
        CHECK(complement(complement(d)) == d);
        CHECK(d.arc_count() + complement(d).arc_count() == 5 * 4);
    }
}

TEST_CASE("biorient") {
    Digraph p3 = biorient(path_graph(3));
    CHECK(p3.arc_count() == 4);
    CHECK(p3.has_arc(0, 1));
    CHECK(p3.has_arc(1, 0));
    CHECK(is_symmetric(p3));

    Digraph s4 = gen_bidirected_star(4);
    CHECK(s4.arc_count() == 6);
    for (int v = 0; v < 4; ++v) {
        auto [o, i] = s4.degree_pair(v);
        CHECK(o == i);
    }
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(fig1()));
    CHECK(is_strongly_connected(Digraph(1, {})));
    CHECK(!is_strongly_connected(Digraph(3, {{0, 1}, {1, 2}})));
    CHECK(is_strongly_connected(biorient(random_connected_graph(8, 0.2, 7))));
    // invariant under reverse
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<Arc> arcs;
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v)
                if (u != v && rng() % 2) arcs.emplace_back(u, v);
        Digraph d(5, arcs);
        CHECK(is_strongly_connected(d) == is_strongly_connected(reverse(d)));
    }
}

TEST_CASE("degree pairs and regularity") {
    Digraph d = fig1();
    CHECK(d.degree_pair(0) == std::pair<int, int>{2, 1});
    CHECK_THROWS_AS(d.degree_pair(3), VertexOutOfRange);

    CHECK(regularity(gen_directed_cycle(6)) == 1);
    CHECK(!regularity(gen_bidirected_star(4)).has_value());
    CHECK(regularity(gen_bidirected_complete(5)) == 4);

    // reverse swaps degree pairs vertexwise
    Digraph r = reverse(d);
    for (int v = 0; v < 3; ++v) {
        auto [o, i] = d.degree_pair(v);
        CHECK(r.degree_pair(v) == std::pair<int, int>{i, o});
    }
}
