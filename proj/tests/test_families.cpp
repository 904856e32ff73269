#include <doctest.h>

#include "ecci/families.hpp"
#include "ecci/indices.hpp"
#include "ecci/metrics.hpp"

using namespace ecci;

TEST_CASE("bidirected families") {
    Digraph s4 = gen_bidirected_star(4);
    CHECK(s4.has_arc(0, 3));
    CHECK(s4.has_arc(3, 0));
    CHECK(ecci_digraph_doubled(s4) == 2 * 9);

    CHECK(ecci_digraph_doubled(gen_bidirected_path(5)) == 2 * 24);
    CHECK(ecci_digraph_doubled(gen_bidirected_complete(5)) == 2 * 20);
    CHECK_THROWS_AS(gen_bidirected_cycle(2), OrderTooSmall);
    CHECK_THROWS_AS(gen_bidirected_star(1), OrderTooSmall);
}

TEST_CASE("directed cycle") {
    CHECK(ecci_digraph_doubled(gen_directed_cycle(5)) == 2 * 20);
    CHECK(ecci_digraph_doubled(gen_directed_cycle(3)) == 2 * 6);
    EccProfile p = ecc_profile(gen_directed_cycle(4));
    for (auto e : p.mecc) CHECK(e == 3);
    CHECK_THROWS_AS(gen_directed_cycle(2), OrderTooSmall);
}

TEST_CASE("circulant") {
    Digraph t1like = gen_circulant(5, {1, 2});
    CHECK(regularity(t1like) == 2);
    CHECK(ecci_digraph_doubled(t1like) == 2 * 20);
    CHECK(gen_circulant(7, {1, 2, 3}).arc_count() == 21);
    CHECK_THROWS_AS(gen_circulant(4, {2}), NotStronglyConnected);
    CHECK_THROWS_AS(gen_circulant(5, {}), PreconditionViolated);
    CHECK_THROWS_AS(gen_circulant(5, {5}), PreconditionViolated);
}

TEST_CASE("K_n orientation") {
    for (int n = 3; n <= 12; ++n) {
        Digraph d = gen_kn_orientation(n);
        CHECK(d.arc_count() == n * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(d.has_arc(u, v) != d.has_arc(v, u));
        CHECK(is_strongly_connected(d));
        if (n % 2 == 1) CHECK(regularity(d) == (n - 1) / 2);
    }
    CHECK(ecci_digraph_doubled(gen_kn_orientation(5)) == 2 * 20);
    CHECK(ecci_digraph_doubled(gen_kn_orientation(8)) == 2 * 56);
    CHECK(gen_kn_orientation(3) == gen_directed_cycle(3));
}

TEST_CASE("P_n star") {
    Digraph p4 = gen_pn_star(4, CloseDirection::forward);
    CHECK(p4.has_arc(0, 3));
    CHECK(ecci_digraph_doubled(p4) == 2 * 17);
    for (int n = 3; n <= 12; ++n) {
        std::uint64_t base = ecci_digraph_doubled(gen_bidirected_path(n));
        std::uint64_t fwd = ecci_digraph_doubled(gen_pn_star(n, CloseDirection::forward));
        std::uint64_t bwd = ecci_digraph_doubled(gen_pn_star(n, CloseDirection::backward));
        CHECK(fwd - base == 2u * (n - 1));
        CHECK(fwd == bwd);
    }
}

TEST_CASE("P_n plus") {
    Digraph p5 = gen_pn_plus(5);
    CHECK(p5.has_arc(0, 4));
    CHECK(!p5.has_arc(4, 0));
    CHECK(p5.arc_count() == 8 + 6);
    CHECK(ecci_digraph_doubled(p5) == 2 * 44);

    // n = 3 coincides with P_3* forward
    CHECK(gen_pn_plus(3) == gen_pn_star(3, CloseDirection::forward));

    for (int n = 3; n <= 12; ++n) {
        EccProfile plus = ecc_profile(gen_pn_plus(n));
        EccProfile path = ecc_profile(gen_bidirected_path(n));
        CHECK(plus.mecc == path.mecc);
    }
}

TEST_CASE("fixtures") {
    CHECK(ecci_digraph_doubled(fixture(FixtureId::fig1)) == 2 * 8);
    CHECK(ecci_digraph_doubled(fixture(FixtureId::t1)) == 2 * 20);
    Digraph fig3 = fixture(FixtureId::fig3);
    CHECK(fig3 == gen_kn_orientation(8));
    CHECK(fixture_id_from_name("t2") == FixtureId::t2);
    CHECK_THROWS_AS(fixture_id_from_name("nope"), PreconditionViolated);
}

TEST_CASE("t2 audit records the quoted-value disagreement") {
    T2Audit a = audit_t2();
    CHECK(a.quoted_doubled == 48);
    CHECK(a.computed_doubled == ecci_digraph_doubled(fixture(FixtureId::t2)));
    CHECK(a.discrepancy == (a.computed_doubled != 48));
}

TEST_CASE("every generator output is valid and strong") {
    for (int n = 3; n <= 20; ++n) {
        for (const auto& d :
             {gen_directed_cycle(n), gen_bidirected_path(n), gen_bidirected_star(n),
              gen_bidirected_cycle(n), gen_bidirected_complete(n),
              gen_kn_orientation(n), gen_pn_star(n), gen_pn_plus(n)}) {
            CHECK(is_strongly_connected(d));
        }
    }
}

TEST_CASE("family dispatcher") {
    CHECK(generate_family("directed-cycle", 5) == gen_directed_cycle(5));
    CHECK(generate_family("circulant", 5, CloseDirection::forward, {1, 2}) ==
          gen_circulant(5, {1, 2}));
    CHECK(generate_family("fig1", 0) == fixture(FixtureId::fig1));
    CHECK_THROWS_AS(generate_family("nope", 5), PreconditionViolated);
    CHECK(family_names().size() == 13);
}
