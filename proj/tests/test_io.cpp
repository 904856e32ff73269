#include <doctest.h>

#include "ecci/extremal.hpp"
#include "ecci/families.hpp"
#include "ecci/io.hpp"

using namespace ecci;

TEST_CASE("edge list parsing") {
    Digraph d = parse_edge_list("3 5\n0 1\n1 0\n1 2\n2 1\n0 2\n");
    CHECK(d == fixture(FixtureId::fig1));

    Digraph single = parse_edge_list("# comment\n1 0\n");
    CHECK(single.order() == 1);
    CHECK(single.arc_count() == 0);

    // comments and blank lines between arcs
    CHECK(parse_edge_list("2 2\n\n# a\n0 1\n1 0\n") ==
          Digraph(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);  // header mismatch
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), ParseError);  // out of range
    try {
        parse_edge_list("2 1\n0 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
}

TEST_CASE("serialization is canonical and round-trips") {
    CHECK(serialize_edge_list(fixture(FixtureId::fig1)) ==
          "3 5\n0 1\n0 2\n1 0\n1 2\n2 1\n");
    CHECK(serialize_edge_list(Digraph(1, {})) == "1 0\n");
    for (auto d : {gen_kn_orientation(7), gen_pn_plus(6),
                   random_strong_digraph(8, 0.4, 3)}) {
        CHECK(parse_edge_list(serialize_edge_list(d)) == d);
    }
}

TEST_CASE("json reports") {
    auto j = wrap_report("index", to_json(check_bound_theorem(fixture(FixtureId::fig1))));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["kind"] == "index");
    CHECK(j["payload"]["xi"]["doubled"] == 16);
    CHECK(j["payload"]["xi"]["display"] == "8");

    auto v = to_json(verify_theorem("t2_audit"));
    CHECK(v["passed"] == true);

    auto e = to_json(enumerate_tournaments(3, Objective::min));
    CHECK(e["extremal_value"]["doubled"] == 12);
    CHECK(e["strong_count"] == 2);

    // deterministic key order (nlohmann::json stores keys sorted)
    CHECK(j.dump() == wrap_report("index", to_json(check_bound_theorem(
                                               fixture(FixtureId::fig1))))
                          .dump());
}

TEST_CASE("xi json display for half-integers") {
    auto j = xi_json(15);
    CHECK(j["display"] == "7.5");
}
