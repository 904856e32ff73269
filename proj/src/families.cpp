#include "ecci/families.hpp"

#include <algorithm>

#include "ecci/indices.hpp"

namespace ecci {

namespace {

void require_order(int n, int min_n, const char* what) {
    if (n < min_n)
        throw OrderTooSmall(std::string(what) + " requires n >= " + std::to_string(min_n) +
                            ", got " + std::to_string(n));
}

}  // namespace

UndirectedGraph path_graph(int n) {
    require_order(n, 1, "path");
    std::vector<Arc> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return UndirectedGraph(n, edges);
}

UndirectedGraph cycle_graph(int n) {
    require_order(n, 3, "cycle");
    std::vector<Arc> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return UndirectedGraph(n, edges);
}

UndirectedGraph star_graph(int n) {
    require_order(n, 2, "star");
    std::vector<Arc> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return UndirectedGraph(n, edges);
}

UndirectedGraph complete_graph(int n) {
    require_order(n, 1, "complete graph");
    std::vector<Arc> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

Digraph gen_bidirected_path(int n) { return biorient(path_graph(n)); }
Digraph gen_bidirected_cycle(int n) { return biorient(cycle_graph(n)); }
Digraph gen_bidirected_star(int n) { return biorient(star_graph(n)); }
Digraph gen_bidirected_complete(int n) { return biorient(complete_graph(n)); }

Digraph gen_directed_cycle(int n) {
    require_order(n, 3, "directed cycle");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs);
}

Digraph gen_circulant(int n, const std::vector<int>& connection_set) {
    require_order(n, 2, "circulant");
    if (connection_set.empty())
        throw PreconditionViolated("circulant connection set must be nonempty");
    std::vector<int> set = connection_set;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int s : set)
        if (s < 1 || s >= n)
            throw PreconditionViolated("connection offset " + std::to_string(s) +
                                       " outside 1.." + std::to_string(n - 1));
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int s : set) arcs.emplace_back(i, (i + s) % n);
    Digraph d(n, arcs);
    if (!is_strongly_connected(d))
        throw NotStronglyConnected("circulant with this connection set is not strong");
    return d;
}

Digraph gen_kn_orientation(int n) {
    require_order(n, 3, "K_n orientation");
    if (n % 2 == 1) {
        std::vector<int> set;
        for (int s = 1; s <= (n - 1) / 2; ++s) set.push_back(s);
        return gen_circulant(n, set);
    }
    // Even n: odd construction on 0..n-2, then the extra vertex n-1 with
    // arcs chosen by vertex parity.
    const int m = n - 1;
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i)
        for (int s = 1; s <= (m - 1) / 2; ++s) arcs.emplace_back(i, (i + s) % m);
    for (int v = 0; v < m; ++v) {
        if (v % 2 == 0)
            arcs.emplace_back(n - 1, v);  // 1-based odd label
        else
            arcs.emplace_back(v, n - 1);  // 1-based even label
    }
    return Digraph(n, arcs);
}

Digraph gen_pn_star(int n, CloseDirection dir) {
    require_order(n, 3, "P_n*");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) {
        arcs.emplace_back(i, i + 1);
        arcs.emplace_back(i + 1, i);
    }
    if (dir == CloseDirection::forward)
        arcs.emplace_back(0, n - 1);
    else
        arcs.emplace_back(n - 1, 0);
    return Digraph(n, arcs);
}

Digraph gen_pn_plus(int n) {
    require_order(n, 3, "P_n+");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) {
        arcs.emplace_back(i, i + 1);
        arcs.emplace_back(i + 1, i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) arcs.emplace_back(i, j);
    return Digraph(n, arcs);
}

Digraph fixture(FixtureId id) {
    switch (id) {
        case FixtureId::fig1:
            // Example 1: u1<->u2, u2<->u3, u1->u3.
            return Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}});
        case FixtureId::t1:
            // orientation of K_5: circulant with jumps 1 and 2.
            return Digraph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                              {2, 4}, {3, 4}, {3, 0}, {4, 0}, {4, 1}});
        case FixtureId::t2:
            // second orientation of K_5; its quoted index value disagrees (see audit_t2).
            return Digraph(5, {{0, 1}, {0, 2}, {0, 3}, {4, 0}, {1, 2},
                              {1, 4}, {3, 1}, {2, 3}, {2, 4}, {3, 4}});
        case FixtureId::fig3: {
            // K_7 circulant S={1,2,3} plus an eighth vertex.
            std::vector<Arc> arcs;
            for (int i = 0; i < 7; ++i)
                for (int s = 1; s <= 3; ++s) arcs.emplace_back(i, (i + s) % 7);
            for (int v : {0, 2, 4, 6}) arcs.emplace_back(7, v);
            for (int v : {1, 3, 5}) arcs.emplace_back(v, 7);
            return Digraph(8, arcs);
        }
    }
    throw PreconditionViolated("unknown fixture");
}

FixtureId fixture_id_from_name(const std::string& name) {
    if (name == "fig1") return FixtureId::fig1;
    if (name == "t1") return FixtureId::t1;
    if (name == "t2") return FixtureId::t2;
    if (name == "fig3") return FixtureId::fig3;
    throw PreconditionViolated("unknown fixture '" + name + "'");
}

Digraph generate_family(const std::string& family, int n, CloseDirection dir,
                        const std::vector<int>& connection_set) {
    if (family == "directed-cycle") return gen_directed_cycle(n);
    if (family == "bidirected-path") return gen_bidirected_path(n);
    if (family == "bidirected-star") return gen_bidirected_star(n);
    if (family == "bidirected-cycle") return gen_bidirected_cycle(n);
    if (family == "bidirected-complete") return gen_bidirected_complete(n);
    if (family == "kn-orientation") return gen_kn_orientation(n);
    if (family == "circulant") return gen_circulant(n, connection_set);
    if (family == "pn-star") return gen_pn_star(n, dir);
    if (family == "pn-plus") return gen_pn_plus(n);
    if (family == "fig1" || family == "t1" || family == "t2" || family == "fig3")
        return fixture(fixture_id_from_name(family));
    throw PreconditionViolated("unknown family '" + family + "'");
}

std::vector<std::string> family_names() {
    return {"directed-cycle",      "bidirected-path", "bidirected-star",
            "bidirected-cycle",    "bidirected-complete", "kn-orientation",
            "circulant",           "pn-star",         "pn-plus",
            "fig1",                "t1",              "t2",
            "fig3"};
}

T2Audit audit_t2() {
    T2Audit a;
    a.computed_doubled = ecci_digraph_doubled(fixture(FixtureId::t2));
    a.quoted_doubled = 2 * 24;
    a.discrepancy = a.computed_doubled != a.quoted_doubled;
    return a;
}

}  // namespace ecci
