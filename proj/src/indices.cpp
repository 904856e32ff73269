#include "ecci/indices.hpp"

namespace ecci {

std::uint64_t ecci_digraph_doubled(const Digraph& d) {
    EccProfile p = ecc_profile(d);
    std::uint64_t total = 0;
    for (int v = 0; v < d.order(); ++v) {
        auto [o, i] = d.degree_pair(v);
        total += static_cast<std::uint64_t>(o + i) * p.mecc[v];
    }
    return total;
}

std::uint64_t ecci_graph(const UndirectedGraph& g) {
    auto ecc = undirected_eccentricities(g);
    std::uint64_t total = 0;
    for (int v = 0; v < g.order(); ++v)
        total += static_cast<std::uint64_t>(g.degree(v)) * ecc[v];
    return total;
}

IndexReport index_report_from_profile(const Digraph& d, const EccProfile& p) {
    IndexReport r;
    r.arc_count = static_cast<std::uint64_t>(d.arc_count());
    r.mrad = p.mrad;
    r.mdiam = p.mdiam;
    r.self_centered = p.self_centered;
    r.lower_bound = r.arc_count * p.mrad;
    r.upper_bound = r.arc_count * p.mdiam;
    r.xi_doubled = 0;
    r.per_vertex.reserve(d.order());
    for (int v = 0; v < d.order(); ++v) {
        auto [o, i] = d.degree_pair(v);
        std::uint64_t c = static_cast<std::uint64_t>(o + i) * p.mecc[v];
        r.per_vertex.push_back({v, o + i, p.mecc[v], c});
        r.xi_doubled += c;
    }
    r.bounds_hold = 2 * r.lower_bound <= r.xi_doubled && r.xi_doubled <= 2 * r.upper_bound;
    bool tight = (2 * r.lower_bound == r.xi_doubled) && (r.xi_doubled == 2 * r.upper_bound);
    r.equality_iff_self_centered = (tight == r.self_centered);
    return r;
}

IndexReport check_bound_theorem(const Digraph& d) {
    return index_report_from_profile(d, ecc_profile(d));
}

ComplementSumReport check_complement_sum(const Digraph& d) {
    const int n = d.order();
    if (n < 4)
        throw PreconditionViolated("complement-sum corollary requires n >= 4");
    if (!is_strongly_connected(d))
        throw PreconditionViolated("digraph is not strongly connected");
    Digraph comp = complement(d);
    if (!is_strongly_connected(comp))
        throw PreconditionViolated("complement is not strongly connected");

    ComplementSumReport r;
    r.xi_d_doubled = ecci_digraph_doubled(d);
    r.xi_complement_doubled = ecci_digraph_doubled(comp);
    r.sum_doubled = r.xi_d_doubled + r.xi_complement_doubled;
    r.bound_doubled = 4ull * n * (n - 1);
    r.holds = r.sum_doubled >= r.bound_doubled;
    r.equality = r.sum_doubled == r.bound_doubled;
    return r;
}

RegularBoundsReport check_regular_bounds(const Digraph& d) {
    auto reg = regularity(d);
    if (!reg) throw NotRegular("digraph is not r-regular");
    const std::uint64_t n = static_cast<std::uint64_t>(d.order());
    const std::uint64_t r = static_cast<std::uint64_t>(*reg);

    RegularBoundsReport rep;
    rep.r = *reg;
    rep.xi_doubled = ecci_digraph_doubled(d);
    if (r == n - 1) {
        // Complete digraph: both bounds collapse to n(n-1).
        rep.lower_doubled = rep.upper_doubled = 2 * n * (n - 1);
    } else {
        rep.lower_doubled = 2 * 2 * n * r;
        rep.upper_doubled = 2 * n * r * (n - r);
    }
    rep.holds = rep.lower_doubled <= rep.xi_doubled && rep.xi_doubled <= rep.upper_doubled;
    return rep;
}

std::string xi_display(std::uint64_t xi_doubled) {
    std::string s = std::to_string(xi_doubled / 2);
    if (xi_doubled % 2) s += ".5";
    return s;
}

}  // namespace ecci
