#ifndef ECCI_INDICES_HPP
#define ECCI_INDICES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ecci/digraph.hpp"
#include "ecci/metrics.hpp"

namespace ecci {

// The index is stored as the exact doubled integer 2*xi throughout, so
// half-integer values never touch floating point.

struct VertexContribution {
    int vertex;
    int degree_sum;          // d+ + d-
    std::uint32_t mecc;
    std::uint64_t contribution;  // degree_sum * mecc, summing to xi_doubled
};

struct IndexReport {
    std::uint64_t xi_doubled;
    std::vector<VertexContribution> per_vertex;
    std::uint64_t arc_count;
    std::uint32_t mrad;
    std::uint32_t mdiam;
    std::uint64_t lower_bound;  // a * mrad
    std::uint64_t upper_bound;  // a * mdiam
    bool self_centered;
    bool bounds_hold;
    bool equality_iff_self_centered;
};

/// 2*xi of a strongly connected digraph.
std::uint64_t ecci_digraph_doubled(const Digraph& d);

/// Integer xi of a connected undirected graph (sum of degree * eccentricity).
std::uint64_t ecci_graph(const UndirectedGraph& g);

IndexReport check_bound_theorem(const Digraph& d);
IndexReport index_report_from_profile(const Digraph& d, const EccProfile& p);

struct ComplementSumReport {
    std::uint64_t xi_d_doubled;
    std::uint64_t xi_complement_doubled;
    std::uint64_t sum_doubled;
    std::uint64_t bound_doubled;  // 4n(n-1), i.e. doubled 2n(n-1)
    bool holds;
    bool equality;
};

/// Requires n >= 4 and both d and complement(d) strong.
ComplementSumReport check_complement_sum(const Digraph& d);

struct RegularBoundsReport {
    int r;
    std::uint64_t lower_doubled;  // 2 * 2nr; n(n-1) case for r = n-1
    std::uint64_t upper_doubled;  // 2 * nr(n-r); n(n-1) for r = n-1
    std::uint64_t xi_doubled;
    bool holds;
};

RegularBoundsReport check_regular_bounds(const Digraph& d);

/// "8" for whole values, "7.5" style for half-integers.
std::string xi_display(std::uint64_t xi_doubled);

}  // namespace ecci

#endif
