#ifndef ECCI_METRICS_HPP
#define ECCI_METRICS_HPP

#include <cstdint>
#include <vector>

#include "ecci/digraph.hpp"

namespace ecci {

/// Sentinel for "no directed path". Never mixed into arithmetic.
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

/// All-pairs directed distances plus the derived symmetric md matrix.
class DistanceData {
public:
    DistanceData(int n, std::vector<std::uint32_t> dist);

    int order() const { return n_; }

    std::uint32_t dist(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    /// max(dist(u,v), dist(v,u)); kUnreachable if either side is.
    std::uint32_t md(int u, int v) const;

    bool all_finite() const;

private:
    int n_;
    std::vector<std::uint32_t> dist_;  // row-major n*n
};

/// One BFS per source over out-adjacency.
DistanceData all_pairs_distances(const Digraph& d);

struct EccProfile {
    std::vector<std::uint32_t> ecc_out;
    std::vector<std::uint32_t> ecc_in;
    std::vector<std::uint32_t> mecc;  // max(ecc_out, ecc_in) per vertex
    std::uint32_t mrad = 0;
    std::uint32_t mdiam = 0;
    bool self_centered = false;
};

/// Streams per-source BFS; never materializes the full matrix.
/// Throws NotStronglyConnected if any pair is unreachable.
EccProfile ecc_profile(const Digraph& d);

/// Undirected eccentricities of a connected graph; throws NotConnected.
std::vector<std::uint32_t> undirected_eccentricities(const UndirectedGraph& g);

}  // namespace ecci

#endif
