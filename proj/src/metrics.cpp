#include "ecci/metrics.hpp"

#include <algorithm>
#include <cassert>

namespace ecci {

DistanceData::DistanceData(int n, std::vector<std::uint32_t> dist)
    : n_(n), dist_(std::move(dist)) {
    assert(dist_.size() == static_cast<std::size_t>(n_) * n_);
}

std::uint32_t DistanceData::md(int u, int v) const {
    std::uint32_t a = dist(u, v), b = dist(v, u);
    if (a == kUnreachable || b == kUnreachable) return kUnreachable;
    return std::max(a, b);
}

bool DistanceData::all_finite() const {
    return std::find(dist_.begin(), dist_.end(), kUnreachable) == dist_.end();
}

namespace {

// BFS from src into row[0..n-1]; row entries must be pre-filled kUnreachable.
void bfs_row(const Digraph& d, int src, std::uint32_t* row, std::vector<int>& queue) {
    queue.clear();
    queue.push_back(src);
    row[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        std::uint32_t dv = row[v];
        for (int w : d.out(v)) {
            if (row[w] == kUnreachable) {
                row[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

DistanceData all_pairs_distances(const Digraph& d) {
    const int n = d.order();
    std::vector<std::uint32_t> dist(static_cast<std::size_t>(n) * n, kUnreachable);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s)
        bfs_row(d, s, dist.data() + static_cast<std::size_t>(s) * n, queue);
    return DistanceData(n, std::move(dist));
}

EccProfile ecc_profile(const Digraph& d) {
    const int n = d.order();
    EccProfile p;
    p.ecc_out.assign(n, 0);
    p.ecc_in.assign(n, 0);
    p.mecc.assign(n, 0);
    if (n == 1) {
        p.mrad = p.mdiam = 0;
        p.self_centered = true;
        return p;
    }

    std::vector<std::uint32_t> row(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        std::fill(row.begin(), row.end(), kUnreachable);
        bfs_row(d, s, row.data(), queue);
        std::uint32_t emax = 0;
        for (int v = 0; v < n; ++v) {
            if (row[v] == kUnreachable)
                throw NotStronglyConnected("no directed path " + std::to_string(s) +
                                           " -> " + std::to_string(v));
            emax = std::max(emax, row[v]);
            p.ecc_in[v] = std::max(p.ecc_in[v], row[v]);
        }
        p.ecc_out[s] = emax;
    }

    p.mrad = kUnreachable;
    p.mdiam = 0;
    for (int v = 0; v < n; ++v) {
        p.mecc[v] = std::max(p.ecc_out[v], p.ecc_in[v]);
        p.mrad = std::min(p.mrad, p.mecc[v]);
        p.mdiam = std::max(p.mdiam, p.mecc[v]);
    }
    p.self_centered = (p.mrad == p.mdiam);
    return p;
}

std::vector<std::uint32_t> undirected_eccentricities(const UndirectedGraph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> ecc(n, 0);
    std::vector<std::uint32_t> row(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        std::fill(row.begin(), row.end(), kUnreachable);
        queue.clear();
        queue.push_back(s);
        row[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.adj(v)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        std::uint32_t emax = 0;
        for (int v = 0; v < n; ++v) {
            if (row[v] == kUnreachable)
                throw NotConnected("vertex " + std::to_string(v) +
                                   " unreachable from " + std::to_string(s));
            emax = std::max(emax, row[v]);
        }
        ecc[s] = emax;
    }
    return ecc;
}

}  // namespace ecci
