#include "ecci/digraph.hpp"

#include <algorithm>
#include <string>

namespace ecci {

namespace {

std::string arc_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n, const std::vector<Arc>& edges)
    : n_(n), edge_count_(0), adj_(std::max(n, 0)) {
    if (n <= 0) throw EmptyVertexSet("vertex count must be positive");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge " + arc_str(u, v) + " out of range for n=" +
                                   std::to_string(n));
        if (u == v) throw LoopArc("loop edge " + arc_str(u, v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
    }
    for (int v = 0; v < n_; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw DuplicateArc("duplicate edge at vertex " + std::to_string(v));
    }
}

const std::vector<int>& UndirectedGraph::adj(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

std::vector<Arc> UndirectedGraph::edges() const {
    std::vector<Arc> es;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs)
    : n_(n), arc_count_(0), out_(std::max(n, 0)), in_(std::max(n, 0)) {
    if (n <= 0) throw EmptyVertexSet("vertex count must be positive");
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("arc " + arc_str(u, v) + " out of range for n=" +
                                   std::to_string(n));
        if (u == v) throw LoopArc("loop arc " + arc_str(u, v));
        out_[u].push_back(v);
        in_[v].push_back(u);
        ++arc_count_;
    }
    for (int v = 0; v < n_; ++v) {
        auto& o = out_[v];
        std::sort(o.begin(), o.end());
        auto dup = std::adjacent_find(o.begin(), o.end());
        if (dup != o.end())
            throw DuplicateArc("duplicate arc " + arc_str(v, *dup));
        std::sort(in_[v].begin(), in_[v].end());
    }
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& Digraph::out(int v) const {
    check_vertex(v);
    return out_[v];
}

const std::vector<int>& Digraph::in(int v) const {
    check_vertex(v);
    return in_[v];
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> as;
    as.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) as.emplace_back(u, v);
    return as;
}

std::pair<int, int> Digraph::degree_pair(int v) const {
    check_vertex(v);
    return {static_cast<int>(out_[v].size()), static_cast<int>(in_[v].size())};
}

bool Digraph::operator==(const Digraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> flipped;
    flipped.reserve(d.arc_count());
    for (auto [u, v] : d.arcs()) flipped.emplace_back(v, u);
    return Digraph(d.order(), flipped);
}

Digraph complement(const Digraph& d) {
    const int n = d.order();
    std::vector<Arc> missing;
    for (int u = 0; u < n; ++u) {
        const auto& o = d.out(u);
        std::size_t k = 0;
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            if (k < o.size() && o[k] == v) {
                ++k;
            } else {
                missing.emplace_back(u, v);
            }
        }
    }
    return Digraph(n, missing);
}

Digraph biorient(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.edge_count());
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.order(), arcs);
}

namespace {

// Marks everything reachable from 0 following the given adjacency.
int reach_count(int n, auto&& neighbors) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    const int n = d.order();
    if (n == 1) return true;
    auto fwd = [&](int v) -> const std::vector<int>& { return d.out(v); };
    auto bwd = [&](int v) -> const std::vector<int>& { return d.in(v); };
    return reach_count(n, fwd) == n && reach_count(n, bwd) == n;
}

bool is_connected(const UndirectedGraph& g) {
    auto nb = [&](int v) -> const std::vector<int>& { return g.adj(v); };
    return reach_count(g.order(), nb) == g.order();
}

bool is_symmetric(const Digraph& d) {
    for (auto [u, v] : d.arcs())
        if (!d.has_arc(v, u)) return false;
    return true;
}

std::optional<int> regularity(const Digraph& d) {
    const int n = d.order();
    auto [r, rin] = d.degree_pair(0);
    if (r != rin) return std::nullopt;
    for (int v = 1; v < n; ++v) {
        auto [o, i] = d.degree_pair(v);
        if (o != r || i != r) return std::nullopt;
    }
    return r;
}

}  // namespace ecci
