#ifndef ECCI_DIGRAPH_HPP
#define ECCI_DIGRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ecci/errors.hpp"

namespace ecci {

using Arc = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, symmetric sorted adjacency.
class UndirectedGraph {
public:
    UndirectedGraph(int n, const std::vector<Arc>& edges);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& adj(int v) const;
    int degree(int v) const { return static_cast<int>(adj(v).size()); }
    std::vector<Arc> edges() const;  // u < v, sorted

private:
    int n_;
    int edge_count_;
    std::vector<std::vector<int>> adj_;
};

/// Immutable digraph: no loops, no parallel arcs, sorted out/in adjacency.
/// Vertices are ids 0..n-1.
class Digraph {
public:
    Digraph(int n, const std::vector<Arc>& arcs);

    int order() const { return n_; }
    int arc_count() const { return arc_count_; }
    const std::vector<int>& out(int v) const;
    const std::vector<int>& in(int v) const;
    bool has_arc(int u, int v) const;
    std::vector<Arc> arcs() const;  // sorted by (u, v)

    /// (out-degree, in-degree) of v.
    std::pair<int, int> degree_pair(int v) const;

    bool operator==(const Digraph& other) const;

private:
    void check_vertex(int v) const;

    int n_;
    int arc_count_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

Digraph reverse(const Digraph& d);
Digraph complement(const Digraph& d);
Digraph biorient(const UndirectedGraph& g);

bool is_strongly_connected(const Digraph& d);
bool is_symmetric(const Digraph& d);
bool is_connected(const UndirectedGraph& g);

/// r when every vertex has out-degree = in-degree = r, absent otherwise.
std::optional<int> regularity(const Digraph& d);

}  // namespace ecci

#endif
