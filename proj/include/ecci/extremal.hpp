#ifndef ECCI_EXTREMAL_HPP
#define ECCI_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecci/digraph.hpp"

namespace ecci {

enum class Objective { min, max };

/// Bit index of ordered pair (u,v), u != v: row-major, diagonal skipped.
inline int ordered_pair_index(int n, int u, int v) {
    return u * (n - 1) + (v < u ? v : v - 1);
}

/// Labeled arc-set encoding "n=<n>:<hex>" (lowercase, fixed width,
/// bit 0 = least significant nibble last).
std::string encode_arc_mask(int n, const std::vector<std::uint64_t>& words);
std::string encode_digraph(const Digraph& d);
Digraph decode_digraph(const std::string& encoding);

/// Lexicographically minimal labeled encoding over all n! relabelings.
/// Equal strings iff isomorphic. n <= 8 only.
std::string canonical_form(const Digraph& d);

struct ExtremalReport {
    std::string search_class;  // "tournaments" or "strong_digraphs"
    int n;
    Objective objective;
    std::uint64_t extremal_value_doubled;
    std::vector<std::string> witnesses;  // canonical, pairwise non-isomorphic
    std::uint64_t labeled_count;
    std::uint64_t strong_count;
    std::uint64_t witness_count_labeled;
    int threads;
};

/// All 2^(n(n-1)/2) labeled orientations of K_n. Default cap n <= 7.
ExtremalReport enumerate_tournaments(int n, Objective objective,
                                     bool allow_large = false, int threads = 0);

/// All 2^(n(n-1)) labeled arc subsets. Default cap n <= 5.
ExtremalReport enumerate_strong_digraphs(int n, Objective objective,
                                         bool allow_large = false, int threads = 0);

struct VerificationReport {
    std::string theorem_id;
    std::string parameter_range;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    std::optional<int> n;
    std::optional<std::pair<int, int>> n_range;
    int samples = 500;
    std::uint64_t seed = 0x5eedULL;
    int threads = 0;
};

std::vector<std::string> theorem_ids();
VerificationReport verify_theorem(const std::string& theorem_id,
                                  const VerifyOptions& opts = {});

/// Rejection-samples ordered pairs with the given probability until the
/// result is strong. Deterministic in (n, p, seed).
Digraph random_strong_digraph(int n, double arc_probability, std::uint64_t seed,
                              int max_retries = 200);

/// Random spanning tree plus extra edges; connected by construction.
UndirectedGraph random_connected_graph(int n, double extra_edge_probability,
                                       std::uint64_t seed);

/// Directed Hamiltonian cycle backbone plus random extra arcs up to the
/// target average out-degree. Strong by construction; used for benchmarks.
Digraph sparse_strong_digraph(int n, double avg_out_degree, std::uint64_t seed);

/// Worker count: explicit > ECCI_THREADS env > hardware concurrency.
int resolve_threads(int requested);

}  // namespace ecci

#endif
