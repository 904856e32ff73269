#ifndef ECCI_FAMILIES_HPP
#define ECCI_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ecci/digraph.hpp"

namespace ecci {

UndirectedGraph path_graph(int n);        // n >= 1
UndirectedGraph cycle_graph(int n);       // n >= 3
UndirectedGraph star_graph(int n);        // n >= 2, center 0
UndirectedGraph complete_graph(int n);    // n >= 1

Digraph gen_bidirected_path(int n);       // n >= 1
Digraph gen_bidirected_cycle(int n);      // n >= 3
Digraph gen_bidirected_star(int n);       // n >= 2, center 0
Digraph gen_bidirected_complete(int n);   // n >= 1

Digraph gen_directed_cycle(int n);        // n >= 3

/// Arcs (i, (i+s) mod n) for s in the connection set; must come out strong.
Digraph gen_circulant(int n, const std::vector<int>& connection_set);

/// Strong orientation of K_n: odd n is the circulant with S = {1..(n-1)/2};
/// even n augments the odd construction with one extra vertex.
Digraph gen_kn_orientation(int n);        // n >= 3

enum class CloseDirection { forward, backward };

/// Bidirected path plus one closing arc between the endpoints.
Digraph gen_pn_star(int n, CloseDirection dir = CloseDirection::forward);  // n >= 3

/// Bidirected path plus all forward skip arcs (i, j) with j >= i + 2.
Digraph gen_pn_plus(int n);               // n >= 3

enum class FixtureId { fig1, t1, t2, fig3 };

/// Figure fixtures, arc sets transcribed verbatim (0-based ids).
Digraph fixture(FixtureId id);
FixtureId fixture_id_from_name(const std::string& name);

/// CLI-facing dispatcher; family names use dashes (e.g. "directed-cycle",
/// "kn-orientation", "pn-star", "fig1"). Throws PreconditionViolated on an
/// unknown family name, OrderTooSmall on out-of-range n.
Digraph generate_family(const std::string& family, int n,
                        CloseDirection dir = CloseDirection::forward,
                        const std::vector<int>& connection_set = {});

std::vector<std::string> family_names();

/// The t2 fixture computes a different index value than the one quoted
/// for it; this records both sides instead of asserting either.
struct T2Audit {
    std::uint64_t computed_doubled;
    std::uint64_t quoted_doubled;  // 2 * 24
    bool discrepancy;
};

T2Audit audit_t2();

}  // namespace ecci

#endif
