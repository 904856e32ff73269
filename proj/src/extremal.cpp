#include "ecci/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "ecci/families.hpp"
#include "ecci/indices.hpp"
#include "ecci/metrics.hpp"

namespace ecci {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ECCI_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// ---------------------------------------------------------------------------
// Arc-mask encoding

namespace {

int mask_bits(int n) { return n * (n - 1); }

int hex_width(int n) { return (mask_bits(n) + 3) / 4; }

}  // namespace

std::string encode_arc_mask(int n, const std::vector<std::uint64_t>& words) {
    static const char* digits = "0123456789abcdef";
    const int width = hex_width(n);
    std::string hex(width, '0');
    for (int i = 0; i < width; ++i) {
        int nibble_index = width - 1 - i;  // least significant last
        std::uint64_t word = nibble_index * 4 < 64 * static_cast<int>(words.size())
                                 ? words[nibble_index / 16]
                                 : 0;
        hex[i] = digits[(word >> (4 * (nibble_index % 16))) & 0xf];
    }
    return "n=" + std::to_string(n) + ":" + hex;
}

std::string encode_digraph(const Digraph& d) {
    const int n = d.order();
    std::vector<std::uint64_t> words((mask_bits(n) + 63) / 64, 0);
    for (auto [u, v] : d.arcs()) {
        int bit = ordered_pair_index(n, u, v);
        words[bit / 64] |= 1ull << (bit % 64);
    }
    return encode_arc_mask(n, words);
}

Digraph decode_digraph(const std::string& encoding) {
    auto eq = encoding.find("n=");
    auto colon = encoding.find(':');
    if (eq != 0 || colon == std::string::npos)
        throw PreconditionViolated("bad witness encoding '" + encoding + "'");
    int n = std::stoi(encoding.substr(2, colon - 2));
    if (n <= 0) throw PreconditionViolated("bad order in witness encoding");
    std::string hex = encoding.substr(colon + 1);
    if (static_cast<int>(hex.size()) != hex_width(n))
        throw PreconditionViolated("bad mask width in witness encoding");
    std::vector<std::uint64_t> words((mask_bits(n) + 63) / 64, 0);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        char c = hex[hex.size() - 1 - i];  // nibble i is least significant
        int val;
        if (c >= '0' && c <= '9') val = c - '0';
        else if (c >= 'a' && c <= 'f') val = c - 'a' + 10;
        else throw PreconditionViolated("bad hex digit in witness encoding");
        words[i / 16] |= static_cast<std::uint64_t>(val) << (4 * (i % 16));
    }
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            int bit = ordered_pair_index(n, u, v);
            if (words[bit / 64] >> (bit % 64) & 1) arcs.emplace_back(u, v);
        }
    return Digraph(n, arcs);
}

namespace {

std::uint64_t mask64_from_digraph(const Digraph& d) {
    std::uint64_t m = 0;
    for (auto [u, v] : d.arcs()) m |= 1ull << ordered_pair_index(d.order(), u, v);
    return m;
}

}  // namespace

std::string canonical_form(const Digraph& d) {
    const int n = d.order();
    if (n > 8) throw OrderCapExceeded("canonical_form supports n <= 8");
    const std::uint64_t mask = mask64_from_digraph(d);

    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t m = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if (mask >> ordered_pair_index(n, u, v) & 1)
                    m |= 1ull << ordered_pair_index(n, perm[u], perm[v]);
            }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return encode_arc_mask(n, {best});
}

// ---------------------------------------------------------------------------
// Bitmask eccentricity engine for the exhaustive searches (n <= 8)

namespace {

// Layer-count BFS over an n-bit adjacency row table; nullopt when stuck.
inline std::optional<std::uint32_t> mask_ecc(int n, const std::uint32_t* adj,
                                             int src) {
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::uint32_t visited = 1u << src;
    std::uint32_t frontier = visited;
    std::uint32_t dist = 0;
    while (visited != full) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        next &= ~visited;
        if (!next) return std::nullopt;
        visited |= next;
        frontier = next;
        ++dist;
    }
    return dist;
}

// xi_doubled of the digraph given by out/in row masks; nullopt if not strong.
// Also asserts the bound sandwich a*mrad <= xi <= a*mdiam on every instance.
std::optional<std::uint64_t> xi_doubled_from_masks(int n, const std::uint32_t* outm,
                                                   const std::uint32_t* inm) {
    // Quick reject: a strong digraph (n >= 2) needs out- and in-arcs everywhere.
    for (int v = 0; v < n; ++v)
        if (!outm[v] || !inm[v]) return std::nullopt;

    std::uint64_t xi = 0, arcs = 0;
    std::uint32_t mrad = ~0u, mdiam = 0;
    for (int v = 0; v < n; ++v) {
        auto eo = mask_ecc(n, outm, v);
        if (!eo) return std::nullopt;
        auto ei = mask_ecc(n, inm, v);
        if (!ei) return std::nullopt;
        std::uint32_t mecc = std::max(*eo, *ei);
        int deg = std::popcount(outm[v]) + std::popcount(inm[v]);
        xi += static_cast<std::uint64_t>(deg) * mecc;
        arcs += std::popcount(outm[v]);
        mrad = std::min(mrad, mecc);
        mdiam = std::max(mdiam, mecc);
    }
    assert(2 * arcs * mrad <= xi && xi <= 2 * arcs * mdiam);
    return xi;
}

struct SearchPartial {
    std::uint64_t best = 0;
    std::uint64_t strong_count = 0;
    std::vector<std::uint64_t> attainers;  // labeled masks at best
};

template <typename BuildMasks>
SearchPartial search_range(int n, Objective objective, std::uint64_t lo,
                           std::uint64_t hi, BuildMasks&& build) {
    SearchPartial part;
    part.best = objective == Objective::min ? ~0ull : 0;
    std::array<std::uint32_t, 8> outm{}, inm{};
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        build(mask, outm.data(), inm.data());
        auto xi = xi_doubled_from_masks(n, outm.data(), inm.data());
        if (!xi) continue;
        ++part.strong_count;
        bool better = objective == Objective::min ? *xi < part.best : *xi > part.best;
        if (better) {
            part.best = *xi;
            part.attainers.clear();
        }
        if (*xi == part.best) part.attainers.push_back(mask);
    }
    return part;
}

template <typename BuildMasks>
ExtremalReport run_search(const std::string& search_class, int n,
                          Objective objective, std::uint64_t total, int threads,
                          BuildMasks&& build) {
    const int t = std::min<std::uint64_t>(resolve_threads(threads), total);
    std::vector<SearchPartial> parts(t);
    std::vector<std::thread> workers;
    for (int w = 0; w < t; ++w) {
        std::uint64_t lo = total * w / t, hi = total * (w + 1) / t;
        workers.emplace_back([&, w, lo, hi] {
            parts[w] = search_range(n, objective, lo, hi, build);
        });
    }
    for (auto& th : workers) th.join();

    ExtremalReport rep;
    rep.search_class = search_class;
    rep.n = n;
    rep.objective = objective;
    rep.labeled_count = total;
    rep.strong_count = 0;
    rep.threads = t;
    rep.extremal_value_doubled = objective == Objective::min ? ~0ull : 0;
    for (const auto& p : parts) {
        rep.strong_count += p.strong_count;
        if (p.attainers.empty()) continue;
        bool better = objective == Objective::min
                          ? p.best < rep.extremal_value_doubled
                          : p.best > rep.extremal_value_doubled;
        if (better) rep.extremal_value_doubled = p.best;
    }
    if (rep.strong_count == 0)
        throw PreconditionViolated("no strong instance in search class");

    std::vector<std::uint64_t> attainers;
    for (const auto& p : parts)
        if (p.best == rep.extremal_value_doubled)
            attainers.insert(attainers.end(), p.attainers.begin(), p.attainers.end());
    std::sort(attainers.begin(), attainers.end());
    rep.witness_count_labeled = attainers.size();

    std::set<std::string> canon;
    std::array<std::uint32_t, 8> outm{}, inm{};
    for (std::uint64_t mask : attainers) {
        build(mask, outm.data(), inm.data());
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (outm[u] >> v & 1)) arcs.emplace_back(u, v);
        canon.insert(canonical_form(Digraph(n, arcs)));
    }
    rep.witnesses.assign(canon.begin(), canon.end());
    return rep;
}

}  // namespace

ExtremalReport enumerate_tournaments(int n, Objective objective, bool allow_large,
                                     int threads) {
    if (n < 3) throw OrderTooSmall("tournament enumeration requires n >= 3");
    if (n > 7 && !allow_large)
        throw OrderCapExceeded("tournament enumeration capped at n = 7");
    if (n > 8) throw OrderCapExceeded("tournament enumeration hard cap is n = 8");

    // Unordered pairs (u < v) in row-major order; bit = 1 means low -> high.
    const int bits = n * (n - 1) / 2;
    std::array<std::pair<int, int>, 28> pairs{};
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs[k++] = {u, v};

    auto build = [n, bits, pairs](std::uint64_t mask, std::uint32_t* outm,
                                  std::uint32_t* inm) {
        std::fill(outm, outm + n, 0u);
        std::fill(inm, inm + n, 0u);
        for (int b = 0; b < bits; ++b) {
            auto [u, v] = pairs[b];
            if (mask >> b & 1) {
                outm[u] |= 1u << v;
                inm[v] |= 1u << u;
            } else {
                outm[v] |= 1u << u;
                inm[u] |= 1u << v;
            }
        }
    };
    return run_search("tournaments", n, objective, 1ull << bits, threads, build);
}

ExtremalReport enumerate_strong_digraphs(int n, Objective objective,
                                         bool allow_large, int threads) {
    if (n < 3) throw OrderTooSmall("strong-digraph enumeration requires n >= 3");
    if (n > 5 && !allow_large)
        throw OrderCapExceeded("strong-digraph enumeration capped at n = 5");
    if (n > 6) throw OrderCapExceeded("strong-digraph enumeration hard cap is n = 6");

    const int bits = mask_bits(n);
    std::array<std::pair<int, int>, 30> pairs{};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs[ordered_pair_index(n, u, v)] = {u, v};

    auto build = [n, bits, pairs](std::uint64_t mask, std::uint32_t* outm,
                                  std::uint32_t* inm) {
        std::fill(outm, outm + n, 0u);
        std::fill(inm, inm + n, 0u);
        std::uint64_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            auto [u, v] = pairs[b];
            outm[u] |= 1u << v;
            inm[v] |= 1u << u;
        }
        (void)bits;
    };
    return run_search("strong_digraphs", n, objective, 1ull << bits, threads, build);
}

// ---------------------------------------------------------------------------
// Random instance generators

Digraph random_strong_digraph(int n, double arc_probability, std::uint64_t seed,
                              int max_retries) {
    if (n < 1) throw EmptyVertexSet("vertex count must be positive");
    if (!(arc_probability > 0.0 && arc_probability < 1.0))
        throw PreconditionViolated("arc probability must lie in (0,1)");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_probability);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng)) arcs.emplace_back(u, v);
        Digraph d(n, arcs);
        if (is_strongly_connected(d)) return d;
    }
    throw RetriesExhausted("no strong digraph after " + std::to_string(max_retries) +
                           " samples (n=" + std::to_string(n) +
                           ", p=" + std::to_string(arc_probability) + ")");
}

UndirectedGraph random_connected_graph(int n, double extra_edge_probability,
                                       std::uint64_t seed) {
    if (n < 1) throw EmptyVertexSet("vertex count must be positive");
    std::mt19937_64 rng(seed);
    std::set<Arc> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        int u = pick(rng);
        edges.insert({u, v});
    }
    std::bernoulli_distribution coin(extra_edge_probability);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.insert({u, v});
    return UndirectedGraph(n, {edges.begin(), edges.end()});
}

Digraph sparse_strong_digraph(int n, double avg_out_degree, std::uint64_t seed) {
    if (n < 3) throw OrderTooSmall("backbone generator requires n >= 3");
    std::mt19937_64 rng(seed);
    std::set<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.insert({i, (i + 1) % n});
    const std::size_t target =
        static_cast<std::size_t>(std::max(avg_out_degree * n, double(n)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (arcs.size() < target) {
        int u = pick(rng), v = pick(rng);
        if (u != v) arcs.insert({u, v});
    }
    return Digraph(n, {arcs.begin(), arcs.end()});
}

// ---------------------------------------------------------------------------
// Theorem verification

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    return seed * 1000003ull + k * 2654435761ull + 17;
}

std::string range_str(int lo, int hi) {
    return std::to_string(lo) + ".." + std::to_string(hi);
}

std::pair<int, int> pick_range(const VerifyOptions& o, int def_lo, int def_hi) {
    if (o.n) return {*o.n, *o.n};
    if (o.n_range) return *o.n_range;
    return {def_lo, def_hi};
}

void corpus_random_strong(const VerifyOptions& o, int def_lo, int def_hi,
                          VerificationReport& rep,
                          const std::function<void(const Digraph&, VerificationReport&)>& check) {
    auto [lo, hi] = pick_range(o, def_lo, def_hi);
    for (int k = 0; k < o.samples; ++k) {
        int n = lo + (hi > lo ? k % (hi - lo + 1) : 0);
        Digraph d = random_strong_digraph(n, 0.5, mix_seed(o.seed, k));
        ++rep.instances_checked;
        check(d, rep);
    }
}

// Both D and its complement strong; deterministic in (seed, k).
Digraph sample_complement_strong_pair(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng)) arcs.emplace_back(u, v);
        Digraph d(n, arcs);
        if (is_strongly_connected(d) && is_strongly_connected(complement(d))) return d;
    }
    throw RetriesExhausted("no (D, complement) both-strong pair found");
}

std::uint64_t pn_plus_delta_doubled(int n) {
    return ecci_digraph_doubled(gen_pn_plus(n)) -
           ecci_digraph_doubled(gen_bidirected_path(n));
}

// Second route to xi: assemble from the md matrix rather than the streaming
// eccentricity profile.
std::uint64_t xi_doubled_via_matrix(const Digraph& d) {
    DistanceData dd = all_pairs_distances(d);
    if (!dd.all_finite()) throw NotStronglyConnected("matrix route: unreachable pair");
    std::uint64_t xi = 0;
    for (int u = 0; u < d.order(); ++u) {
        std::uint32_t mecc = 0;
        for (int v = 0; v < d.order(); ++v)
            if (v != u) mecc = std::max(mecc, dd.md(u, v));
        auto [o, i] = d.degree_pair(u);
        xi += static_cast<std::uint64_t>(o + i) * mecc;
    }
    return xi;
}

}  // namespace

std::vector<std::string> theorem_ids() {
    return {"sameecc",        "reverse",         "bounds",
            "self_centered_equality", "complement_sum", "regular_bounds",
            "kn_min",         "kn_construction", "star_min",
            "pn_star_delta",  "pn_plus_delta",   "t2_audit"};
}

VerificationReport verify_theorem(const std::string& id, const VerifyOptions& o) {
    VerificationReport rep;
    rep.theorem_id = id;
    rep.notes.push_back("seed=" + std::to_string(o.seed));

    if (id == "sameecc") {
        auto [lo, hi] = pick_range(o, 2, 12);
        rep.parameter_range = "n=" + range_str(lo, hi) + ", samples=" + std::to_string(o.samples);
        for (int k = 0; k < o.samples; ++k) {
            int n = lo + (hi > lo ? k % (hi - lo + 1) : 0);
            UndirectedGraph g = random_connected_graph(n, 0.3, mix_seed(o.seed, k));
            ++rep.instances_checked;
            if (2 * ecci_graph(g) != ecci_digraph_doubled(biorient(g)))
                rep.failures.push_back(encode_digraph(biorient(g)));
        }
    } else if (id == "reverse") {
        auto [lo, hi] = pick_range(o, 3, 12);
        rep.parameter_range = "n=" + range_str(lo, hi) + ", samples=" + std::to_string(o.samples);
        VerifyOptions oo = o;
        oo.n_range = {lo, hi};
        corpus_random_strong(oo, lo, hi, rep, [](const Digraph& d, VerificationReport& r) {
            if (ecci_digraph_doubled(d) != ecci_digraph_doubled(reverse(d)))
                r.failures.push_back(encode_digraph(d));
        });
    } else if (id == "bounds" || id == "self_centered_equality") {
        auto [lo, hi] = pick_range(o, 3, 12);
        rep.parameter_range = "n=" + range_str(lo, hi) + ", samples=" +
                              std::to_string(o.samples) + ", plus families n=3..30";
        const bool want_equality = (id == "self_centered_equality");
        auto check = [want_equality](const Digraph& d, VerificationReport& r) {
            IndexReport ir = check_bound_theorem(d);
            if (want_equality ? !ir.equality_iff_self_centered : !ir.bounds_hold)
                r.failures.push_back(encode_digraph(d));
        };
        VerifyOptions oo = o;
        oo.n_range = {lo, hi};
        corpus_random_strong(oo, lo, hi, rep, check);
        for (int n = 3; n <= 30; ++n) {
            std::vector<Digraph> fam = {
                gen_directed_cycle(n),    gen_bidirected_path(n),
                gen_bidirected_star(n),   gen_bidirected_cycle(n),
                gen_bidirected_complete(n), gen_kn_orientation(n),
                gen_pn_star(n, CloseDirection::forward),
                gen_pn_star(n, CloseDirection::backward), gen_pn_plus(n),
                gen_circulant(n, {1, std::min(2, n - 1)})};
            for (const auto& d : fam) {
                ++rep.instances_checked;
                check(d, rep);
            }
        }
    } else if (id == "complement_sum") {
        auto [lo, hi] = pick_range(o, 5, 10);
        int samples = o.samples == 500 ? 200 : o.samples;
        rep.parameter_range = "n=" + range_str(lo, hi) + ", pairs=" + std::to_string(samples);
        for (int k = 0; k < samples; ++k) {
            int n = lo + (hi > lo ? k % (hi - lo + 1) : 0);
            Digraph d = sample_complement_strong_pair(n, mix_seed(o.seed, k));
            ++rep.instances_checked;
            ComplementSumReport cs = check_complement_sum(d);
            EccProfile pd = ecc_profile(d);
            EccProfile pc = ecc_profile(complement(d));
            bool both_sc_rad2 = pd.self_centered && pc.self_centered &&
                                pd.mrad == 2 && pc.mrad == 2;
            if (!cs.holds || cs.equality != both_sc_rad2)
                rep.failures.push_back(encode_digraph(d));
        }
    } else if (id == "regular_bounds") {
        rep.parameter_range = "cycles n=3..30, circulants n<=12 (all strong sets)";
        for (int n = 3; n <= 30; ++n) {
            Digraph c = gen_directed_cycle(n);
            ++rep.instances_checked;
            RegularBoundsReport rb = check_regular_bounds(c);
            if (!rb.holds || rb.xi_doubled != rb.upper_doubled)
                rep.failures.push_back(encode_digraph(c));
        }
        for (int n = 2; n <= 12; ++n) {
            for (int set_mask = 1; set_mask < (1 << (n - 1)); ++set_mask) {
                std::vector<int> S;
                for (int s = 1; s < n; ++s)
                    if (set_mask >> (s - 1) & 1) S.push_back(s);
                try {
                    Digraph d = gen_circulant(n, S);
                    ++rep.instances_checked;
                    if (!check_regular_bounds(d).holds)
                        rep.failures.push_back(encode_digraph(d));
                } catch (const NotStronglyConnected&) {
                    // connection set with gcd obstruction; outside the theorem
                }
            }
        }
    } else if (id == "kn_min") {
        auto [lo, hi] = pick_range(o, 3, 6);
        rep.parameter_range = "exhaustive tournaments, n=" + range_str(lo, hi);
        for (int n = lo; n <= hi; ++n) {
            ExtremalReport er = enumerate_tournaments(n, Objective::min, true, o.threads);
            rep.instances_checked += er.strong_count;
            std::uint64_t expect = 2ull * n * (n - 1);
            rep.notes.push_back("n=" + std::to_string(n) + ": min 2xi=" +
                                std::to_string(er.extremal_value_doubled) +
                                " expected " + std::to_string(expect) +
                                " witnesses=" + std::to_string(er.witnesses.size()));
            if (er.extremal_value_doubled < expect)
                rep.failures.push_back("n=" + std::to_string(n) + " below n(n-1): " +
                                       er.witnesses.front());
            if (er.extremal_value_doubled != expect)
                rep.failures.push_back("n=" + std::to_string(n) + " minimum " +
                                       xi_display(er.extremal_value_doubled) +
                                       " != n(n-1)=" + std::to_string(n * (n - 1)) +
                                       "; witness " + er.witnesses.front());
        }
    } else if (id == "kn_construction") {
        auto [lo, hi] = pick_range(o, 3, 12);
        rep.parameter_range = "n=" + range_str(lo, hi);
        for (int n = lo; n <= hi; ++n) {
            Digraph d = gen_kn_orientation(n);
            ++rep.instances_checked;
            std::string tag = "n=" + std::to_string(n);
            bool orientation = d.arc_count() == n * (n - 1) / 2;
            for (int u = 0; orientation && u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (d.has_arc(u, v) == d.has_arc(v, u)) orientation = false;
            if (!orientation) {
                rep.failures.push_back(tag + " not an orientation of K_n");
                continue;
            }
            if (!is_strongly_connected(d)) {
                rep.failures.push_back(tag + " not strong");
                continue;
            }
            EccProfile p = ecc_profile(d);
            if (n >= 4)
                for (int v = 0; v < n; ++v)
                    if (p.mecc[v] != 2) {
                        rep.failures.push_back(tag + " mecc(" + std::to_string(v) +
                                               ")=" + std::to_string(p.mecc[v]) +
                                               " != 2");
                        break;
                    }
            std::uint64_t xi = ecci_digraph_doubled(d);
            if (xi != 2ull * n * (n - 1))
                rep.failures.push_back(tag + " xi=" + xi_display(xi) + " != n(n-1)=" +
                                       std::to_string(n * (n - 1)));
            std::uint64_t cyc = ecci_digraph_doubled(gen_directed_cycle(n));
            ++rep.instances_checked;
            if (cyc != 2ull * n * (n - 1))
                rep.failures.push_back(tag + " directed cycle xi=" + xi_display(cyc));
        }
    } else if (id == "star_min") {
        std::vector<int> orders = o.n ? std::vector<int>{*o.n} : std::vector<int>{4, 5};
        rep.parameter_range = "exhaustive strong digraphs, n in {4,5}";
        if (o.n) rep.parameter_range = "exhaustive strong digraphs, n=" + std::to_string(*o.n);
        for (int n : orders) {
            ExtremalReport er = enumerate_strong_digraphs(n, Objective::min, true, o.threads);
            rep.instances_checked += er.strong_count;
            std::uint64_t expect = 2ull * 3 * (n - 1);
            std::string star_canon = canonical_form(gen_bidirected_star(n));
            rep.notes.push_back("n=" + std::to_string(n) + ": min 2xi=" +
                                std::to_string(er.extremal_value_doubled) +
                                " labeled witnesses=" +
                                std::to_string(er.witness_count_labeled));
            if (er.extremal_value_doubled != expect)
                rep.failures.push_back("n=" + std::to_string(n) + " minimum " +
                                       xi_display(er.extremal_value_doubled) +
                                       " != 3(n-1)");
            else if (er.witnesses.size() != 1 || er.witnesses[0] != star_canon ||
                     er.witness_count_labeled != static_cast<std::uint64_t>(n))
                rep.failures.push_back("n=" + std::to_string(n) +
                                       " minimizers are not exactly the bidirected stars");
        }
    } else if (id == "pn_star_delta") {
        auto [lo, hi] = pick_range(o, 3, 50);
        rep.parameter_range = "n=" + range_str(lo, hi) + ", both directions";
        for (int n = lo; n <= hi; ++n) {
            std::uint64_t base = ecci_digraph_doubled(gen_bidirected_path(n));
            for (auto dir : {CloseDirection::forward, CloseDirection::backward}) {
                ++rep.instances_checked;
                std::uint64_t xi = ecci_digraph_doubled(gen_pn_star(n, dir));
                if (xi - base != 2ull * (n - 1))
                    rep.failures.push_back("n=" + std::to_string(n) + " delta " +
                                           xi_display(xi - base) + " != n-1");
            }
        }
    } else if (id == "pn_plus_delta") {
        auto [lo, hi] = pick_range(o, 3, 12);
        rep.parameter_range = "n=" + range_str(lo, hi) + " (audit)";
        rep.notes.push_back("columns: n, engine 2*delta, formula 2*delta, match");
        for (int n = lo; n <= hi; ++n) {
            ++rep.instances_checked;
            std::uint64_t engine = pn_plus_delta_doubled(n);
            // Cross-check through the md-matrix route before reporting.
            std::uint64_t alt = xi_doubled_via_matrix(gen_pn_plus(n)) -
                                xi_doubled_via_matrix(gen_bidirected_path(n));
            if (engine != alt) {
                rep.failures.push_back("n=" + std::to_string(n) +
                                       " engine routes disagree");
                continue;
            }
            // Closed forms: (n^3-4n^2+6n-3)/4 odd, (3n^3-5n^2-12n+16)/8 even.
            long long nn = n;
            long long formula_doubled =
                n % 2 ? (nn * nn * nn - 4 * nn * nn + 6 * nn - 3) / 2
                      : (3 * nn * nn * nn - 5 * nn * nn - 12 * nn + 16) / 4;
            bool match = static_cast<long long>(engine) == formula_doubled;
            rep.notes.push_back("n=" + std::to_string(n) + " engine=" +
                                xi_display(engine) + " formula=" +
                                xi_display(formula_doubled) +
                                (match ? " match" : " MISMATCH"));
        }
    } else if (id == "t2_audit") {
        rep.parameter_range = "fixture t2 (audit)";
        T2Audit a = audit_t2();
        ++rep.instances_checked;
        // Per-vertex breakdown so the value is re-checkable by hand.
        IndexReport ir = check_bound_theorem(fixture(FixtureId::t2));
        for (const auto& c : ir.per_vertex)
            rep.notes.push_back("vertex " + std::to_string(c.vertex) + ": degree_sum=" +
                                std::to_string(c.degree_sum) + " mecc=" +
                                std::to_string(c.mecc) + " contribution=" +
                                std::to_string(c.contribution));
        rep.notes.push_back("computed xi=" + xi_display(a.computed_doubled) +
                            " quoted xi=" + xi_display(a.quoted_doubled) +
                            (a.discrepancy ? " DISCREPANCY" : " agree"));
        if (ir.xi_doubled != a.computed_doubled)
            rep.failures.push_back("per-vertex breakdown does not sum to computed value");
    } else {
        throw UnknownTheorem("unknown theorem id '" + id + "'");
    }
    return rep;
}

}  // namespace ecci
