// Command-line surface: compute, generate, verify, enumerate, bench.
// Exit codes: 0 ok, 1 parse error, 2 non-strong input, 3 bad family params,
// 4 counterexample found, 5 enumeration cap exceeded.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ecci/extremal.hpp"
#include "ecci/families.hpp"
#include "ecci/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotStrong = 2;
constexpr int kExitBadParams = 3;
constexpr int kExitCounterexample = 4;
constexpr int kExitCap = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ecci::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_compute(const std::string& path, bool json, bool md_matrix) {
    ecci::Digraph d = ecci::parse_edge_list(read_file(path));
    if (!ecci::is_strongly_connected(d)) {
        std::cerr << "error: input digraph is not strongly connected\n";
        return kExitNotStrong;
    }
    ecci::EccProfile p = ecci::ecc_profile(d);
    ecci::IndexReport r = ecci::index_report_from_profile(d, p);

    if (json) {
        nlohmann::json payload = {{"n", d.order()},
                                  {"index", ecci::to_json(r)},
                                  {"profile", ecci::to_json(p)}};
        if (md_matrix) {
            ecci::DistanceData dd = ecci::all_pairs_distances(d);
            auto matrix = nlohmann::json::array();
            for (int u = 0; u < d.order(); ++u) {
                auto row = nlohmann::json::array();
                for (int v = 0; v < d.order(); ++v) row.push_back(dd.md(u, v));
                matrix.push_back(row);
            }
            payload["md_matrix"] = matrix;
        }
        emit_json(ecci::wrap_report("index", payload));
        return kExitOk;
    }

    std::cout << "vertex  d+  d-  degsum  mecc  contribution\n";
    for (const auto& c : r.per_vertex) {
        auto [o, i] = d.degree_pair(c.vertex);
        std::cout << std::setw(6) << c.vertex << std::setw(4) << o << std::setw(4)
                  << i << std::setw(8) << c.degree_sum << std::setw(6) << c.mecc
                  << std::setw(14) << c.contribution << '\n';
    }
    std::cout << "n " << d.order() << "  arcs " << r.arc_count << "  mrad " << r.mrad
              << "  mdiam " << r.mdiam
              << (r.self_centered ? "  self-centered" : "") << '\n';
    std::cout << "xi = " << ecci::xi_display(r.xi_doubled) << "  (2xi = "
              << r.xi_doubled << ", bounds [" << r.lower_bound << ", "
              << r.upper_bound << "])\n";
    if (md_matrix) {
        ecci::DistanceData dd = ecci::all_pairs_distances(d);
        std::cout << "md matrix:\n";
        for (int u = 0; u < d.order(); ++u) {
            for (int v = 0; v < d.order(); ++v) std::cout << std::setw(4) << dd.md(u, v);
            std::cout << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentric connectivity index of strongly connected digraphs"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker cap (default: ECCI_THREADS or hardware)");

    // compute
    auto* compute = app.add_subcommand("compute", "index + eccentricity profile of an edge-list file");
    std::string in_path;
    bool json = false, table = false, md_matrix = false;
    compute->add_option("file", in_path, "edge-list file")->required();
    compute->add_flag("--json", json, "JSON report to stdout");
    compute->add_flag("--table", table, "aligned table output (default)");
    compute->add_flag("--md-matrix", md_matrix, "include the md matrix");

    // generate
    auto* generate = app.add_subcommand("generate", "emit an edge list for a named family");
    std::string family, direction = "fwd", out_path;
    int gen_n = 0;
    std::vector<int> conn_set;
    generate->add_option("family", family, "family name")->required();
    generate->add_option("--n", gen_n, "order (ignored for fixtures)");
    generate->add_option("--direction", direction, "pn-star closing arc: fwd|bwd");
    generate->add_option("--set", conn_set, "circulant connection set")->delimiter(',');
    generate->add_option("-o,--output", out_path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem check");
    std::string theorem, n_range_str;
    int verify_n = -1, samples = -1;
    std::uint64_t seed = 0x5eedULL;
    bool verify_json = false;
    verify->add_option("theorem", theorem, "theorem id")->required();
    verify->add_option("--n", verify_n, "single order");
    verify->add_option("--n-range", n_range_str, "order range A..B");
    verify->add_option("--samples", samples, "sample count for randomized checks");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_flag("--json", verify_json, "JSON report");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive extremal search");
    std::string search_class, stat = "min";
    int enum_n = 0;
    bool allow_large = false, enum_json = false;
    enumerate->add_option("--class", search_class, "tournaments|strong-digraphs")->required();
    enumerate->add_option("--n", enum_n, "order")->required();
    enumerate->add_option("--stat", stat, "min|max");
    enumerate->add_flag("--allow-large", allow_large, "override the order cap");
    enumerate->add_flag("--json", enum_json, "JSON report");

    // bench
    auto* bench = app.add_subcommand("bench", "timing table on a seeded random strong digraph");
    int bench_n = 1000;
    double density = 4.0;
    std::uint64_t bench_seed = 42;
    bench->add_option("--n", bench_n, "order");
    bench->add_option("--density", density, "average out-degree");
    bench->add_option("--seed", bench_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            (void)table;
            return cmd_compute(in_path, json, md_matrix);
        }

        if (*generate) {
            ecci::Digraph d = [&] {
                try {
                    auto dir = direction == "bwd" ? ecci::CloseDirection::backward
                                                  : ecci::CloseDirection::forward;
                    if (direction != "fwd" && direction != "bwd")
                        throw ecci::PreconditionViolated("--direction must be fwd or bwd");
                    return ecci::generate_family(family, gen_n, dir, conn_set);
                } catch (const ecci::Error&) {
                    throw;
                }
            }();
            std::string text = ecci::serialize_edge_list(d);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw ecci::Error("cannot write '" + out_path + "'");
                out << text;
            }
            return kExitOk;
        }

        if (*verify) {
            ecci::VerifyOptions opts;
            opts.seed = seed;
            opts.threads = threads;
            if (samples >= 0) opts.samples = samples;
            if (verify_n >= 0) opts.n = verify_n;
            if (!n_range_str.empty()) {
                auto dots = n_range_str.find("..");
                if (dots == std::string::npos) {
                    std::cerr << "error: --n-range wants A..B\n";
                    return kExitBadParams;
                }
                opts.n_range = {std::stoi(n_range_str.substr(0, dots)),
                                std::stoi(n_range_str.substr(dots + 2))};
            }
            ecci::VerificationReport rep = ecci::verify_theorem(theorem, opts);
            if (verify_json) {
                emit_json(ecci::wrap_report("verify", ecci::to_json(rep)));
            } else {
                std::cout << rep.theorem_id << " [" << rep.parameter_range << "]: "
                          << (rep.passed() ? "pass" : "FAIL") << " ("
                          << rep.instances_checked << " instances)\n";
                for (const auto& n : rep.notes) std::cout << "  " << n << '\n';
                for (const auto& f : rep.failures)
                    std::cout << "  counterexample: " << f << '\n';
            }
            return rep.passed() ? kExitOk : kExitCounterexample;
        }

        if (*enumerate) {
            auto objective = stat == "max" ? ecci::Objective::max : ecci::Objective::min;
            if (stat != "min" && stat != "max") {
                std::cerr << "error: --stat must be min or max\n";
                return kExitBadParams;
            }
            ecci::ExtremalReport rep;
            try {
                if (search_class == "tournaments")
                    rep = ecci::enumerate_tournaments(enum_n, objective, allow_large, threads);
                else if (search_class == "strong-digraphs")
                    rep = ecci::enumerate_strong_digraphs(enum_n, objective, allow_large, threads);
                else {
                    std::cerr << "error: --class must be tournaments or strong-digraphs\n";
                    return kExitBadParams;
                }
            } catch (const ecci::OrderCapExceeded& e) {
                std::cerr << "error: " << e.what() << " (use --allow-large)\n";
                return kExitCap;
            }
            if (enum_json) {
                emit_json(ecci::wrap_report("enumerate", ecci::to_json(rep)));
            } else {
                std::cout << rep.search_class << " n=" << rep.n << " "
                          << (rep.objective == ecci::Objective::min ? "min" : "max")
                          << " xi = " << ecci::xi_display(rep.extremal_value_doubled)
                          << "\nlabeled " << rep.labeled_count << ", strong "
                          << rep.strong_count << ", attaining labeled "
                          << rep.witness_count_labeled << ", classes "
                          << rep.witnesses.size() << "\n";
                for (const auto& w : rep.witnesses) std::cout << "  witness " << w << '\n';
            }
            return kExitOk;
        }

        if (*bench) {
            using clock = std::chrono::steady_clock;
            ecci::Digraph d = ecci::sparse_strong_digraph(bench_n, density, bench_seed);
            auto t0 = clock::now();
            ecci::EccProfile p = ecci::ecc_profile(d);
            auto t1 = clock::now();
            std::uint64_t xi = 0;
            for (int v = 0; v < d.order(); ++v) {
                auto [o, i] = d.degree_pair(v);
                xi += static_cast<std::uint64_t>(o + i) * p.mecc[v];
            }
            auto t2 = clock::now();
            auto ms = [](auto a, auto b) {
                return std::chrono::duration<double, std::milli>(b - a).count();
            };
            std::cout << "n " << d.order() << "  arcs " << d.arc_count() << "  seed "
                      << bench_seed << '\n';
            std::cout << "profile (n BFS)   " << std::fixed << std::setprecision(2)
                      << ms(t0, t1) << " ms\n";
            std::cout << "index assembly    " << ms(t1, t2) << " ms\n";
            std::cout << "xi = " << ecci::xi_display(xi) << "  mrad " << p.mrad
                      << "  mdiam " << p.mdiam << '\n';
            return kExitOk;
        }
    } catch (const ecci::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ecci::NotStronglyConnected& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotStrong;
    } catch (const ecci::UnknownTheorem& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const ecci::OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const ecci::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const ecci::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return *generate ? kExitBadParams : kExitParse;
    }
    return kExitOk;
}
