#include "ecci/io.hpp"

#include <sstream>

namespace ecci {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

}  // namespace

Digraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    long n = -1, m = -1;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (!parse_two_ints(line, n, m))
            throw ParseError(lineno, "expected header 'n m'");
        header_line = lineno;
        break;
    }
    if (header_line == 0) throw ParseError(lineno + 1, "missing header 'n m'");
    if (n < 1) throw ParseError(header_line, "vertex count must be positive");
    if (m < 0) throw ParseError(header_line, "arc count must be non-negative");

    std::vector<Arc> arcs;
    std::vector<int> arc_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        long u, v;
        if (!parse_two_ints(line, u, v))
            throw ParseError(lineno, "expected arc line 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(lineno, "loop arc (" + std::to_string(u) + "," +
                                                 std::to_string(v) + ") not allowed");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        arc_lines.push_back(lineno);
    }
    if (static_cast<long>(arcs.size()) != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) +
                                     " arcs but found " + std::to_string(arcs.size()));
    try {
        return Digraph(static_cast<int>(n), arcs);
    } catch (const DuplicateArc& e) {
        throw ParseError(arc_lines.empty() ? header_line : arc_lines.back(), e.what());
    }
}

std::string serialize_edge_list(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

nlohmann::json xi_json(std::uint64_t xi_doubled) {
    return {{"doubled", xi_doubled}, {"display", xi_display(xi_doubled)}};
}

nlohmann::json to_json(const EccProfile& p) {
    return {{"ecc_out", p.ecc_out},
            {"ecc_in", p.ecc_in},
            {"mecc", p.mecc},
            {"mrad", p.mrad},
            {"mdiam", p.mdiam},
            {"self_centered", p.self_centered}};
}

nlohmann::json to_json(const IndexReport& r) {
    nlohmann::json per_vertex = nlohmann::json::array();
    for (const auto& c : r.per_vertex)
        per_vertex.push_back({{"vertex", c.vertex},
                              {"degree_sum", c.degree_sum},
                              {"mecc", c.mecc},
                              {"contribution", c.contribution}});
    return {{"xi", xi_json(r.xi_doubled)},
            {"per_vertex", per_vertex},
            {"arc_count", r.arc_count},
            {"mrad", r.mrad},
            {"mdiam", r.mdiam},
            {"lower_bound", r.lower_bound},
            {"upper_bound", r.upper_bound},
            {"self_centered", r.self_centered},
            {"bounds_hold", r.bounds_hold},
            {"equality_iff_self_centered", r.equality_iff_self_centered}};
}

nlohmann::json to_json(const VerificationReport& r) {
    return {{"theorem_id", r.theorem_id},
            {"parameter_range", r.parameter_range},
            {"instances_checked", r.instances_checked},
            {"failures", r.failures},
            {"notes", r.notes},
            {"passed", r.passed()}};
}

nlohmann::json to_json(const ExtremalReport& r) {
    return {{"search_class", r.search_class},
            {"n", r.n},
            {"objective", r.objective == Objective::min ? "min" : "max"},
            {"extremal_value", xi_json(r.extremal_value_doubled)},
            {"witnesses", r.witnesses},
            {"labeled_count", r.labeled_count},
            {"strong_count", r.strong_count},
            {"witness_count_labeled", r.witness_count_labeled},
            {"threads", r.threads}};
}

nlohmann::json wrap_report(const std::string& kind, nlohmann::json payload) {
    return {{"schema_version", kSchemaVersion},
            {"kind", kind},
            {"payload", std::move(payload)}};
}

}  // namespace ecci
