#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecci/extremal.hpp"
#include "ecci/families.hpp"
#include "ecci/io.hpp"

namespace py = pybind11;
using namespace ecci;

PYBIND11_MODULE(_ecci, m) {
    m.doc() = "eccentric connectivity index of strongly connected digraphs";

    py::register_exception<Error>(m, "EcciError");

    py::class_<UndirectedGraph>(m, "UndirectedGraph")
        .def(py::init<int, const std::vector<Arc>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &UndirectedGraph::order)
        .def_property_readonly("edge_count", &UndirectedGraph::edge_count)
        .def("adj", &UndirectedGraph::adj)
        .def("degree", &UndirectedGraph::degree)
        .def("edges", &UndirectedGraph::edges);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, const std::vector<Arc>&>(), py::arg("n"), py::arg("arcs"))
        .def_property_readonly("n", &Digraph::order)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def("out_neighbors", &Digraph::out)
        .def("in_neighbors", &Digraph::in)
        .def("has_arc", &Digraph::has_arc)
        .def("arcs", &Digraph::arcs)
        .def("degree_pair", &Digraph::degree_pair)
        .def("__eq__", &Digraph::operator==);

    m.def("reverse", &reverse);
    m.def("complement", &complement);
    m.def("biorient", &biorient);
    m.def("is_strongly_connected", &is_strongly_connected);
    m.def("is_symmetric", &is_symmetric);
    m.def("is_connected", &is_connected);
    m.def("regularity", [](const Digraph& d) { return regularity(d); });

    py::class_<EccProfile>(m, "EccProfile")
        .def_readonly("ecc_out", &EccProfile::ecc_out)
        .def_readonly("ecc_in", &EccProfile::ecc_in)
        .def_readonly("mecc", &EccProfile::mecc)
        .def_readonly("mrad", &EccProfile::mrad)
        .def_readonly("mdiam", &EccProfile::mdiam)
        .def_readonly("self_centered", &EccProfile::self_centered);

    m.def("ecc_profile", &ecc_profile);
    m.def("ecci_digraph_doubled", &ecci_digraph_doubled);
    m.def("ecci_graph", &ecci_graph);
    m.def("xi_display", &xi_display);

    m.def("check_bound_theorem",
          [](const Digraph& d) { return to_json(check_bound_theorem(d)).dump(); });
    m.def("check_complement_sum", [](const Digraph& d) {
        auto r = check_complement_sum(d);
        py::dict out;
        out["xi_d_doubled"] = r.xi_d_doubled;
        out["xi_complement_doubled"] = r.xi_complement_doubled;
        out["sum_doubled"] = r.sum_doubled;
        out["bound_doubled"] = r.bound_doubled;
        out["holds"] = r.holds;
        out["equality"] = r.equality;
        return out;
    });
    m.def("check_regular_bounds", [](const Digraph& d) {
        auto r = check_regular_bounds(d);
        py::dict out;
        out["r"] = r.r;
        out["lower_doubled"] = r.lower_doubled;
        out["upper_doubled"] = r.upper_doubled;
        out["xi_doubled"] = r.xi_doubled;
        out["holds"] = r.holds;
        return out;
    });

    m.def("generate_family",
          [](const std::string& family, int n, const std::string& direction,
             const std::vector<int>& connection_set) {
              auto dir = direction == "bwd" ? CloseDirection::backward
                                            : CloseDirection::forward;
              return generate_family(family, n, dir, connection_set);
          },
          py::arg("family"), py::arg("n") = 0, py::arg("direction") = "fwd",
          py::arg("connection_set") = std::vector<int>{});
    m.def("family_names", &family_names);
    m.def("audit_t2", [] {
        auto a = audit_t2();
        py::dict out;
        out["computed_doubled"] = a.computed_doubled;
        out["quoted_doubled"] = a.quoted_doubled;
        out["discrepancy"] = a.discrepancy;
        return out;
    });

    m.def("canonical_form", &canonical_form);
    m.def("encode_digraph", &encode_digraph);
    m.def("decode_digraph", &decode_digraph);

    m.def("enumerate_tournaments",
          [](int n, const std::string& objective, bool allow_large, int threads) {
              return to_json(enumerate_tournaments(
                                 n, objective == "max" ? Objective::max : Objective::min,
                                 allow_large, threads))
                  .dump();
          },
          py::arg("n"), py::arg("objective") = "min", py::arg("allow_large") = false,
          py::arg("threads") = 0);
    m.def("enumerate_strong_digraphs",
          [](int n, const std::string& objective, bool allow_large, int threads) {
              return to_json(enumerate_strong_digraphs(
                                 n, objective == "max" ? Objective::max : Objective::min,
                                 allow_large, threads))
                  .dump();
          },
          py::arg("n"), py::arg("objective") = "min", py::arg("allow_large") = false,
          py::arg("threads") = 0);

    m.def("verify_theorem",
          [](const std::string& id, int n, std::pair<int, int> n_range, int samples,
             std::uint64_t seed, int threads) {
              VerifyOptions o;
              if (n >= 0) o.n = n;
              if (n_range.first >= 0) o.n_range = n_range;
              if (samples >= 0) o.samples = samples;
              o.seed = seed;
              o.threads = threads;
              return to_json(verify_theorem(id, o)).dump();
          },
          py::arg("theorem_id"), py::arg("n") = -1,
          py::arg("n_range") = std::pair<int, int>{-1, -1}, py::arg("samples") = -1,
          py::arg("seed") = 0x5eedULL, py::arg("threads") = 0);
    m.def("theorem_ids", &theorem_ids);

    m.def("random_strong_digraph", &random_strong_digraph, py::arg("n"), py::arg("p"),
          py::arg("seed"), py::arg("max_retries") = 200);
    m.def("random_connected_graph", &random_connected_graph);
    m.def("sparse_strong_digraph", &sparse_strong_digraph);

    m.def("parse_edge_list", &parse_edge_list);
    m.def("serialize_edge_list", &serialize_edge_list);
}
