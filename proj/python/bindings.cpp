#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/generators.hpp"
#include "cyclemod/monotone.hpp"
#include "cyclemod/path_pairs.hpp"
#include "cyclemod/serialize.hpp"
#include "cyclemod/theta_decomp.hpp"

namespace py = pybind11;
using namespace cyclemod;

namespace {

// structured results cross the boundary as JSON text and are decoded in __init__.py
std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_cyclemod, m) {
    m.doc() = "cycle lengths modulo k in cubic graphs";

    static py::exception<Error> error(m, "CyclemodError");
    py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", &parse_graph6)
        .def("graph6", [](const Graph& g) { return emit_graph6(g); })
        .def_property_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("is_cubic", [](const Graph& g) { return is_cubic(g); })
        .def("connectivity", [](const Graph& g) { return connectivity(g); })
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("read_graph_file", &read_graph_file);
    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("prism_graph", &prism_graph);
    m.def("random_cubic_3connected", [](int n, std::uint64_t seed) {
        Rng rng(seed);
        return random_cubic_3connected(n, rng);
    }, py::arg("n"), py::arg("seed"));

    m.def("cycle_length_histogram", [](const Graph& g, std::size_t cap) { return cycle_length_histogram(g, cap); },
          py::arg("g"), py::arg("cap") = kDefaultCycleCap);
    m.def("residue_spectrum", [](const Graph& g, int k, std::size_t cap) { return residue_spectrum(g, k, cap).residues; },
          py::arg("g"), py::arg("k"), py::arg("cap") = kDefaultCycleCap);
    m.def("has_cycle_mod", &has_cycle_mod, py::arg("g"), py::arg("m"), py::arg("k"), py::arg("cap") = kDefaultCycleCap);
    m.def("xy_path_lengths", [](const Graph& g, int x, int y) { return xy_path_lengths(g, x, y).lengths; });

    m.def("erdos_szekeres", [](const std::vector<long long>& seq, int r, int s) {
        auto w = erdos_szekeres(seq, r, s);
        return py::make_tuple(w.indices, w.direction == Direction::Increasing ? "increasing" : "decreasing");
    });

    m.def("nonseparating_induced_cycle",
          [](const Graph& g, int s, int t, int r) { return nonseparating_induced_cycle(g, s, t, r); });
    m.def("_find_pair_diff12", [](const Graph& g, int x, int y) -> std::string {
        auto p = find_pair_diff12(g, x, y);
        return p ? dump(to_json(*p)) : "null";
    });

    m.def("_shortest_theta", [](const Graph& g, int u, int v) { return dump(to_json(shortest_theta(g, u, v))); });
    m.def("_kgood_search", [](const Graph& g, int k) {
        auto r = kgood_search(g, k);
        json j{{"source", r.source}, {"u", r.u}, {"v", r.v}};
        j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
        j["census"] = to_json(r.census);
        j["case_report"] = r.case_report;
        return dump(j);
    });
    m.def("_validate_witness", [](const std::string& text, int k) {
        json w = json::parse(text);
        auto cert = certificate_from_json(w);
        cert.k = k;
        return dump(to_json(validate(cert, witness_host(w, cert))));
    });
    m.def("_realize_witness", [](const std::string& text, int mm, int k) {
        json w = json::parse(text);
        auto cert = certificate_from_json(w);
        cert.k = k;
        return dump(to_json(kgood_realize(witness_host(w, cert), cert, mm, k)));
    });
    m.def("_build_counterexample", [](int mm, int k, int n) { return dump(to_json(build_counterexample(mm, k, n))); });
    m.def("_bounds", [](int k) {
        auto t = bounds(k);
        json j = json::object();
        for (const auto& [name, v] : t.values) j[name] = to_json(v);
        j["chain_checked"] = t.chain_checked;
        j["chain_holds"] = t.chain_holds;
        return dump(j);
    });
}
