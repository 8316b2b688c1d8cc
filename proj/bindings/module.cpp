#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glspec/canonical.hpp"
#include "glspec/enumerate.hpp"
#include "glspec/families.hpp"
#include "glspec/graph.hpp"
#include "glspec/graph6.hpp"
#include "glspec/spectra.hpp"
#include "glspec/sturm.hpp"
#include "glspec/verify.hpp"

#include <map>
#include <string>

namespace py = pybind11;
using namespace glspec;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::string cmp_name(Cmp c) {
    switch (c) {
        case Cmp::less: return "less";
        case Cmp::equal: return "equal";
        case Cmp::greater: return "greater";
    }
    return "";
}

IntervalSpec interval_for(const Graph& g, const std::string& text) {
    std::map<std::string, BigRat> vars{{"n", BigRat(g.order())}};
    if (auto gir = girth(g)) vars["g"] = BigRat(*gir);
    return IntervalSpec::parse(text, vars);
}

ThrWhich which_from(const std::string& name) {
    if (name == "mult_n") return ThrWhich::MULT_N;
    if (name == "top_interval") return ThrWhich::TOP_INTERVAL;
    throw std::invalid_argument("which must be 'mult_n' or 'top_interval'");
}

}  // namespace

PYBIND11_MODULE(_glspec, m) {
    m.doc() = "Laplacian spectra of small graphs: exact counts and sweeps";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edge_list)
        .def("degrees", &Graph::degrees)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) +
                   ", size=" + std::to_string(g.size()) + ", graph6='" + emit_graph6(g) + "')";
        });

    m.def("girth", [](const Graph& g) -> std::optional<int> { return girth(g); });
    m.def("is_connected", &is_connected);
    m.def("component_count", &component_count);
    m.def("complement", &complement);
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("g"));
    m.def("canonical_form", &canonical_form, py::arg("g"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));

    m.def("make", [](const std::string& text) { return make(text); }, py::arg("family"));
    m.def("family_names", [] { return family_names(); });

    m.def("charpoly", [](const Graph& g) {
        IntPoly p = charpoly(g);
        py::list out;
        for (const auto& c : p.coeffs()) out.append(big_to_py(c));
        return out;
    });
    m.def("charpoly_text", [](const Graph& g) { return charpoly(g).to_string(); });
    m.def("eigenvalues", &eigenvalues_numeric);
    m.def("mu_k", &mu_k, py::arg("g"), py::arg("k"));
    m.def(
        "mu_k_compare",
        [](const Graph& g, int k, const std::string& c) {
            return cmp_name(mu_k_compare(g, k, BigRat(c)));
        },
        py::arg("g"), py::arg("k"), py::arg("c"));
    m.def(
        "m_interval",
        [](const Graph& g, const std::string& interval) {
            return m_interval(g, interval_for(g, interval));
        },
        py::arg("g"), py::arg("interval"));

    m.def(
        "enumerate_connected",
        [](int n, bool allow_order_10) { return connected_graphs(n, allow_order_10); },
        py::arg("n"), py::arg("allow_order_10") = false);

    m.def(
        "check_girth_bound",
        [](const Graph& g, int k) {
            GirthBoundResult r = check_girth_bound(g, k);
            py::dict d;
            d["n"] = r.n;
            d["girth"] = r.girth_value;
            d["k"] = r.k;
            d["count"] = r.count;
            d["bound"] = r.bound;
            d["holds"] = r.holds;
            d["is_equality"] = r.is_equality;
            return d;
        },
        py::arg("g"), py::arg("k"));

    m.def(
        "classify_girth3",
        [](const Graph& g, const std::string& which) {
            Classification c = classify_girth3(g, which_from(which));
            py::dict d;
            d["m"] = c.m;
            d["label"] = label_name(c.label);
            d["matched"] = c.matched;
            return d;
        },
        py::arg("g"), py::arg("which"));

    m.def("verify_y1_factorization", &verify_y1_factorization, py::arg("n"));
    m.def("y1_report_json", [](int n) { return y1_factorization_report(n).to_json(); },
          py::arg("n"));
    m.def(
        "sweep_gen_json",
        [](int n, int k, int jobs) { return exhaustive_equality_search(n, k, jobs).to_json(); },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 1);
    m.def(
        "sweep_thr_json", [](int n, int jobs) { return exhaustive_thr(n, jobs).to_json(); },
        py::arg("n"), py::arg("jobs") = 1);
    m.def(
        "sweep_y1_json", [](int n, int jobs) { return exploratory_y1_search(n, jobs).to_json(); },
        py::arg("n"), py::arg("jobs") = 1);
    m.def("lemma_suite_json", [](int n_max) { return lemma_suite(n_max).to_json(); },
          py::arg("n_max") = 7);
}
