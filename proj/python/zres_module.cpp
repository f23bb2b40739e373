// Python bindings for the main operations. Structured values cross the
// boundary as plain dicts/lists mirroring the JSON formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zres/dot_export.hpp"
#include "zres/json_io.hpp"
#include "zres/verifier.hpp"

namespace py = pybind11;
using namespace zres;

namespace {

py::object json_to_py(const ojson& j) {
    switch (j.type()) {
        case ojson::value_t::null: return py::none();
        case ojson::value_t::boolean: return py::bool_(j.get<bool>());
        case ojson::value_t::number_integer: return py::int_(j.get<long long>());
        case ojson::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case ojson::value_t::number_float: return py::float_(j.get<double>());
        case ojson::value_t::string: return py::str(j.get<std::string>());
        case ojson::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(json_to_py(x));
            return out;
        }
        case ojson::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

ojson py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        ojson out = ojson::array();
        for (const auto& x : obj) out.push_back(py_to_json(x));
        return out;
    }
    if (py::isinstance<py::dict>(obj)) {
        ojson out = ojson::object();
        for (const auto& [k, v] : obj.cast<py::dict>())
            out[k.cast<std::string>()] = py_to_json(v);
        return out;
    }
    throw py::type_error("unsupported value in graph data");
}

CurveGraph graph_from_py(const py::dict& d) { return curve_graph_from_json(py_to_json(d)); }

OrderedCurveGraph ordered_from_py(const py::dict& d, const py::object& order) {
    const auto g = normalize_parity(graph_from_py(d));
    if (order.is_none()) return order_vertices(g);
    return order_with_override(g, order.cast<std::vector<std::string>>());
}

ojson chain_py(const ChainDescriptor& c) {
    ojson j;
    ojson comps = ojson::array();
    for (const auto& comp : c.components)
        comps.push_back(ojson::array({comp.self_int, comp.fiber_mult}));
    j["components"] = std::move(comps);
    j["blow_ups"] = c.blow_ups;
    if (c.s_kind == StrictMeets::C1) j["s_meets"] = "C1";
    else if (c.s_kind == StrictMeets::None) j["s_meets"] = "none";
    else j["s_meets"] = c.s_index;
    return j;
}

} // namespace

PYBIND11_MODULE(zres, m) {
    m.doc() = "embedded resolution of f(x,y) + z^2 from the resolution graph of f";

    m.def("validate", [](const py::dict& g) {
        py::list out;
        for (const auto& v : validate(graph_from_py(g))) {
            py::dict d;
            d["rule"] = v.rule;
            d["detail"] = v.detail;
            d["ids"] = v.ids;
            out.append(d);
        }
        return out;
    }, py::arg("graph"), "List of invariant violations; empty means valid.");

    m.def("normalize_parity", [](const py::dict& g) {
        return json_to_py(curve_graph_to_json(normalize_parity(graph_from_py(g))));
    }, py::arg("graph"));

    m.def("order_vertices", [](const py::dict& g) {
        return order_vertices(normalize_parity(graph_from_py(g))).order;
    }, py::arg("graph"), "Canonical vertex order: even multiplicities first.");

    m.def("brieskorn_graph", [](long long p, long long q) {
        return json_to_py(curve_graph_to_json(brieskorn_graph(p, q)));
    }, py::arg("p"), py::arg("q"));

    m.def("random_refinement", [](const py::dict& g, unsigned long long seed, int steps) {
        return json_to_py(curve_graph_to_json(
            random_refinement(normalize_parity(graph_from_py(g)), seed, steps)));
    }, py::arg("graph"), py::arg("seed"), py::arg("steps"));

    m.def("blow_up_count", &blow_up_count, py::arg("m"));
    m.def("fiber_chain", [](long long mm) { return json_to_py(chain_py(fiber_chain(mm))); },
          py::arg("m"));
    m.def("local_blowup_oracle",
          [](long long mm) { return json_to_py(chain_py(local_blowup_oracle(mm))); },
          py::arg("m"));
    m.def("c1m_self_int", &c1m_self_int, py::arg("e"), py::arg("ms"));
    m.def("picard_rank", &picard_rank, py::arg("ms"));

    m.def("build_complex", [](const py::dict& g, const py::object& order) {
        return json_to_py(complex_to_json(build_complex(ordered_from_py(g, order))));
    }, py::arg("graph"), py::arg("order") = py::none());

    m.def("surface_graph", [](const py::dict& g, bool minimal, const py::object& order) {
        auto sg = surface_dual_graph(build_complex(ordered_from_py(g, order)));
        if (minimal) sg = blow_down_minimal(sg).graph;
        return json_to_py(sgraph_to_json(sg));
    }, py::arg("graph"), py::arg("minimal") = false, py::arg("order") = py::none());

    m.def("run_checks", [](const py::dict& g) {
        return json_to_py(report_to_json(run_all(graph_from_py(g))));
    }, py::arg("graph"), "Full pipeline plus every consistency check.");

    m.def("render_dot", [](const py::dict& g, const std::string& what) {
        const auto ordered = ordered_from_py(g, py::none());
        if (what == "curve_graph") return curve_graph_to_dot(ordered.graph);
        const auto cx = build_complex(ordered);
        if (what == "complex") return complex_to_dot(cx);
        if (what == "surface_graph") return sgraph_to_dot(surface_dual_graph(cx));
        throw std::invalid_argument("what must be curve_graph, complex or surface_graph");
    }, py::arg("graph"), py::arg("what") = "complex");
}
