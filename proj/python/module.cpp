// pybind11 bindings for the main operations. Structured results cross the
// boundary as JSON strings; the python package re-parses them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "ctxgraph/json_io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

ctx::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return ctx::Graph::from_edges(n, edges);
}

}  // namespace

PYBIND11_MODULE(_ctxgraph, m) {
    m.doc() = "contextuality toolkit for compatibility graphs";

    py::class_<ctx::Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_static("cycle", &ctx::Graph::cycle)
        .def_static("complete", &ctx::Graph::complete)
        .def("size", &ctx::Graph::size)
        .def("adjacent", &ctx::Graph::adjacent)
        .def("edges", &ctx::Graph::edges)
        .def("maximal_cliques", &ctx::Graph::maximal_cliques)
        .def("__repr__", [](const ctx::Graph& g) {
            return "Graph(n=" + std::to_string(g.size()) + ", edges=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("is_chordal_json", [](const ctx::Graph& g) {
        return ctx::io::certificate_to_json(ctx::is_chordal(g)).dump();
    });
    m.def("find_induced_cycle_ge4", [](const ctx::Graph& g) -> py::object {
        auto cycle = ctx::find_induced_cycle_ge4(g);
        if (!cycle) return py::none();
        return py::cast(*cycle);
    });
    m.def("classify_json", [](const ctx::Graph& g) {
        return ctx::io::scenario_class_to_json(ctx::classify(g)).dump();
    });
    m.def("canonical_form", [](const ctx::Graph& g) {
        auto c = ctx::canonical_form(g);
        return py::make_tuple(c.n, c.bits);
    });
    m.def(
        "enumerate_scenarios_json",
        [](int n_max, const std::string& mode) {
            auto records = ctx::enumerate_scenarios(
                n_max, mode == "any" ? ctx::FilterMode::AnyCycle : ctx::FilterMode::InducedCycle);
            json arr = json::array();
            for (const auto& rec : records) arr.push_back(ctx::io::record_to_json(rec));
            return arr.dump();
        },
        py::arg("n_max"), py::arg("mode") = "induced");

    m.def("check_consistency_json", [](const std::string& marginals, double tol) {
        auto m2 = ctx::io::marginals_from_json(json::parse(marginals));
        auto report = ctx::check_consistency(m2, tol);
        return json{{"ok", report.ok}, {"what", report.what}, {"deviation", report.deviation}}
            .dump();
    });
    m.def("vorobyev_extend_json", [](const std::string& marginals, double tol) {
        auto m2 = ctx::io::marginals_from_json(json::parse(marginals));
        return ctx::io::joint_to_json(m2.outcomes, ctx::vorobyev_extend(m2, tol)).dump();
    });
    m.def("membership_json", [](const std::string& behavior, double tol) {
        auto b = ctx::io::marginals_from_json(json::parse(behavior));
        return ctx::io::membership_to_json(ctx::membership(b, tol), b).dump();
    });
    m.def("realize_nonchordal_json", [](const ctx::Graph& g, uint64_t seed) {
        return ctx::io::realization_to_json(ctx::realize_nonchordal(g, seed)).dump();
    });
    m.def(
        "seesaw_cycle_max",
        [](int n, int dim, int restarts, int iterations, uint64_t seed) {
            ctx::SeesawOptions opts;
            opts.dim = dim;
            opts.restarts = restarts;
            opts.iterations = iterations;
            opts.seed = seed;
            return ctx::seesaw_max(ctx::cycle_witness(n), ctx::Graph::cycle(n), opts).value;
        },
        py::arg("n"), py::arg("dim"), py::arg("restarts") = 10, py::arg("iterations") = 200,
        py::arg("seed") = 1);

    py::register_exception<ctx::NoContextualityPossible>(m, "NoContextualityPossible");
    py::register_exception<ctx::NotChordalError>(m, "NotChordalError");
    py::register_exception<ctx::InconsistentMarginalsError>(m, "InconsistentMarginalsError");
    py::register_exception<ctx::InconsistentBehaviorError>(m, "InconsistentBehaviorError");
}
