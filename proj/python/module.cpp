#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "irgraphs/constructions.hpp"
#include "irgraphs/families.hpp"
#include "irgraphs/graph6.hpp"
#include "irgraphs/harness.hpp"
#include "irgraphs/io.hpp"
#include "irgraphs/irredundance.hpp"
#include "irgraphs/isomorphism.hpp"
#include "irgraphs/reconfig.hpp"

namespace py = pybind11;
using namespace irgraphs;

namespace {

VertexSet set_from_list(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
}

std::vector<std::vector<int>> sets_to_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const VertexSet& s : sets) out.push_back(s.to_vector());
    return out;
}

py::dict report_dict(const IrredundanceReport& r) {
    py::dict d;
    d["ir"] = r.ir;
    d["ir_witness"] = r.ir_witness.to_vector();
    d["IR"] = r.IR;
    py::list sets;
    for (std::size_t i = 0; i < r.ir_sets.size(); ++i) {
        py::dict s;
        s["vertices"] = r.ir_sets[i].to_vector();
        s["independent"] = r.info[i].independent;
        s["positive_degree_count"] = r.info[i].positive_degree_count;
        py::dict epn;
        for (const auto& [v, e] : r.info[i].epn)
            epn[py::int_(v)] = e.to_vector();
        s["epn"] = epn;
        sets.append(s);
    }
    d["ir_sets"] = sets;
    return d;
}

py::dict finding_dict(const Finding& f) {
    py::dict d;
    d["check"] = std::string(check_name(f.check));
    d["graph6"] = f.graph6;
    d["verdict"] = std::string(verdict_name(f.verdict));
    if (!f.witness.is_null()) d["witness"] = f.witness.dump();
    if (!f.reason.empty()) d["reason"] = f.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "irredundance parameters and IR-graph reconfiguration";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edge_list)
        .def("label", &Graph::label)
        .def("set_label", &Graph::set_label)
        .def("to_graph6", [](const Graph& g) { return emit_graph6(g); })
        .def("to_dot", [](const Graph& g) { return to_dot(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.order() << ", m=" << g.num_edges() << ")";
            return out.str();
        });

    py::class_<IrGraph>(m, "IrGraph")
        .def_property_readonly("order", &IrGraph::order)
        .def_property_readonly("nodes",
                               [](const IrGraph& h) { return sets_to_lists(h.nodes()); })
        .def_property_readonly("edges",
                               [](const IrGraph& h) {
                                   std::vector<std::tuple<int, int, int, int>> out;
                                   for (const IrGraphEdge& e : h.edges())
                                       out.emplace_back(e.i, e.j, e.u, e.v);
                                   return out;
                               })
        .def_property_readonly("graph", &IrGraph::view)
        .def_property_readonly("source", &IrGraph::source)
        .def("to_dot", [](const IrGraph& h) { return to_dot(h); })
        .def("to_json", [](const IrGraph& h) { return ir_graph_to_json(h).dump(); })
        .def("__repr__", [](const IrGraph& h) {
            std::ostringstream out;
            out << "IrGraph(nodes=" << h.order() << ", edges=" << h.edges().size()
                << ")";
            return out.str();
        });

    m.def("from_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("family", [](const std::string& spec) { return build_family(spec); });
    m.def("fixture", [](const std::string& name) { return fixture(name); });
    m.def("resolve_graph", [](const std::string& arg) { return resolve_graph_argument(arg); });
    m.def("disjoint_union", &disjoint_union);
    m.def("cartesian_product", &cartesian_product);

    m.def("is_connected", &is_connected);
    m.def("diameter", [](const Graph& g) { return diameter(g); });
    m.def("distance", [](const Graph& g, int u, int v) { return distance(g, u, v); });
    m.def("has_induced_c4", &has_induced_c4);
    m.def("has_triangle", &has_triangle);
    m.def("universal_vertices",
          [](const Graph& g) { return universal_vertices(g).to_vector(); });
    m.def("is_complete", &is_complete);
    m.def(
        "are_isomorphic",
        [](const Graph& g, const Graph& h, int limit) {
            return are_isomorphic(g, h, limit);
        },
        py::arg("g"), py::arg("h"), py::arg("limit") = kDefaultIsomorphismLimit);
    m.def(
        "find_isomorphism",
        [](const Graph& g, const Graph& h, int limit) {
            return find_isomorphism(g, h, limit);
        },
        py::arg("g"), py::arg("h"), py::arg("limit") = kDefaultIsomorphismLimit);

    m.def("private_neighbors",
          [](const Graph& g, const std::vector<int>& d, int v) {
              return private_neighbors(g, set_from_list(d), v).to_vector();
          });
    m.def("external_private_neighbors",
          [](const Graph& g, const std::vector<int>& d, int v) {
              return external_private_neighbors(g, set_from_list(d), v).to_vector();
          });
    m.def("is_irredundant", [](const Graph& g, const std::vector<int>& d) {
        return is_irredundant(g, set_from_list(d));
    });
    m.def("is_maximal_irredundant", [](const Graph& g, const std::vector<int>& d) {
        return is_maximal_irredundant(g, set_from_list(d));
    });
    m.def("is_dominating", [](const Graph& g, const std::vector<int>& d) {
        return is_dominating(g, set_from_list(d));
    });
    m.def("is_minimal_dominating", [](const Graph& g, const std::vector<int>& d) {
        return is_minimal_dominating(g, set_from_list(d));
    });

    m.def("upper_irredundance", [](const Graph& g) {
        auto [IR, sets] = upper_irredundance(g);
        return std::pair(IR, sets_to_lists(sets));
    });
    m.def("lower_irredundance", [](const Graph& g) {
        auto [ir, witness] = lower_irredundance(g);
        return std::pair(ir, witness.to_vector());
    });
    m.def("analyze", [](const Graph& g) { return report_dict(analyze_irredundance(g)); });

    m.def(
        "flip_set",
        [](const Graph& g, const std::vector<int>& x, const std::map<int, int>& repl) {
            FlipChoice choice;
            for (auto [y, yp] : repl) choice.flipped.insert(y);
            choice.replacement = repl;
            return flip_set(g, set_from_list(x), choice).to_vector();
        },
        py::arg("g"), py::arg("x"), py::arg("replacement"),
        "Flip the vertices in `replacement` to their chosen external private "
        "neighbors.");
    m.def(
        "enumerate_flip_sets",
        [](const Graph& g, const std::vector<int>& x, int cap) {
            auto result = enumerate_flip_sets(g, set_from_list(x), cap);
            return std::pair(sets_to_lists(result.sets), result.truncated);
        },
        py::arg("g"), py::arg("x"), py::arg("cap") = kDefaultFlipCap);

    m.def("token_slide_adjacent",
          [](const Graph& g, const std::vector<int>& d, const std::vector<int>& dp) {
              return token_slide_adjacent(g, set_from_list(d), set_from_list(dp));
          });
    m.def(
        "build_ir_graph",
        [](const Graph& g, int node_cap) { return build_ir_graph(g, node_cap); },
        py::arg("g"), py::arg("node_cap") = kDefaultNodeCap);

    m.def(
        "build_disconnected_source",
        [](const Graph& target, int component_index, int clique_size) {
            DisconnectedSource built = build_disconnected_source(
                {target, component_index, clique_size});
            py::dict d;
            d["graph"] = built.graph;
            d["h1"] = built.h1;
            d["h2"] = built.h2;
            d["x"] = built.x;
            d["y"] = built.y;
            return d;
        },
        py::arg("target"), py::arg("component_index") = 0, py::arg("clique_size") = -1);

    m.def(
        "check_theorems",
        [](const Graph& g, int node_cap, int flip_cap) {
            HarnessCaps caps;
            caps.node_cap = node_cap;
            caps.flip_cap = flip_cap;
            py::list out;
            for (const Finding& f : check_theorems(g, caps)) out.append(finding_dict(f));
            return out;
        },
        py::arg("g"), py::arg("node_cap") = kDefaultNodeCap,
        py::arg("flip_cap") = kDefaultFlipCap);

    m.def(
        "probe_target",
        [](const Graph& target, const std::string& census_text, int workers) {
            std::istringstream census(census_text);
            ProbeResult r = probe_target(target, census, {}, workers);
            py::dict d;
            d["target"] = r.target_graph6;
            d["census_max_order"] = r.census_max_order;
            d["matches"] = r.matches;
            d["exhausted"] = r.exhausted;
            d["candidates"] = r.candidates;
            d["parse_errors"] = r.parse_errors;
            d["evidence"] = r.evidence;
            return d;
        },
        py::arg("target"), py::arg("census_text"), py::arg("workers") = 1);

    m.def(
        "scan_census",
        [](const std::string& census_text, int workers) {
            std::istringstream census(census_text);
            std::vector<CheckId> checks(std::begin(kAllChecks), std::end(kAllChecks));
            ScanReport r = scan_census(census, checks, {}, workers);
            return scan_report_to_json(r, checks).dump();
        },
        py::arg("census_text"), py::arg("workers") = 1,
        "Run every structural check over a graph6 census given as text; "
        "returns the aggregate report as a JSON string.");
}
