#include "irgraphs/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "irgraphs/families.hpp"
#include "irgraphs/graph6.hpp"

namespace irgraphs {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v)
        out << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
    for (auto [u, v] : g.edge_list()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) {
        auto labels = nlohmann::json::array();
        for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("labels")) {
        const auto& labels = j.at("labels");
        for (int v = 0; v < g.order(); ++v)
            g.set_label(v, labels.at(static_cast<std::size_t>(v)).get<std::string>());
    }
    return g;
}

nlohmann::json report_to_json(const IrredundanceReport& report) {
    nlohmann::json j;
    j["ir"] = report.ir;
    j["ir_witness"] = report.ir_witness.to_vector();
    j["IR"] = report.IR;
    auto sets = nlohmann::json::array();
    for (std::size_t i = 0; i < report.ir_sets.size(); ++i) {
        nlohmann::json s;
        s["vertices"] = report.ir_sets[i].to_vector();
        s["independent"] = report.info[i].independent;
        s["positive_degree_count"] = report.info[i].positive_degree_count;
        auto epn = nlohmann::json::object();
        for (const auto& [v, e] : report.info[i].epn)
            epn[std::to_string(v)] = e.to_vector();
        s["epn"] = std::move(epn);
        sets.push_back(std::move(s));
    }
    j["ir_sets"] = std::move(sets);
    return j;
}

std::string set_to_text(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

std::string report_to_text(const IrredundanceReport& report) {
    std::string out = "ir=" + std::to_string(report.ir) +
                      " IR=" + std::to_string(report.IR) + " sets=[";
    for (std::size_t i = 0; i < report.ir_sets.size(); ++i) {
        if (i > 0) out += ",";
        out += set_to_text(report.ir_sets[i]);
    }
    return out + "]";
}

std::string to_dot(const IrGraph& h, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int i = 0; i < h.order(); ++i)
        out << "  " << i << " [label=" << quoted(h.view().label(i)) << "];\n";
    for (const IrGraphEdge& e : h.edges())
        out << "  " << e.i << " -- " << e.j << " [label="
            << quoted(h.source().label(e.u) + "→" + h.source().label(e.v))
            << "];\n";
    out << "}\n";
    return out.str();
}

nlohmann::json ir_graph_to_json(const IrGraph& h) {
    nlohmann::json j;
    j["source"] = graph_to_json(h.source());
    auto nodes = nlohmann::json::array();
    for (const VertexSet& d : h.nodes()) nodes.push_back(d.to_vector());
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::json::array();
    for (const IrGraphEdge& e : h.edges())
        edges.push_back({{"i", e.i}, {"j", e.j}, {"u", e.u}, {"v", e.v}});
    j["edges"] = std::move(edges);
    j["graph"] = graph_to_json(h.view());
    return j;
}

Graph resolve_graph_argument(std::string_view arg) {
    if (arg.empty()) throw std::invalid_argument("empty graph argument");
    if (arg.front() == '@') {
        std::ifstream file{std::string(arg.substr(1))};
        if (!file)
            throw std::invalid_argument("cannot open graph file '" +
                                        std::string(arg.substr(1)) + "'");
        std::string line;
        while (std::getline(file, line))
            if (!line.empty()) return parse_graph6(line);
        throw std::invalid_argument("no graph line in '" + std::string(arg.substr(1)) + "'");
    }
    // Family specs first: their names never collide with well-formed
    // graph6 lines we could also accept.
    std::string family_error;
    try {
        return build_family(arg);
    } catch (const std::invalid_argument& e) {
        family_error = e.what();
    }
    try {
        return parse_graph6(arg);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("cannot interpret graph argument '" +
                                    std::string(arg) + "': not a family spec (" +
                                    family_error + ") and not graph6 (" + e.what() +
                                    ")");
    }
}

}  // namespace irgraphs
