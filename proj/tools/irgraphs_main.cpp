// Command-line front end: irredundance reports, IR-graphs, source-graph
// construction, fixtures, families, census checking and target probing.
//
// Exit codes: 0 success / all-pass, 1 violations or unexpected probe
// matches, 2 usage or input errors.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "irgraphs/constructions.hpp"
#include "irgraphs/families.hpp"
#include "irgraphs/graph6.hpp"
#include "irgraphs/harness.hpp"
#include "irgraphs/io.hpp"
#include "irgraphs/irredundance.hpp"
#include "irgraphs/reconfig.hpp"

namespace {

using namespace irgraphs;

struct Options {
    std::string format = "text";
    std::string output;
    HarnessCaps caps;
    int workers = 1;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.output.empty() || opt.output == "-") return std::cout;
    file.open(opt.output);
    if (!file) throw CLI::RuntimeError("cannot open output file '" + opt.output + "'", 2);
    return file;
}

void add_common(CLI::App* cmd, Options& opt, std::vector<std::string> formats) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("-o,--output", opt.output, "output path (default: stdout)");
    cmd->add_option("--node-cap", opt.caps.node_cap, "maximum number of IR-sets")
        ->envname("IRGRAPHS_NODE_CAP")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--flip-cap", opt.caps.flip_cap, "flip-set enumeration cap")
        ->envname("IRGRAPHS_FLIP_CAP")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iso-limit", opt.caps.iso_limit,
                    "largest order accepted by the isomorphism test")
        ->envname("IRGRAPHS_ISO_LIMIT")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", opt.workers, "worker threads for census scans")
        ->envname("IRGRAPHS_WORKERS")
        ->check(CLI::PositiveNumber);
}

void write_graph(const Graph& g, const Options& opt, std::ostream& out) {
    if (opt.format == "g6") {
        out << emit_graph6(g) << "\n";
    } else if (opt.format == "json") {
        out << graph_to_json(g).dump(2) << "\n";
    } else if (opt.format == "dot") {
        out << to_dot(g);
    } else {
        out << "graph6: " << emit_graph6(g) << "\n";
        out << "order: " << g.order() << "\n";
        out << "edges:";
        for (auto [u, v] : g.edge_list()) out << " " << u << "-" << v;
        out << "\n";
        if (g.has_labels()) {
            out << "labels:";
            for (int v = 0; v < g.order(); ++v) out << " " << v << "=" << g.label(v);
            out << "\n";
        }
    }
}

void write_ir_graph(const IrGraph& h, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        out << ir_graph_to_json(h).dump(2) << "\n";
    } else if (opt.format == "dot") {
        out << to_dot(h);
    } else if (opt.format == "g6") {
        out << emit_graph6(h.view()) << "\n";
    } else {
        out << "nodes: " << h.order() << "\n";
        for (int i = 0; i < h.order(); ++i)
            out << "  " << i << ": "
                << set_to_text(h.nodes()[static_cast<std::size_t>(i)]) << "\n";
        out << "edges: " << h.edges().size() << "\n";
        for (const IrGraphEdge& e : h.edges())
            out << "  " << e.i << " -- " << e.j << "  " << e.u << "->" << e.v << "\n";
    }
}

std::ifstream open_census(const std::string& path, std::istream*& stream) {
    std::ifstream file;
    if (path == "-") {
        stream = &std::cin;
    } else {
        file.open(path);
        if (!file) throw CLI::RuntimeError("cannot open census file '" + path + "'", 2);
        stream = &file;
    }
    return file;
}

int run(int argc, char** argv) {
    CLI::App app{"irredundance parameters, IR-graphs and structural checks"};
    app.require_subcommand(1);

    Options opt;

    // compute
    std::string compute_arg;
    auto* compute = app.add_subcommand("compute", "ir(G), IR(G) and all IR-sets");
    compute->add_option("graph", compute_arg, "graph6 literal, @file or family spec")
        ->required();
    add_common(compute, opt, {"text", "json"});

    // irgraph
    std::string irgraph_arg;
    auto* irgraph = app.add_subcommand("irgraph", "IR-graph under the slide model");
    irgraph->add_option("graph", irgraph_arg, "graph6 literal, @file or family spec")
        ->required();
    add_common(irgraph, opt, {"text", "json", "dot", "g6"});

    // construct thm31
    auto* construct = app.add_subcommand("construct", "source-graph constructions");
    construct->require_subcommand(1);
    std::string thm31_target;
    int thm31_clique = -1;
    int thm31_component = 0;
    auto* thm31 = construct->add_subcommand(
        "thm31", "source whose IR-graph realizes a disconnected target");
    thm31->add_option("--target", thm31_target, "disconnected target graph")->required();
    thm31->add_option("--N", thm31_clique, "clique size N (default |V(H)|)");
    thm31->add_option("--component", thm31_component,
                      "index of the component used as H1")
        ->capture_default_str();
    add_common(thm31, opt, {"text", "json", "dot", "g6"});

    // fixture
    std::string fixture_name;
    auto* fixture_cmd = app.add_subcommand("fixture", "named example graphs");
    fixture_cmd->add_option("name", fixture_name, "fig1-G, fig3-G or fig4-F")->required();
    add_common(fixture_cmd, opt, {"text", "json", "dot", "g6"});

    // family
    std::string family_arg;
    auto* family_cmd = app.add_subcommand("family", "standard graph families");
    family_cmd
        ->add_option("spec", family_arg,
                     "e.g. path4, k5, c6, q3, star:3, doublestar:2,2, "
                     "doublespider:1,1;1,2, 2k2, k2*k2")
        ->required();
    add_common(family_cmd, opt, {"text", "json", "dot", "g6"});

    // check
    std::string check_census;
    std::string findings_path;
    std::string dot_dir;
    auto* check = app.add_subcommand("check", "run the structural checks over a census");
    check->add_option("census", check_census, "graph6 file, one graph per line ('-' for stdin)")
        ->required();
    check->add_option("--findings", findings_path, "write one JSON finding per line");
    check->add_option("--dot-dir", dot_dir, "dump violating IR-graphs as DOT files here");
    add_common(check, opt, {"text", "json"});

    // probe
    std::string probe_target_arg;
    std::string probe_census;
    bool expect_none = false;
    auto* probe = app.add_subcommand(
        "probe", "scan a census for sources whose IR-graph matches a target");
    probe->add_option("--target", probe_target_arg, "target graph")->required();
    probe->add_option("census", probe_census, "graph6 file ('-' for stdin)")->required();
    probe->add_flag("--expect-none", expect_none,
                    "exit with status 1 if any match is found");
    add_common(probe, opt, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors map to 2; --help stays 0
    }

    std::ofstream out_file;

    if (*compute) {
        Graph g = resolve_graph_argument(compute_arg);
        IrredundanceReport report = analyze_irredundance(g);
        std::ostream& out = open_output(opt, out_file);
        if (opt.format == "json")
            out << report_to_json(report).dump(2) << "\n";
        else
            out << report_to_text(report) << "\n";
        return 0;
    }

    if (*irgraph) {
        Graph g = resolve_graph_argument(irgraph_arg);
        IrGraph h = build_ir_graph(g, opt.caps.node_cap);
        write_ir_graph(h, opt, open_output(opt, out_file));
        return 0;
    }

    if (*thm31) {
        DisconnectedSourceSpec spec{resolve_graph_argument(thm31_target),
                                    thm31_component, thm31_clique};
        DisconnectedSource built = build_disconnected_source(spec);
        write_graph(built.graph, opt, open_output(opt, out_file));
        return 0;
    }

    if (*fixture_cmd) {
        write_graph(fixture(fixture_name), opt, open_output(opt, out_file));
        return 0;
    }

    if (*family_cmd) {
        write_graph(build_family(family_arg), opt, open_output(opt, out_file));
        return 0;
    }

    if (*check) {
        std::istream* census = nullptr;
        std::ifstream census_file = open_census(check_census, census);
        std::vector<CheckId> checks(std::begin(kAllChecks), std::end(kAllChecks));
        std::vector<std::pair<long long, Finding>> findings;
        ScanReport report =
            scan_census(*census, checks, opt.caps, opt.workers,
                        findings_path.empty() && dot_dir.empty() ? nullptr : &findings);
        if (!findings_path.empty()) {
            std::ofstream fout(findings_path);
            if (!fout)
                throw CLI::RuntimeError("cannot open findings file '" + findings_path + "'", 2);
            for (const auto& [index, finding] : findings) {
                nlohmann::json j = finding_to_json(finding);
                j["index"] = index;
                fout << j.dump() << "\n";
            }
        }
        if (!dot_dir.empty()) {
            std::filesystem::create_directories(dot_dir);
            for (const auto& [index, finding] : findings) {
                if (finding.verdict != Verdict::Violation) continue;
                Graph g = parse_graph6(finding.graph6);
                IrGraph h = build_ir_graph(g, opt.caps.node_cap);
                std::ofstream dot(dot_dir + "/violation-" + std::to_string(index) +
                                  ".dot");
                dot << to_dot(h);
            }
        }
        std::ostream& out = open_output(opt, out_file);
        if (opt.format == "json")
            out << scan_report_to_json(report, checks).dump(2) << "\n";
        else
            out << scan_report_to_text(report, checks);
        return report.violations.empty() ? 0 : 1;
    }

    if (*probe) {
        Graph target = resolve_graph_argument(probe_target_arg);
        std::istream* census = nullptr;
        std::ifstream census_file = open_census(probe_census, census);
        ProbeResult result = probe_target(target, *census, opt.caps, opt.workers);
        std::ostream& out = open_output(opt, out_file);
        if (opt.format == "json")
            out << probe_to_json(result).dump(2) << "\n";
        else
            out << probe_to_text(result);
        return expect_none && !result.matches.empty() ? 1 : 0;
    }

    return 2;  // unreachable with require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
