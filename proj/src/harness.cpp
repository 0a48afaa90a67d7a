#include "irgraphs/harness.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irgraphs/graph6.hpp"
#include "irgraphs/irredundance.hpp"

namespace irgraphs {

std::string_view check_name(CheckId id) {
    switch (id) {
        case CheckId::C4OrDiam3: return "C4-OR-DIAM3";
        case CheckId::CorC4: return "COR-C4";
        case CheckId::DiamLower: return "DIAM-LOWER";
        case CheckId::IndepTriC4: return "INDEP-TRI-C4";
        case CheckId::Diam2C4: return "DIAM2-C4";
        case CheckId::UnivVertex: return "UNIV-VERTEX";
    }
    throw std::invalid_argument("unknown check id");
}

CheckId check_from_name(std::string_view name) {
    for (CheckId id : kAllChecks)
        if (check_name(id) == name) return id;
    throw std::invalid_argument("unknown check name '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Violation: return "violation";
        case Verdict::Inapplicable: return "inapplicable";
    }
    throw std::invalid_argument("unknown verdict");
}

nlohmann::json finding_to_json(const Finding& f) {
    nlohmann::json j;
    j["check"] = check_name(f.check);
    j["graph6"] = f.graph6;
    j["verdict"] = verdict_name(f.verdict);
    if (!f.witness.is_null()) j["witness"] = f.witness;
    if (!f.reason.empty()) j["reason"] = f.reason;
    return j;
}

namespace {

struct SetFacts {
    int epn_bearing = 0;      // members with nonempty EPN
    int positive_degree = 0;  // members with a neighbor inside the set
    int edge_count = 0;       // edges of G[X]
    bool independent() const { return positive_degree == 0; }
};

SetFacts facts_for(const Graph& g, const VertexSet& d) {
    SetFacts f;
    d.for_each([&](int v) {
        int inside = (g.neighbors(v) & d).size();
        if (inside > 0) ++f.positive_degree;
        f.edge_count += inside;
        if (!external_private_neighbors(g, d, v).empty()) ++f.epn_bearing;
    });
    f.edge_count /= 2;
    return f;
}

struct CheckOutcome {
    std::vector<Finding> findings;
    bool p4_applicable = false;
    bool p4_max_degree_ge3 = false;
};

nlohmann::json set_json(const VertexSet& s) { return s.to_vector(); }

CheckOutcome run_checks(const Graph& g, const HarnessCaps& caps) {
    CheckOutcome out;
    std::string g6 = emit_graph6(g);
    auto add = [&](CheckId id, Verdict v, nlohmann::json witness = {},
                   std::string reason = {}) {
        out.findings.push_back({id, g6, v, std::move(witness), std::move(reason)});
    };

    std::optional<IrGraph> built;
    try {
        built.emplace(build_ir_graph(g, caps.node_cap));
    } catch (const NodeCapExceeded& e) {
        for (CheckId id : kAllChecks) add(id, Verdict::Inapplicable, {}, e.what());
        return out;
    }
    const IrGraph& h = *built;

    const Graph& view = h.view();
    const bool connected = is_connected(view);
    const std::optional<int> diam = diameter(view);

    std::vector<SetFacts> facts;
    facts.reserve(h.nodes().size());
    for (const VertexSet& d : h.nodes()) facts.push_back(facts_for(g, d));

    // C4-OR-DIAM3
    if (!connected) {
        add(CheckId::C4OrDiam3, Verdict::Inapplicable, {}, "IR-graph is disconnected");
    } else {
        std::vector<int> quals;
        for (int i = 0; i < h.order(); ++i)
            if (facts[static_cast<std::size_t>(i)].epn_bearing >= 2) quals.push_back(i);
        if (quals.empty()) {
            add(CheckId::C4OrDiam3, Verdict::Inapplicable, {},
                "no IR-set has two EPN-bearing vertices");
        } else {
            nlohmann::json violations = nlohmann::json::array();
            bool capped = false;
            for (int i : quals) {
                if (has_induced_c4_through(view, i)) continue;
                const VertexSet& x = h.nodes()[static_cast<std::size_t>(i)];
                if (!diam || *diam < 3) {
                    violations.push_back({{"set", set_json(x)},
                                          {"why", "no induced C4 and diameter < 3"},
                                          {"diameter", diam ? *diam : -1}});
                    continue;
                }
                auto flips = detail::enumerate_flip_sets_unchecked(g, x, caps.flip_cap);
                if (flips.truncated) {
                    capped = true;
                    continue;
                }
                for (const VertexSet& xp : flips.sets) {
                    int j = h.index_of(xp);
                    if (j < 0) {
                        violations.push_back({{"set", set_json(x)},
                                              {"flip_set", set_json(xp)},
                                              {"why", "flip-set is not an IR-set"}});
                        continue;
                    }
                    auto d = distance(view, i, j);
                    if (!d || *d < 3)
                        violations.push_back({{"set", set_json(x)},
                                              {"flip_set", set_json(xp)},
                                              {"distance", d ? *d : -1},
                                              {"why", "no induced C4 and a flip-set "
                                                      "closer than 3"}});
                }
            }
            if (!violations.empty())
                add(CheckId::C4OrDiam3, Verdict::Violation, std::move(violations));
            else if (capped)
                add(CheckId::C4OrDiam3, Verdict::Inapplicable, {},
                    "flip enumeration hit the cap");
            else
                add(CheckId::C4OrDiam3, Verdict::Pass);
        }
    }

    // COR-C4
    if (!connected) {
        add(CheckId::CorC4, Verdict::Inapplicable, {}, "IR-graph is disconnected");
    } else {
        std::vector<int> quals;
        for (int i = 0; i < h.order(); ++i) {
            const SetFacts& f = facts[static_cast<std::size_t>(i)];
            if (f.edge_count == 1 || (f.independent() && f.epn_bearing >= 2))
                quals.push_back(i);
        }
        if (quals.empty()) {
            add(CheckId::CorC4, Verdict::Inapplicable, {},
                "no IR-set with one edge or two EPN-bearing independent vertices");
        } else {
            nlohmann::json violations = nlohmann::json::array();
            for (int i : quals)
                if (!has_induced_c4_through(view, i))
                    violations.push_back(
                        {{"set", set_json(h.nodes()[static_cast<std::size_t>(i)])},
                         {"why", "qualifying IR-set lies on no induced C4"}});
            if (!violations.empty())
                add(CheckId::CorC4, Verdict::Violation, std::move(violations));
            else
                add(CheckId::CorC4, Verdict::Pass);
        }
    }

    // DIAM-LOWER
    if (!connected) {
        add(CheckId::DiamLower, Verdict::Inapplicable, {}, "IR-graph is disconnected");
    } else {
        int best_k = 0;
        int best_i = -1;
        for (int i = 0; i < h.order(); ++i) {
            int k = facts[static_cast<std::size_t>(i)].positive_degree;
            if (k > best_k) {
                best_k = k;
                best_i = i;
            }
        }
        if (best_k < 3) {
            add(CheckId::DiamLower, Verdict::Inapplicable, {},
                "no IR-set with three positive-degree vertices");
        } else if (!diam || *diam < best_k) {
            add(CheckId::DiamLower, Verdict::Violation,
                {{"set", set_json(h.nodes()[static_cast<std::size_t>(best_i)])},
                 {"positive_degree_vertices", best_k},
                 {"diameter", diam ? *diam : -1}});
        } else {
            add(CheckId::DiamLower, Verdict::Pass);
        }
    }

    // INDEP-TRI-C4
    {
        bool all_independent = true;
        for (const SetFacts& f : facts)
            if (!f.independent()) all_independent = false;
        if (!connected)
            add(CheckId::IndepTriC4, Verdict::Inapplicable, {},
                "IR-graph is disconnected");
        else if (view.order() < 3)
            add(CheckId::IndepTriC4, Verdict::Inapplicable, {},
                "IR-graph has fewer than three vertices");
        else if (!all_independent)
            add(CheckId::IndepTriC4, Verdict::Inapplicable, {},
                "some IR-set is not independent");
        else if (has_triangle(view) || has_induced_c4(view))
            add(CheckId::IndepTriC4, Verdict::Pass);
        else
            add(CheckId::IndepTriC4, Verdict::Violation,
                {{"why", "all IR-sets independent but the IR-graph has neither a "
                         "triangle nor an induced C4"}});

        bool any_independent = false;
        for (const SetFacts& f : facts)
            if (f.independent()) any_independent = true;
        if (any_independent && connected && view.order() >= 3) {
            out.p4_applicable = true;
            out.p4_max_degree_ge3 = max_degree(view) >= 3;
        }
    }

    // DIAM2-C4
    if (!connected)
        add(CheckId::Diam2C4, Verdict::Inapplicable, {}, "IR-graph is disconnected");
    else if (!diam || *diam != 2)
        add(CheckId::Diam2C4, Verdict::Inapplicable, {},
            "diameter is " + std::to_string(diam ? *diam : -1) + ", not 2");
    else if (has_induced_c4(view))
        add(CheckId::Diam2C4, Verdict::Pass);
    else
        add(CheckId::Diam2C4, Verdict::Violation,
            {{"why", "diameter-2 IR-graph without an induced C4"}});

    // UNIV-VERTEX
    {
        VertexSet univ = universal_vertices(view);
        if (!is_complete(view) && !univ.empty())
            add(CheckId::UnivVertex, Verdict::Violation,
                {{"universal_vertices", set_json(univ)},
                 {"why", "non-complete IR-graph with a universal vertex"}});
        else
            add(CheckId::UnivVertex, Verdict::Pass);
    }

    return out;
}

// Order the findings like kAllChecks and keep only the requested ones.
std::vector<Finding> select_checks(std::vector<Finding> all,
                                   const std::vector<CheckId>& checks) {
    std::vector<Finding> out;
    out.reserve(checks.size());
    for (CheckId id : checks)
        for (Finding& f : all)
            if (f.check == id) out.push_back(std::move(f));
    return out;
}

void run_indexed(std::size_t count, int workers, const std::function<void(std::size_t)>& job) {
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                job(i);
            }
        });
    for (auto& t : pool) t.join();
}

std::vector<std::string> census_lines(std::istream& census) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(census, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::vector<Finding> check_theorems(const Graph& g, const HarnessCaps& caps) {
    return run_checks(g, caps).findings;
}

ProbeResult probe_target(const Graph& target, std::istream& census,
                         const HarnessCaps& caps, int workers) {
    if (target.order() > caps.iso_limit)
        throw std::invalid_argument("probe_target: target order exceeds the isomorphism limit");

    ProbeResult result;
    result.target_graph6 = emit_graph6(target);

    auto lines = census_lines(census);
    struct Slot {
        enum { ParseError, Skipped, NonMatch, Match } kind = NonMatch;
        int order = 0;
        std::string message;
    };
    std::vector<Slot> slots(lines.size());

    run_indexed(lines.size(), workers, [&](std::size_t i) {
        Slot& slot = slots[i];
        Graph cand{0};
        try {
            cand = parse_graph6(lines[i]);
        } catch (const std::exception& e) {
            slot.kind = Slot::ParseError;
            slot.message = e.what();
            return;
        }
        slot.order = cand.order();
        try {
            auto upper = upper_irredundance(cand);
            if (static_cast<int>(upper.sets.size()) != target.order()) return;
            IrGraph h = build_ir_graph(cand, caps.node_cap);
            slot.kind = are_isomorphic(h.view(), target, caps.iso_limit)
                            ? Slot::Match
                            : Slot::NonMatch;
        } catch (const std::exception& e) {
            slot.kind = Slot::Skipped;
            slot.message = e.what();
        }
    });

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Slot& slot = slots[i];
        switch (slot.kind) {
            case Slot::ParseError:
                ++result.parse_errors;
                result.exhausted = false;
                continue;
            case Slot::Skipped:
                result.exhausted = false;
                break;
            case Slot::Match:
                result.matches.push_back(lines[i]);
                break;
            case Slot::NonMatch:
                break;
        }
        ++result.candidates;
        result.census_max_order = std::max(result.census_max_order, slot.order);
    }

    std::ostringstream evidence;
    if (result.matches.empty()) {
        evidence << "no source graph with an IR-graph isomorphic to the target found";
        if (result.exhausted)
            evidence << " among all " << result.candidates
                     << " census graphs (order up to " << result.census_max_order
                     << "); bounded evidence only, not a proof";
        else
            evidence << ", but the census scan was incomplete";
    } else {
        evidence << result.matches.size()
                 << " source(s) realize the target as an IR-graph (census order up to "
                 << result.census_max_order << ")";
    }
    result.evidence = evidence.str();
    return result;
}

nlohmann::json probe_to_json(const ProbeResult& r) {
    nlohmann::json j;
    j["target"] = r.target_graph6;
    j["census_max_order"] = r.census_max_order;
    j["candidates"] = r.candidates;
    j["matches"] = r.matches;
    j["exhausted"] = r.exhausted;
    j["parse_errors"] = r.parse_errors;
    j["evidence"] = r.evidence;
    return j;
}

std::string probe_to_text(const ProbeResult& r) {
    std::ostringstream out;
    out << "target " << r.target_graph6 << ": " << r.matches.size() << " match(es), "
        << (r.exhausted ? "exhausted" : "incomplete") << "\n";
    for (const std::string& m : r.matches) out << "  match " << m << "\n";
    if (r.parse_errors > 0) out << "  parse errors: " << r.parse_errors << "\n";
    out << "  " << r.evidence << "\n";
    return out.str();
}

ScanReport scan_census(std::istream& census, const std::vector<CheckId>& checks,
                       const HarnessCaps& caps, int workers,
                       std::vector<std::pair<long long, Finding>>* all_findings) {
    auto start = std::chrono::steady_clock::now();
    ScanReport report;
    report.counts.assign(checks.size(), {0, 0, 0});

    auto lines = census_lines(census);
    struct Slot {
        bool parse_error = false;
        std::string message;
        std::vector<Finding> findings;
        bool p4_applicable = false;
        bool p4_ge3 = false;
    };
    std::vector<Slot> slots(lines.size());

    run_indexed(lines.size(), workers, [&](std::size_t i) {
        Slot& slot = slots[i];
        Graph g{0};
        try {
            g = parse_graph6(lines[i]);
        } catch (const std::exception& e) {
            slot.parse_error = true;
            slot.message = e.what();
            return;
        }
        CheckOutcome outcome = run_checks(g, caps);
        slot.findings = select_checks(std::move(outcome.findings), checks);
        slot.p4_applicable = outcome.p4_applicable;
        slot.p4_ge3 = outcome.p4_max_degree_ge3;
    });

    for (std::size_t i = 0; i < lines.size(); ++i) {
        Slot& slot = slots[i];
        auto index = static_cast<long long>(i);
        if (slot.parse_error) {
            ++report.parse_errors;
            report.parse_error_lines.emplace_back(index, slot.message);
            continue;
        }
        ++report.graphs_scanned;
        for (std::size_t c = 0; c < slot.findings.size(); ++c) {
            const Finding& f = slot.findings[c];
            ++report.counts[c][static_cast<std::size_t>(f.verdict)];
            if (f.verdict == Verdict::Violation)
                report.violations.emplace_back(index, f);
            if (all_findings) all_findings->emplace_back(index, f);
        }
        if (slot.p4_applicable) {
            ++report.indep_ir_connected_sources;
            if (slot.p4_ge3)
                ++report.indep_ir_max_degree_ge3;
            else
                report.indep_ir_low_degree_sources.push_back(lines[i]);
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json scan_report_to_json(const ScanReport& r,
                                   const std::vector<CheckId>& checks) {
    nlohmann::json j;
    j["graphs_scanned"] = r.graphs_scanned;
    j["parse_errors"] = r.parse_errors;
    auto errs = nlohmann::json::array();
    for (const auto& [idx, msg] : r.parse_error_lines)
        errs.push_back({{"index", idx}, {"error", msg}});
    j["parse_error_lines"] = std::move(errs);
    auto counts = nlohmann::json::object();
    for (std::size_t c = 0; c < checks.size(); ++c)
        counts[std::string(check_name(checks[c]))] = {
            {"pass", r.counts[c][0]},
            {"violation", r.counts[c][1]},
            {"inapplicable", r.counts[c][2]},
        };
    j["counts"] = std::move(counts);
    auto viols = nlohmann::json::array();
    for (const auto& [idx, f] : r.violations) {
        nlohmann::json v = finding_to_json(f);
        v["index"] = idx;
        viols.push_back(std::move(v));
    }
    j["violations"] = std::move(viols);
    j["independent_ir_set_stats"] = {
        {"connected_ir_graphs_order_ge3", r.indep_ir_connected_sources},
        {"with_max_degree_ge3", r.indep_ir_max_degree_ge3},
        {"low_degree_sources", r.indep_ir_low_degree_sources},
    };
    return j;
}

std::string scan_report_to_text(const ScanReport& r,
                                const std::vector<CheckId>& checks) {
    std::ostringstream out;
    out << "scanned " << r.graphs_scanned << " graph(s), " << r.parse_errors
        << " parse error(s), " << r.violations.size() << " violation(s) in "
        << r.elapsed_seconds << " s\n";
    for (std::size_t c = 0; c < checks.size(); ++c)
        out << "  " << check_name(checks[c]) << ": pass=" << r.counts[c][0]
            << " violation=" << r.counts[c][1] << " inapplicable=" << r.counts[c][2]
            << "\n";
    for (const auto& [idx, f] : r.violations)
        out << "  VIOLATION line " << idx << " " << f.graph6 << " "
            << check_name(f.check) << "\n";
    out << "  sources with an independent IR-set and connected IR-graph of order >= 3: "
        << r.indep_ir_connected_sources << " (max degree >= 3 in "
        << r.indep_ir_max_degree_ge3 << " of them)\n";
    return out.str();
}

}  // namespace irgraphs
