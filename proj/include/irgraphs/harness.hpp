#pragma once

#include <array>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irgraphs/graph.hpp"
#include "irgraphs/isomorphism.hpp"
#include "irgraphs/reconfig.hpp"

namespace irgraphs {

/// Structural facts about IR-graphs that must hold for every source graph;
/// a violation means a bug (or a refuted theorem).
enum class CheckId {
    C4OrDiam3,   // IR-set with >=2 EPN-bearing vertices: induced C4 through it,
                 // or diam >= 3 with every flip-set at distance >= 3
    CorC4,       // one edge in G[X], or independent with >=2 EPN-bearing:
                 // X lies on an induced C4
    DiamLower,   // k >= 3 positive-degree vertices in G[X]: diam(H) >= k
    IndepTriC4,  // all IR-sets independent, H connected of order >= 3:
                 // H has a triangle or an induced C4
    Diam2C4,     // connected H of diameter 2 has an induced C4
    UnivVertex,  // H is never non-complete with a universal vertex
};

inline constexpr CheckId kAllChecks[] = {CheckId::C4OrDiam3,  CheckId::CorC4,
                                         CheckId::DiamLower,  CheckId::IndepTriC4,
                                         CheckId::Diam2C4,    CheckId::UnivVertex};

std::string_view check_name(CheckId id);
CheckId check_from_name(std::string_view name);

enum class Verdict { Pass, Violation, Inapplicable };

std::string_view verdict_name(Verdict v);

struct Finding {
    CheckId check{};
    std::string graph6;       // source graph
    Verdict verdict{};
    nlohmann::json witness;   // machine-checkable payload for violations
    std::string reason;       // why a check was inapplicable
};

nlohmann::json finding_to_json(const Finding& f);

struct HarnessCaps {
    int node_cap = kDefaultNodeCap;
    int flip_cap = kDefaultFlipCap;
    int iso_limit = kDefaultIsomorphismLimit;
};

/// Run every check on the IR-graph of g; one Finding per check. When the
/// IR-graph exceeds the node cap, every finding is inapplicable with the
/// reason recorded.
std::vector<Finding> check_theorems(const Graph& g, const HarnessCaps& caps = {});

struct ProbeResult {
    std::string target_graph6;
    int census_max_order = 0;           // largest order seen in the census
    std::vector<std::string> matches;   // sources whose IR-graph matches, in input order
    bool exhausted = true;              // false if anything was skipped or unreadable
    long long candidates = 0;
    int parse_errors = 0;
    std::string evidence;               // fixed wording: bounded evidence, never proof
};

nlohmann::json probe_to_json(const ProbeResult& r);
std::string probe_to_text(const ProbeResult& r);

/// Scan a graph6 census for sources whose IR-graph is isomorphic to the
/// target. Every reported match re-verifies under build_ir_graph +
/// find_isomorphism before it is listed.
ProbeResult probe_target(const Graph& target, std::istream& census,
                         const HarnessCaps& caps = {}, int workers = 1);

struct ScanReport {
    long long graphs_scanned = 0;
    int parse_errors = 0;
    std::vector<std::pair<long long, std::string>> parse_error_lines;  // (index, message)
    // per check: [pass, violation, inapplicable] counts, indexed like kAllChecks
    std::vector<std::array<long long, 3>> counts;
    std::vector<std::pair<long long, Finding>> violations;  // (census index, finding)
    // data relevant to the open degree question: sources with an independent
    // IR-set whose connected IR-graph has order >= 3, and how many of those
    // IR-graphs have maximum degree >= 3
    long long indep_ir_connected_sources = 0;
    long long indep_ir_max_degree_ge3 = 0;
    std::vector<std::string> indep_ir_low_degree_sources;
    double elapsed_seconds = 0.0;  // excluded from JSON so reports stay byte-identical
};

/// Streaming census scan; deterministic aggregate regardless of worker
/// count (findings are merged in input order).
ScanReport scan_census(std::istream& census, const std::vector<CheckId>& checks,
                       const HarnessCaps& caps = {}, int workers = 1,
                       std::vector<std::pair<long long, Finding>>* all_findings = nullptr);

nlohmann::json scan_report_to_json(const ScanReport& r, const std::vector<CheckId>& checks);
std::string scan_report_to_text(const ScanReport& r, const std::vector<CheckId>& checks);

}  // namespace irgraphs
