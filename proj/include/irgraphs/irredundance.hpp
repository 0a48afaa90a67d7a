#pragma once

#include <map>
#include <vector>

#include "irgraphs/graph.hpp"

namespace irgraphs {

// ---- private neighborhoods ----

/// PN(v, D) = N[v] - N[D - {v}]. Requires v in D.
VertexSet private_neighbors(const Graph& g, const VertexSet& d, int v);

/// EPN(v, D) = PN(v, D) - {v}.
VertexSet external_private_neighbors(const Graph& g, const VertexSet& d, int v);

// ---- predicates ----

/// Every member keeps a private neighbor; the empty set qualifies vacuously.
bool is_irredundant(const Graph& g, const VertexSet& d);

/// Irredundant and not extendable by any single vertex (which settles all
/// supersets, since irredundance is downward closed).
bool is_maximal_irredundant(const Graph& g, const VertexSet& d);

bool is_dominating(const Graph& g, const VertexSet& d);

/// Dominating with no removable vertex.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

// ---- exact parameters ----

struct UpperIrredundance {
    int IR = 0;
    /// Every IR-set, in canonical order (lexicographic on ascending vertex
    /// lists). Duplicate-free and exhaustive.
    std::vector<VertexSet> sets;
};

/// Exact IR(G) with the full IR-set list. DFS over vertices in ascending
/// order extends only irredundant partial sets (sound because irredundance
/// is downward closed); the bound |D| + #remaining prunes the value phase,
/// then a second pass collects every set of the established size.
UpperIrredundance upper_irredundance(const Graph& g);

struct LowerIrredundance {
    int ir = 0;
    VertexSet witness;  // lexicographically first maximal irredundant set of size ir
};

/// Exact ir(G) by increasing-size search with maximality verification.
LowerIrredundance lower_irredundance(const Graph& g);

// ---- combined report ----

struct IrSetInfo {
    bool independent = false;
    int positive_degree_count = 0;           // vertices with a neighbor inside the set
    std::vector<std::pair<int, VertexSet>> epn;  // (member, EPN(member, D)) ascending
};

struct IrredundanceReport {
    int ir = 0;
    VertexSet ir_witness;
    int IR = 0;
    std::vector<VertexSet> ir_sets;  // canonical order
    std::vector<IrSetInfo> info;     // parallel to ir_sets
};

IrredundanceReport analyze_irredundance(const Graph& g);

// ---- flip sets ----

/// Weak partition X = Y + Z with a chosen external private neighbor for
/// each flipped vertex. Valid when every member outside `flipped` is
/// isolated in G[X] and each replacement lies in the flipper's EPN.
struct FlipChoice {
    VertexSet flipped;                // Y
    std::map<int, int> replacement;   // y -> y' in EPN(y, X)
};

/// X' = (X - Y) + Y'. Requires X to be an IR-set and a valid choice;
/// the result is then again an IR-set.
VertexSet flip_set(const Graph& g, const VertexSet& x, const FlipChoice& choice);

inline constexpr int kDefaultFlipCap = 4096;

struct FlipSetEnumeration {
    std::vector<VertexSet> sets;  // canonical order, deduplicated
    bool truncated = false;       // hit the cap before exhausting choices
};

/// All flip-sets of the IR-set X over every valid weak partition
/// (isolated vertices with EPNs may sit on either side) and every
/// replacement selection. Requires X to be an IR-set.
FlipSetEnumeration enumerate_flip_sets(const Graph& g, const VertexSet& x,
                                       int cap = kDefaultFlipCap);

namespace detail {
/// Enumeration core without the IR-set precondition check; X must be
/// irredundant.
FlipSetEnumeration enumerate_flip_sets_unchecked(const Graph& g, const VertexSet& x,
                                                 int cap);
}  // namespace detail

}  // namespace irgraphs
