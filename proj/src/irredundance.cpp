#include "irgraphs/irredundance.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace irgraphs {

VertexSet private_neighbors(const Graph& g, const VertexSet& d, int v) {
    if (!d.contains(v))
        throw std::invalid_argument("private_neighbors: vertex " + std::to_string(v) +
                                    " is not in D");
    VertexSet rest = d;
    rest.erase(v);
    return g.closed_neighborhood(v) - g.closed_neighborhood(rest);
}

VertexSet external_private_neighbors(const Graph& g, const VertexSet& d, int v) {
    VertexSet pn = private_neighbors(g, d, v);
    pn.erase(v);
    return pn;
}

bool is_irredundant(const Graph& g, const VertexSet& d) {
    bool ok = true;
    d.for_each([&](int v) {
        if (ok && private_neighbors(g, d, v).empty()) ok = false;
    });
    return ok;
}

bool is_maximal_irredundant(const Graph& g, const VertexSet& d) {
    if (!is_irredundant(g, d)) return false;
    for (int w = 0; w < g.order(); ++w) {
        if (d.contains(w)) continue;
        VertexSet bigger = d;
        bigger.insert(w);
        if (is_irredundant(g, bigger)) return false;
    }
    return true;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    return g.closed_neighborhood(d) == g.vertices();
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
    if (!is_dominating(g, d)) return false;
    bool minimal = true;
    d.for_each([&](int v) {
        if (!minimal) return;
        VertexSet smaller = d;
        smaller.erase(v);
        if (is_dominating(g, smaller)) minimal = false;
    });
    return minimal;
}

namespace {

// Shared DFS for both phases of the IR computation. Members of the partial
// set carry their live private neighborhoods, updated incrementally: adding
// w removes N[w] from every other PN and gives w the part of N[w] that the
// set does not already dominate.
struct IrSearch {
    explicit IrSearch(const Graph& graph, int target_size = -1)
        : g(graph), target(target_size) {}

    const Graph& g;
    int target;  // collection phase: exact size wanted; -1 = value phase
    int best = 0;
    std::vector<VertexSet> collected;

    struct Member {
        int vertex;
        VertexSet pn;
    };

    void run() {
        std::vector<Member> members;
        members.reserve(static_cast<std::size_t>(g.order()));
        dfs(0, members, VertexSet{});
    }

    void dfs(int next, std::vector<Member>& members, VertexSet dominated) {
        int size = static_cast<int>(members.size());
        if (target < 0) {
            best = std::max(best, size);
            if (size + (g.order() - next) <= best) return;  // cannot strictly beat
        } else {
            if (size == target) {
                VertexSet d;
                for (const Member& m : members) d.insert(m.vertex);
                collected.push_back(d);
                return;
            }
            if (size + (g.order() - next) < target) return;
        }
        if (next == g.order()) return;

        // include `next` if the extension stays irredundant
        VertexSet pn_new = g.closed_neighborhood(next) - dominated;
        if (!pn_new.empty()) {
            bool alive = true;
            std::vector<Member> extended;
            extended.reserve(members.size() + 1);
            VertexSet nbhd = g.closed_neighborhood(next);
            for (const Member& m : members) {
                VertexSet pn = m.pn - nbhd;
                if (pn.empty()) {
                    alive = false;
                    break;
                }
                extended.push_back({m.vertex, pn});
            }
            if (alive) {
                extended.push_back({next, pn_new});
                dfs(next + 1, extended, dominated | nbhd);
            }
        }
        dfs(next + 1, members, dominated);
    }
};

}  // namespace

UpperIrredundance upper_irredundance(const Graph& g) {
    IrSearch value(g);
    value.run();
    IrSearch collect(g, value.best);
    collect.run();
    std::sort(collect.collected.begin(), collect.collected.end(), CanonicalLess{});
    return {value.best, std::move(collect.collected)};
}

namespace {

// Visit k-subsets of 0..n-1 in lexicographic order until fn returns true.
bool first_combination(int n, int k, const std::function<bool(const VertexSet&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return false;
    for (;;) {
        VertexSet d;
        for (int v : idx) d.insert(v);
        if (fn(d)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

LowerIrredundance lower_irredundance(const Graph& g) {
    if (g.order() == 0) return {0, VertexSet{}};
    for (int k = 1; k <= g.order(); ++k) {
        LowerIrredundance out;
        bool found = first_combination(g.order(), k, [&](const VertexSet& d) {
            if (!is_maximal_irredundant(g, d)) return false;
            out = {k, d};
            return true;
        });
        if (found) return out;
    }
    // unreachable: greedy extension of any singleton reaches a maximal set
    throw std::logic_error("lower_irredundance: no maximal irredundant set found");
}

IrredundanceReport analyze_irredundance(const Graph& g) {
    IrredundanceReport report;
    auto upper = upper_irredundance(g);
    auto lower = lower_irredundance(g);
    report.IR = upper.IR;
    report.ir_sets = std::move(upper.sets);
    report.ir = lower.ir;
    report.ir_witness = lower.witness;
    report.info.reserve(report.ir_sets.size());
    for (const VertexSet& d : report.ir_sets) {
        IrSetInfo info;
        d.for_each([&](int v) {
            if (g.neighbors(v).intersects(d)) ++info.positive_degree_count;
            info.epn.emplace_back(v, external_private_neighbors(g, d, v));
        });
        info.independent = info.positive_degree_count == 0;
        report.info.push_back(std::move(info));
    }
    return report;
}

namespace {

void require_ir_set(const Graph& g, const VertexSet& x, const char* who) {
    if (!x.is_subset_of(g.vertices()))
        throw std::invalid_argument(std::string(who) + ": X is not a vertex subset");
    if (!is_irredundant(g, x))
        throw std::invalid_argument(std::string(who) + ": X is not irredundant");
    if (x.size() != upper_irredundance(g).IR)
        throw std::invalid_argument(std::string(who) + ": X is not of maximum size");
}

}  // namespace

VertexSet flip_set(const Graph& g, const VertexSet& x, const FlipChoice& choice) {
    require_ir_set(g, x, "flip_set");
    if (!choice.flipped.is_subset_of(x))
        throw std::invalid_argument("flip_set: Y is not a subset of X");
    VertexSet kept = x - choice.flipped;
    bool ok = true;
    kept.for_each([&](int v) {
        if (g.neighbors(v).intersects(x)) ok = false;
    });
    if (!ok)
        throw std::invalid_argument("flip_set: a vertex outside Y is not isolated in G[X]");

    VertexSet result = kept;
    choice.flipped.for_each([&](int y) {
        auto it = choice.replacement.find(y);
        if (it == choice.replacement.end())
            throw std::invalid_argument("flip_set: no replacement chosen for vertex " +
                                        std::to_string(y));
        if (!external_private_neighbors(g, x, y).contains(it->second))
            throw std::invalid_argument("flip_set: replacement " +
                                        std::to_string(it->second) +
                                        " is not an external private neighbor of " +
                                        std::to_string(y));
        result.insert(it->second);
    });
    assert(is_irredundant(g, result));
    assert(result.size() == x.size());
    return result;
}

namespace detail {

FlipSetEnumeration enumerate_flip_sets_unchecked(const Graph& g, const VertexSet& x,
                                                 int cap) {
    if (cap <= 0) throw std::invalid_argument("enumerate_flip_sets: cap must be positive");

    std::vector<int> mandatory;  // positive degree in G[X]: must be flipped
    std::vector<int> flexible;   // isolated with EPNs: either side
    std::vector<std::vector<int>> epn_of(static_cast<std::size_t>(g.order()));
    x.for_each([&](int v) {
        epn_of[static_cast<std::size_t>(v)] =
            external_private_neighbors(g, x, v).to_vector();
        if (g.neighbors(v).intersects(x)) {
            if (epn_of[static_cast<std::size_t>(v)].empty())
                throw std::invalid_argument(
                    "enumerate_flip_sets: X is not irredundant");
            mandatory.push_back(v);
        } else if (!epn_of[static_cast<std::size_t>(v)].empty()) {
            flexible.push_back(v);
        }
    });

    std::set<VertexSet, CanonicalLess> found;
    bool truncated = false;

    // One allocation = subset of `flexible` joining the flipped side.
    // Any cap fits in 31 bits, so truncation always fires well before the
    // clamped bound could matter.
    const std::uint64_t alloc_count =
        flexible.size() >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << flexible.size();
    for (std::uint64_t alloc = 0; alloc < alloc_count; ++alloc) {
        std::vector<int> flip = mandatory;
        for (std::size_t i = 0; i < flexible.size(); ++i)
            if (alloc >> i & 1) flip.push_back(flexible[i]);

        VertexSet base = x;
        for (int y : flip) base.erase(y);

        // odometer over each flipped vertex's EPN choices
        std::vector<std::size_t> pick(flip.size(), 0);
        for (;;) {
            VertexSet result = base;
            for (std::size_t i = 0; i < flip.size(); ++i)
                result.insert(
                    epn_of[static_cast<std::size_t>(flip[i])][pick[i]]);
            if (!found.contains(result)) {
                if (static_cast<int>(found.size()) == cap) {
                    truncated = true;
                    break;
                }
                found.insert(result);
            }
            std::size_t i = 0;
            while (i < flip.size()) {
                if (++pick[i] < epn_of[static_cast<std::size_t>(flip[i])].size()) break;
                pick[i++] = 0;
            }
            if (i == flip.size()) break;
        }
        if (truncated) break;
    }

    FlipSetEnumeration out;
    out.sets.assign(found.begin(), found.end());
    out.truncated = truncated;
    return out;
}

}  // namespace detail

FlipSetEnumeration enumerate_flip_sets(const Graph& g, const VertexSet& x, int cap) {
    require_ir_set(g, x, "enumerate_flip_sets");
    return detail::enumerate_flip_sets_unchecked(g, x, cap);
}

}  // namespace irgraphs
