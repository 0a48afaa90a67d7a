#include "irgraphs/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace irgraphs {

IsomorphismLimitExceeded::IsomorphismLimitExceeded(int order_, int limit_)
    : std::runtime_error("isomorphism test refused: order " + std::to_string(order_) +
                         " exceeds the configured limit " + std::to_string(limit_)),
      order(order_),
      limit(limit_) {}

namespace {

// Iterated neighborhood-color refinement (1-dimensional Weisfeiler-Leman).
// Returns per-vertex colors; colors are comparable across the two graphs
// because both are refined by the same shared dictionary.
struct Refiner {
    std::map<std::vector<int>, int> dict;

    std::vector<int> initial(const Graph& g) {
        std::vector<int> colors(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v)
            colors[static_cast<std::size_t>(v)] = intern({g.degree(v)});
        return colors;
    }

    std::vector<int> step(const Graph& g, const std::vector<int>& colors) {
        std::vector<int> next(colors.size());
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> sig;
            sig.push_back(colors[static_cast<std::size_t>(v)]);
            std::vector<int> nb;
            g.neighbors(v).for_each(
                [&](int u) { nb.push_back(colors[static_cast<std::size_t>(u)]); });
            std::sort(nb.begin(), nb.end());
            sig.insert(sig.end(), nb.begin(), nb.end());
            next[static_cast<std::size_t>(v)] = intern(sig);
        }
        return next;
    }

    int intern(const std::vector<int>& sig) {
        auto [it, _] = dict.emplace(sig, static_cast<int>(dict.size()));
        return it->second;
    }
};

int count_classes(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<int>(all.size());
}

struct Matcher {
    const Graph& g;
    const Graph& h;
    std::vector<int> cg, ch;       // stable colors
    std::vector<int> order;        // g's vertices in assignment order
    std::vector<int> mapping;      // g vertex -> h vertex, -1 unassigned
    VertexSet used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        // candidates: same color, unused, consistent with mapped neighbors
        // and non-neighbors
        VertexSet cand;
        for (int x = 0; x < h.order(); ++x)
            if (ch[static_cast<std::size_t>(x)] == cg[static_cast<std::size_t>(v)])
                cand.insert(x);
        cand -= used;
        for (std::size_t d = 0; d < depth; ++d) {
            int u = order[d];
            int x = mapping[static_cast<std::size_t>(u)];
            if (g.has_edge(u, v))
                cand &= h.neighbors(x);
            else {
                cand -= h.neighbors(x);
                cand.erase(x);
            }
            if (cand.empty()) return false;
        }
        bool ok = false;
        cand.for_each([&](int x) {
            if (ok) return;
            mapping[static_cast<std::size_t>(v)] = x;
            used.insert(x);
            if (extend(depth + 1))
                ok = true;
            else {
                mapping[static_cast<std::size_t>(v)] = -1;
                used.erase(x);
            }
        });
        return ok;
    }
};

// Assignment order: rarest color class first, then prefer vertices adjacent
// to already-ordered ones so partial maps constrain early.
std::vector<int> assignment_order(const Graph& g, const std::vector<int>& colors) {
    int n = g.order();
    std::map<int, int> freq;
    for (int c : colors) ++freq[c];
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    VertexSet frontier;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            bool v_front = frontier.contains(v), b_front = frontier.contains(best);
            int v_freq = freq[colors[static_cast<std::size_t>(v)]];
            int b_freq = freq[colors[static_cast<std::size_t>(best)]];
            if (std::tuple(!v_front, v_freq) < std::tuple(!b_front, b_freq)) best = v;
        }
        placed[static_cast<std::size_t>(best)] = 1;
        frontier |= g.neighbors(best);
        order.push_back(best);
    }
    return order;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int max_vertices) {
    int big = std::max(g.order(), h.order());
    if (big > max_vertices) throw IsomorphismLimitExceeded(big, max_vertices);
    if (g.order() != h.order() || g.num_edges() != h.num_edges()) return std::nullopt;
    int n = g.order();
    if (n == 0) return std::vector<int>{};

    Refiner refiner;
    std::vector<int> cg = refiner.initial(g);
    std::vector<int> ch = refiner.initial(h);
    int classes = count_classes(cg, ch);
    for (;;) {
        std::vector<int> ng = refiner.step(g, cg);
        std::vector<int> nh = refiner.step(h, ch);
        int next_classes = count_classes(ng, nh);
        cg = std::move(ng);
        ch = std::move(nh);
        if (next_classes == classes) break;
        classes = next_classes;
    }
    // color histograms must match
    auto histogram = [](std::vector<int> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    if (histogram(cg) != histogram(ch)) return std::nullopt;

    std::vector<int> order = assignment_order(g, cg);
    Matcher m{g,
              h,
              std::move(cg),
              std::move(ch),
              std::move(order),
              std::vector<int>(static_cast<std::size_t>(n), -1),
              VertexSet{}};
    if (!m.extend(0)) return std::nullopt;
    return m.mapping;
}

bool are_isomorphic(const Graph& g, const Graph& h, int max_vertices) {
    return find_isomorphism(g, h, max_vertices).has_value();
}

}  // namespace irgraphs
