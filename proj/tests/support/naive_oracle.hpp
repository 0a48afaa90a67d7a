#pragma once

#include <vector>

#include "irgraphs/graph.hpp"

// All-subsets reference implementations. Everything here recomputes private
// neighborhoods from raw adjacency so the results stay independent of the
// irredundance module's code paths.
namespace naive {

using irgraphs::Graph;
using irgraphs::VertexSet;

bool is_irredundant(const Graph& g, const VertexSet& d);
bool is_maximal_irredundant(const Graph& g, const VertexSet& d);
bool is_dominating(const Graph& g, const VertexSet& d);
bool is_minimal_dominating(const Graph& g, const VertexSet& d);
bool is_independent(const Graph& g, const VertexSet& d);

struct Upper {
    int IR = 0;
    std::vector<VertexSet> sets;  // canonical order
};
Upper upper_irredundance(const Graph& g);

struct Lower {
    int ir = 0;
    VertexSet witness;
};
Lower lower_irredundance(const Graph& g);

int independence_number(const Graph& g);

/// Every subset of 0..n-1, ascending by bitmask. Requires n <= 24.
std::vector<VertexSet> all_subsets(int n);

}  // namespace naive
