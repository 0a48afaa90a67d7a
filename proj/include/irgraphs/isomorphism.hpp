#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "irgraphs/graph.hpp"

namespace irgraphs {

/// Raised instead of ever guessing: exact matching only runs below the cap.
struct IsomorphismLimitExceeded : std::runtime_error {
    IsomorphismLimitExceeded(int order, int limit);
    int order;
    int limit;
};

inline constexpr int kDefaultIsomorphismLimit = 32;

/// Edge-preserving bijection from g to h, found by neighborhood-color
/// refinement plus backtracking; std::nullopt when none exists.
/// Throws IsomorphismLimitExceeded when either graph is larger than
/// max_vertices.
std::optional<std::vector<int>> find_isomorphism(
    const Graph& g, const Graph& h, int max_vertices = kDefaultIsomorphismLimit);

bool are_isomorphic(const Graph& g, const Graph& h,
                    int max_vertices = kDefaultIsomorphismLimit);

}  // namespace irgraphs
