#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "irgraphs/graph.hpp"

namespace irgraphs {

namespace family {

struct Complete {
    int n;
};
struct Path {
    int n;
};
struct Cycle {
    int n;
};
struct Star {
    int leaves;
};
struct DoubleStar {
    int left_leaves, right_leaves;
};
struct Spider {
    std::vector<int> legs;
};
struct DoubleSpider {
    std::vector<int> left_legs, right_legs;
};
struct Hypercube {
    int dim;
};
struct DisjointUnion;
struct CartesianProduct;

using Spec = std::variant<Complete, Path, Cycle, Star, DoubleStar, Spider,
                          DoubleSpider, Hypercube, DisjointUnion, CartesianProduct>;

struct DisjointUnion {
    std::vector<Spec> parts;
};
struct CartesianProduct {
    std::vector<Spec> factors;
};

}  // namespace family

using FamilySpec = family::Spec;

/// Build the named graph with the documented deterministic numbering:
/// centers first, then legs in spec order, each leg outward from its center.
/// Throws std::invalid_argument on out-of-range parameters.
Graph build_family(const FamilySpec& spec);

/// Parse the CLI family grammar, e.g. "path4", "k5", "doublestar:2,2",
/// "doublespider:1,1;1,2", "2k2" (two disjoint copies), "k2*k2" (Cartesian
/// product), "k3+p2" (disjoint union), with parentheses for grouping.
FamilySpec parse_family_spec(std::string_view text);

/// parse_family_spec + build_family.
Graph build_family(std::string_view text);

}  // namespace irgraphs
