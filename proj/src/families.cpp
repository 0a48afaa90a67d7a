#include "irgraphs/families.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace irgraphs {

namespace {

using namespace family;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("family: " + what);
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int leaves) {
    require(leaves >= 1, "star needs at least 1 leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Attach a path of `len` new vertices to `root`; `next` is the first free
// index. Returns the index one past the leg.
int grow_leg(Graph& g, int root, int len, int next) {
    int prev = root;
    for (int i = 0; i < len; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    return next;
}

Graph spider(const std::vector<int>& legs) {
    require(legs.size() >= 2, "spider needs at least 2 legs");
    for (int l : legs) require(l >= 1, "spider legs must have length >= 1");
    int n = 1 + std::accumulate(legs.begin(), legs.end(), 0);
    require(n <= Graph::kMaxVertices, "spider exceeds the vertex limit");
    Graph g(n);
    int next = 1;
    for (int l : legs) next = grow_leg(g, 0, l, next);
    return g;
}

Graph double_star(int k, int m) {
    require(k >= 1 && m >= 1, "double star needs at least 1 leaf per center");
    Graph g(k + m + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < k; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < m; ++i) g.add_edge(1, 2 + k + i);
    return g;
}

Graph double_spider(const std::vector<int>& left, const std::vector<int>& right) {
    require(!left.empty() && !right.empty(), "double spider needs legs on both centers");
    for (int l : left) require(l >= 1, "double spider legs must have length >= 1");
    for (int l : right) require(l >= 1, "double spider legs must have length >= 1");
    int n = 2 + std::accumulate(left.begin(), left.end(), 0) +
            std::accumulate(right.begin(), right.end(), 0);
    require(n <= Graph::kMaxVertices, "double spider exceeds the vertex limit");
    Graph g(n);
    g.add_edge(0, 1);
    int next = 2;
    for (int l : left) next = grow_leg(g, 0, l, next);
    for (int l : right) next = grow_leg(g, 1, l, next);
    return g;
}

Graph hypercube(int dim) {
    require(dim >= 0 && dim <= 7, "hypercube dimension must be in 0..7");
    int n = 1 << dim;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b) {
            int v = u ^ (1 << b);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

struct Builder {
    Graph operator()(const Complete& s) const {
        require(s.n >= 0, "complete graph order must be >= 0");
        return complete(s.n);
    }
    Graph operator()(const Path& s) const {
        require(s.n >= 0, "path order must be >= 0");
        return path(s.n);
    }
    Graph operator()(const Cycle& s) const { return cycle(s.n); }
    Graph operator()(const Star& s) const { return star(s.leaves); }
    Graph operator()(const DoubleStar& s) const {
        return double_star(s.left_leaves, s.right_leaves);
    }
    Graph operator()(const Spider& s) const { return spider(s.legs); }
    Graph operator()(const DoubleSpider& s) const {
        return double_spider(s.left_legs, s.right_legs);
    }
    Graph operator()(const Hypercube& s) const { return hypercube(s.dim); }
    Graph operator()(const DisjointUnion& s) const {
        Graph acc(0);
        for (const auto& part : s.parts) acc = disjoint_union(acc, build_family(part));
        return acc;
    }
    Graph operator()(const CartesianProduct& s) const {
        require(!s.factors.empty(), "empty cartesian product");
        Graph acc = build_family(s.factors.front());
        for (std::size_t i = 1; i < s.factors.size(); ++i)
            acc = cartesian_product(acc, build_family(s.factors[i]));
        return acc;
    }
};

// ---- spec-string grammar ----
//
//   spec   := term ('+' term)*            disjoint union
//   term   := atom ('*' atom)*            Cartesian product
//   atom   := <count> atom                count disjoint copies
//           | '(' spec ')'
//           | name <digits>               one inline parameter: path4, k5, q3
//           | name ':' args               general form
//   args   := int (',' int)* (';' int (',' int)*)?
//
// Names: complete|k, path|p, cycle|c, star, doublestar, spider,
// doublespider, hypercube|q.

class SpecParser {
public:
    explicit SpecParser(std::string_view s) : s_(s) {}

    FamilySpec parse() {
        FamilySpec spec = parse_union();
        skip_ws();
        require(pos_ == s_.size(), "unexpected trailing input in '" + std::string(s_) + "'");
        return spec;
    }

private:
    FamilySpec parse_union() {
        std::vector<FamilySpec> parts;
        parts.push_back(parse_product());
        while (peek() == '+') {
            ++pos_;
            parts.push_back(parse_product());
        }
        if (parts.size() == 1) return parts.front();
        return DisjointUnion{std::move(parts)};
    }

    FamilySpec parse_product() {
        std::vector<FamilySpec> factors;
        factors.push_back(parse_atom());
        while (peek() == '*') {
            ++pos_;
            factors.push_back(parse_atom());
        }
        if (factors.size() == 1) return factors.front();
        return CartesianProduct{std::move(factors)};
    }

    FamilySpec parse_atom() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            FamilySpec inner = parse_union();
            skip_ws();
            require(peek() == ')', "missing ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(peek())) {
            int count = parse_int();
            require(count >= 1, "copy count must be >= 1");
            FamilySpec inner = parse_atom();
            if (count == 1) return inner;
            return DisjointUnion{std::vector<FamilySpec>(
                static_cast<std::size_t>(count), inner)};
        }
        std::string name = parse_name();
        std::vector<int> a, b;
        bool two_groups = false;
        if (peek() == ':') {
            ++pos_;
            a = parse_int_list();
            if (peek() == ';') {
                ++pos_;
                two_groups = true;
                b = parse_int_list();
            }
        } else if (std::isdigit(peek())) {
            a.push_back(parse_int());
        }
        return make_named(name, a, b, two_groups);
    }

    static FamilySpec make_named(const std::string& name, const std::vector<int>& a,
                                 const std::vector<int>& b, bool two_groups) {
        auto one_arg = [&](const char* what) {
            require(a.size() == 1 && !two_groups,
                    std::string(what) + " takes exactly one parameter");
            return a.front();
        };
        if (name == "k" || name == "complete") return Complete{one_arg("complete")};
        if (name == "p" || name == "path") return Path{one_arg("path")};
        if (name == "c" || name == "cycle") return Cycle{one_arg("cycle")};
        if (name == "q" || name == "hypercube") return Hypercube{one_arg("hypercube")};
        if (name == "star") return Star{one_arg("star")};
        if (name == "doublestar") {
            require(a.size() == 2 && !two_groups, "doublestar takes two parameters");
            return DoubleStar{a[0], a[1]};
        }
        if (name == "spider") {
            require(!two_groups, "spider takes one leg list");
            return Spider{a};
        }
        if (name == "doublespider") {
            require(two_groups, "doublespider takes two ';'-separated leg lists");
            return DoubleSpider{a, b};
        }
        throw std::invalid_argument("family: unknown family name '" + name + "'");
    }

    std::vector<int> parse_int_list() {
        std::vector<int> out;
        out.push_back(parse_int());
        while (peek() == ',') {
            ++pos_;
            out.push_back(parse_int());
        }
        return out;
    }

    int parse_int() {
        skip_ws();
        require(pos_ < s_.size() && std::isdigit(peek()), "expected a number");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(peek())) {
            v = v * 10 + (s_[pos_++] - '0');
            require(v <= Graph::kMaxVertices, "parameter too large");
        }
        return static_cast<int>(v);
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(peek())) ++pos_;
        require(pos_ > start, "expected a family name");
        std::string name(s_.substr(start, pos_ - start));
        for (char& c : name) c = static_cast<char>(std::tolower(c));
        return name;
    }

    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : 0;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph build_family(const FamilySpec& spec) {
    return std::visit(Builder{}, spec);
}

FamilySpec parse_family_spec(std::string_view text) {
    return SpecParser(text).parse();
}

Graph build_family(std::string_view text) {
    return build_family(parse_family_spec(text));
}

}  // namespace irgraphs
