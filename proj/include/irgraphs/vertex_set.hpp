#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace irgraphs {

/// Set of vertex indices 0..127, stored as two machine words.
/// Value type; all operations are pure except insert/erase.
class VertexSet {
public:
    static constexpr int kMaxVertices = 128;

    constexpr VertexSet() = default;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}.
    static VertexSet first_n(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    void insert(int v) { w_[word(v)] |= bit(v); }
    void erase(int v) { w_[word(v)] &= ~bit(v); }
    bool contains(int v) const { return (w_[word(v)] & bit(v)) != 0; }

    int size() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    VertexSet& operator|=(const VertexSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        w_[0] ^= o.w_[0];
        w_[1] ^= o.w_[1];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        w_[0] &= ~o.w_[0];
        w_[1] &= ~o.w_[1];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    bool intersects(const VertexSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }
    bool is_subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    /// Smallest member, or -1 if empty.
    int front() const {
        if (w_[0] != 0) return std::countr_zero(w_[0]);
        if (w_[1] != 0) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    int next_after(int v) const {
        VertexSet rest = *this;
        rest.w_[0] &= mask_above(v, 0);
        rest.w_[1] &= mask_above(v, 1);
        return rest.front();
    }

    /// True iff some member is strictly greater than v.
    bool has_member_above(int v) const { return next_after(v) >= 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (int wi = 0; wi < 2; ++wi) {
            std::uint64_t w = w_[static_cast<std::size_t>(wi)];
            while (w != 0) {
                int b = std::countr_zero(w);
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::uint64_t word0() const { return w_[0]; }
    std::uint64_t word1() const { return w_[1]; }

    /// Lexicographic order on the ascending vertex lists, e.g. {0,3} < {1,2}.
    /// Agrees with comparing to_vector() results lexicographically.
    friend bool canonical_less(const VertexSet& a, const VertexSet& b) {
        if (a == b) return false;
        VertexSet diff = a ^ b;
        int v = diff.front();
        if (a.contains(v)) return b.has_member_above(v);
        return !a.has_member_above(v);
    }

private:
    static constexpr std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
    static constexpr std::uint64_t bit(int v) {
        return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u);
    }
    // Bits for vertices > v within word wi.
    static std::uint64_t mask_above(int v, int wi) {
        int lo = wi * 64;
        if (v < lo) return ~std::uint64_t{0};
        if (v >= lo + 63) return 0;
        return ~std::uint64_t{0} << (v - lo + 1);
    }

    std::array<std::uint64_t, 2> w_{};
};

struct CanonicalLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const {
        return canonical_less(a, b);
    }
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = s.word0() * 0x9e3779b97f4a7c15ull;
        h ^= s.word1() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace irgraphs
