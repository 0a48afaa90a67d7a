#include "irgraphs/graph6.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace irgraphs {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

class BitReader {
public:
    BitReader(std::string_view data, std::size_t pos) : data_(data), pos_(pos) {}

    int next_bit() {
        if (bits_left_ == 0) {
            if (pos_ >= data_.size())
                throw std::invalid_argument("graph6: truncated edge data");
            unsigned char c = static_cast<unsigned char>(data_[pos_++]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: byte out of printable range");
            cur_ = c - 63;
            bits_left_ = 6;
        }
        --bits_left_;
        return (cur_ >> bits_left_) & 1;
    }

    std::size_t pos() const { return pos_; }
    int bits_left() const { return bits_left_; }
    unsigned pending() const { return cur_ & ((1u << bits_left_) - 1u); }

private:
    std::string_view data_;
    std::size_t pos_;
    unsigned cur_ = 0;
    int bits_left_ = 0;
};

long long decode_order(std::string_view s, std::size_t& pos) {
    auto need = [&](std::size_t k) {
        if (s.size() - pos < k)
            throw std::invalid_argument("graph6: truncated order field");
    };
    auto byte = [&]() -> unsigned {
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of printable range in order field");
        return c - 63u;
    };
    need(1);
    unsigned first = byte();
    if (first < 63) return first;
    // first byte was 126
    need(1);
    if (static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        need(6);
        long long n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | byte();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 3; ++i) {
        need(1);
        n = (n << 6) | byte();
    }
    return n;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // tolerate trailing CR/LF
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    long long n = decode_order(text, pos);
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                    " exceeds the limit of " +
                                    std::to_string(Graph::kMaxVertices));

    Graph g(static_cast<int>(n));
    BitReader bits(text, pos);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.next_bit()) g.add_edge(u, v);

    if (bits.bits_left() > 0 && bits.pending() != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (bits.pos() != text.size())
        throw std::invalid_argument("graph6: trailing bytes after edge data");
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 128 fits the 18-bit form
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    unsigned cur = 0;
    int nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((cur << (6 - nbits)) + 63));
    return out;
}

}  // namespace irgraphs
