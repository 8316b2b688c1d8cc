#include "glspec/graph6.hpp"

#include <stdexcept>

namespace glspec {

namespace {
[[noreturn]] void fail(const std::string& what, size_t offset) {
    throw std::invalid_argument("graph6: " + what + " at byte " + std::to_string(offset));
}
}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    size_t base = 0;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) {
        s = s.substr(header.size());
        base = header.size();
    }
    if (s.empty()) fail("empty input", base);
    if (s[0] == '~') fail("orders above 62 unsupported", base);
    int c0 = static_cast<unsigned char>(s[0]);
    if (c0 < 63 || c0 > 126) fail("invalid order byte", base);
    int n = c0 - 63;
    size_t bits_needed = static_cast<size_t>(n) * (n - 1) / 2;
    size_t bytes_needed = (bits_needed + 5) / 6;
    if (s.size() - 1 < bytes_needed) fail("input truncated", base + s.size());
    if (s.size() - 1 > bytes_needed) fail("trailing data", base + 1 + bytes_needed);

    std::vector<Edge> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            size_t byte_idx = 1 + bit / 6;
            int c = static_cast<unsigned char>(s[byte_idx]);
            if (c < 63 || c > 126) fail("invalid data byte", base + byte_idx);
            if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    // padding bits beyond the triangle must be zero
    for (; bit < bytes_needed * 6; ++bit) {
        size_t byte_idx = 1 + bit / 6;
        int c = static_cast<unsigned char>(s[byte_idx]);
        if (c < 63 || c > 126) fail("invalid data byte", base + byte_idx);
        if ((c - 63) >> (5 - bit % 6) & 1) fail("nonzero padding bits", base + byte_idx);
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: orders above 62 unsupported");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace glspec
