#pragma once

// graph6 short form (n <= 62): one byte 63+n, then the upper triangle in
// column-major order ((0,1),(0,2),(1,2),(0,3),...) packed six bits per byte,
// most significant first, each byte offset by 63.

#include "safeset/graph.hpp"

#include <string>
#include <string_view>

namespace safeset {

inline constexpr int kGraph6MaxOrder = 62;

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw InputError("graph6 long form (n > 62) is not supported");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    // tolerate a trailing newline from line-oriented files
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw InputError("graph6: empty input");
    auto byte_value = [&](std::size_t pos) {
        auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw InputError("graph6: byte " + std::to_string(pos) + " (value " + std::to_string(c) + ") is outside 63..126");
        return static_cast<int>(c) - 63;
    };
    const int n = byte_value(0);
    if (n == 63) throw InputError("graph6: byte 0 announces the long form (n > 62), which is not supported");
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw InputError("graph6: expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) + ", got " +
                         std::to_string(text.size()));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int b = byte_value(1 + k / 6);
            if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = byte_value(text.size() - 1);
        if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
            throw InputError("graph6: byte " + std::to_string(text.size() - 1) + " has nonzero padding bits");
    }
    return g;
}

}  // namespace safeset
