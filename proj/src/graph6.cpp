#include "deza/graph6.hpp"

#include <stdexcept>

namespace deza {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    std::size_t pos = 0;
    int n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: order beyond supported range");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 1 || n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6: order out of range [1, 64]");

    Graph g(n);
    const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    const std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (s.size() - pos < bytes_needed)
        throw std::invalid_argument("graph6: truncated adjacency data");

    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const char c = s[pos + static_cast<std::size_t>(bit / 6)];
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

}  // namespace deza
