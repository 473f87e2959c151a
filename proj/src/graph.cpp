#include "deza/graph.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace deza {

namespace {

std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("Graph order must be in [1, 64]");
}

void Graph::add_edge(int u, int w) {
    if (u == w || u < 0 || w < 0 || u >= n_ || w >= n_)
        throw std::invalid_argument("add_edge: bad vertex pair");
    rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << w;
    rows_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << u;
}

int Graph::degree(int u) const {
    return std::popcount(rows_[static_cast<std::size_t>(u)]);
}

long Graph::edge_count() const {
    long total = 0;
    for (int u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

void Graph::check_invariants() const {
    const std::uint64_t mask = low_mask(n_);
    for (int u = 0; u < n_; ++u) {
        if (rows_[static_cast<std::size_t>(u)] & ~mask)
            throw std::logic_error("Graph: row bits beyond vertex count");
        if (adjacent(u, u)) throw std::logic_error("Graph: loop at vertex");
        for (int w = u + 1; w < n_; ++w)
            if (adjacent(u, w) != adjacent(w, u))
                throw std::logic_error("Graph: asymmetric adjacency");
    }
}

int common_neighbours(const Graph& g, int u, int w) {
    if (u == w || u < 0 || w < 0 || u >= g.order() || w >= g.order())
        throw std::invalid_argument("common_neighbours: need two distinct vertices in range");
    return std::popcount(g.row(u) & g.row(w));
}

Classification classify_regular_deza(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("classify_regular_deza: need at least 2 vertices");

    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k) return NotRegular{};

    if (k == 0) return SrgParams{n, 0, 0, 0};
    if (k == n - 1) return SrgParams{n, k, k - 1, 0};

    // Collect the distinct common-neighbour counts, split by adjacency.
    std::map<int, long> all_counts;
    std::map<int, long> adj_counts, nonadj_counts;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            const int c = std::popcount(g.row(u) & g.row(w));
            ++all_counts[c];
            ++(g.adjacent(u, w) ? adj_counts : nonadj_counts)[c];
        }

    if (all_counts.size() > 2) return NotDeza{};

    if (adj_counts.size() <= 1 && nonadj_counts.size() <= 1) {
        const int lambda = adj_counts.empty() ? 0 : adj_counts.begin()->first;
        const int mu = nonadj_counts.empty() ? 0 : nonadj_counts.begin()->first;
        return SrgParams{n, k, lambda, mu};
    }

    int a = all_counts.begin()->first;
    int b = all_counts.rbegin()->first;
    DezaParams p{n, k, b, a, 0, 0};
    // Per-vertex multiplicities; Prop 1.1 says they do not depend on u.
    for (int w = 1; w < n; ++w) {
        const int c = std::popcount(g.row(0) & g.row(w));
        if (c == a)
            ++p.alpha;
        else
            ++p.beta;
    }
    if (a == b) p.beta = p.alpha;
    return p;
}

Children children(const Graph& g, const DezaParams& p) {
    if (p.a == p.b)
        throw std::invalid_argument("children: undefined for a == b");
    const int n = g.order();
    Children ch{Graph(n), Graph(n)};
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            const int c = std::popcount(g.row(u) & g.row(w));
            if (c == p.b)
                ch.graph_b.add_edge(u, w);
            else if (c == p.a)
                ch.graph_a.add_edge(u, w);
            else
                throw std::logic_error("children: common-neighbour count outside {a,b}");
        }
    // Verify M^2 = aA + bB + kI entrywise.
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            const int m2 = std::popcount(g.row(u) & g.row(w));
            const int rhs = (u == w) ? p.k
                                     : p.a * ch.graph_a.adjacent(u, w) +
                                           p.b * ch.graph_b.adjacent(u, w);
            if (m2 != rhs) throw std::logic_error("children: M^2 identity failed");
        }
    return ch;
}

std::optional<int> diameter(const Graph& g) {
    const int n = g.order();
    const std::uint64_t full = low_mask(n);
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::uint64_t reached = std::uint64_t{1} << s;
        std::uint64_t frontier = reached;
        int depth = 0;
        while (reached != full) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                const int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.row(u);
            }
            next &= ~reached;
            if (next == 0) return std::nullopt;  // disconnected
            reached |= next;
            frontier = next;
            ++depth;
        }
        diam = std::max(diam, depth);
    }
    return diam;
}

Graph complete_graph(int n) {
    Graph g(n);
    const std::uint64_t mask = low_mask(n);
    for (int u = 0; u < n; ++u) g.set_row(u, mask & ~(std::uint64_t{1} << u));
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph complete_multipartite(int parts, int part_size) {
    const int n = parts * part_size;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (u / part_size != w / part_size) g.add_edge(u, w);
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    const std::uint64_t mask = low_mask(n);
    for (int u = 0; u < n; ++u)
        h.set_row(u, mask & ~g.row(u) & ~(std::uint64_t{1} << u));
    return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    Graph out(n);
    for (int u = 0; u < g.order(); ++u) out.set_row(u, g.row(u));
    for (int u = 0; u < h.order(); ++u)
        out.set_row(g.order() + u, h.row(u) << g.order());
    return out;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("apply_permutation: size mismatch");
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        std::uint64_t bits = 0;
        std::uint64_t r = g.row(u);
        while (r) {
            const int w = std::countr_zero(r);
            r &= r - 1;
            bits |= std::uint64_t{1} << perm[static_cast<std::size_t>(w)];
        }
        out.set_row(perm[static_cast<std::size_t>(u)], bits);
    }
    return out;
}

bool is_connected(const Graph& g) { return diameter(g).has_value(); }

}  // namespace deza
