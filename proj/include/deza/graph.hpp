#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace deza {

/// Undirected simple graph on at most 64 vertices. Each vertex stores its
/// neighbourhood as one 64-bit row, so a common-neighbour count is a single
/// AND + popcount.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::uint64_t row(int u) const { return rows_[static_cast<std::size_t>(u)]; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    bool adjacent(int u, int w) const {
        return (rows_[static_cast<std::size_t>(u)] >> w) & 1u;
    }
    void add_edge(int u, int w);
    int degree(int u) const;
    long edge_count() const;

    /// Replaces row u wholesale. The caller owns symmetry; check_invariants()
    /// verifies it. Used by the search engine and graph6 decoding.
    void set_row(int u, std::uint64_t bits) { rows_[static_cast<std::size_t>(u)] = bits; }

    /// Throws std::logic_error if the matrix is not symmetric and irreflexive.
    void check_invariants() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Deza parameter tuple (v,k,b,a) with the derived per-vertex multiplicities
/// alpha (pairs with a common neighbours) and beta (pairs with b).
struct DezaParams {
    int v = 0;
    int k = 0;
    int b = 0;
    int a = 0;
    long alpha = 0;
    long beta = 0;

    bool operator==(const DezaParams&) const = default;
};

struct SrgParams {
    int v = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    bool operator==(const SrgParams&) const = default;
};

struct NotRegular {};
struct NotDeza {};

/// classify_regular_deza result: Deza(params) means strictly-Deza-eligible
/// (two common-neighbour values not explained by adjacency alone); complete
/// and edgeless graphs are reported StronglyRegular.
using Classification = std::variant<NotRegular, NotDeza, SrgParams, DezaParams>;

/// The two graphs on the a-pairs and b-pairs of a Deza graph,
/// from M^2 = aA + bB + kI with A + B + I = J.
struct Children {
    Graph graph_a;
    Graph graph_b;
};

/// |N(u) ∩ N(w)| for distinct vertices. Throws std::invalid_argument on
/// u == w or out-of-range indices.
int common_neighbours(const Graph& g, int u, int w);

Classification classify_regular_deza(const Graph& g);

/// Splits a Deza graph (a != b) into its children and verifies
/// M^2 = aA + bB + kI entrywise. Throws std::invalid_argument when a == b,
/// std::logic_error when the identity fails.
Children children(const Graph& g, const DezaParams& p);

/// BFS eccentricity maximum; nullopt for disconnected graphs.
std::optional<int> diameter(const Graph& g);

// Common builders.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
/// x parts of y vertices each, all edges between distinct parts.
Graph complete_multipartite(int parts, int part_size);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Relabels: vertex u of g becomes vertex perm[u] of the result.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);

}  // namespace deza
