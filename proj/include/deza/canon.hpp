#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deza/graph.hpp"

namespace deza {

/// Permutation as an image table: p[u] is where u goes.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_identity(const Perm& p);
/// (f after g): compose(f,g)[x] = f[g[x]].
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& f);

/// Graph plus an ordered partition of its vertices into color classes.
struct ColoredGraph {
    Graph graph;
    std::vector<std::vector<int>> colors;
};

ColoredGraph with_unit_partition(const Graph& g);

/// Canonical bytes: the graph6 string of the canonically relabeled graph.
/// Equal bytes are equivalent to color-preserving isomorphism (for inputs
/// with identical color class sizes).
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
    CanonicalForm form;
    Perm labeling;                 // vertex -> canonical position
    std::vector<Perm> generators;  // color-preserving automorphisms found en route
};

/// Individualization-refinement canonical labeling respecting the color
/// partition, with orbit pruning from discovered automorphisms.
CanonicalResult canonical_labeling(const ColoredGraph& g);
CanonicalForm canonical_form(const ColoredGraph& g);
CanonicalForm canonical_form(const Graph& g);

struct AutomorphismGroup {
    std::vector<Perm> generators;
    boost::multiprecision::cpp_int order;
};

/// Generators and exact order of Aut(g).
AutomorphismGroup automorphism_group(const Graph& g);

/// Exact order of the group generated by gens on n points (Schreier-Sims).
boost::multiprecision::cpp_int permutation_group_order(const std::vector<Perm>& gens, int n);

/// All non-identity automorphisms sigma of order 2 with u ~ sigma(u) for no
/// u; with fixed_point_free set, additionally sigma(u) != u everywhere.
/// max_results = 0 means unbounded.
std::vector<Perm> seidel_automorphisms(const Graph& g, bool fixed_point_free,
                                       std::size_t max_results = 0);

/// Every element of <gens>; throws std::length_error past `limit`.
std::vector<Perm> group_elements(const std::vector<Perm>& gens, int n, std::size_t limit);

}  // namespace deza
