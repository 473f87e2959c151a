#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

/// Symmetric association scheme: relation matrices A_0..A_d as bit rows with
/// A_0 = I, sum A_i = J, every A_i symmetric, and exact intersection numbers
/// A_i A_j = sum_k p^k_{ij} A_k. p is indexed p[i][j][k].
struct AssociationScheme {
    int n = 0;
    int d = 0;
    std::vector<std::vector<std::uint64_t>> relations;
    std::vector<std::vector<std::vector<int>>> p;
};

/// Validates axioms (i)-(iv) and fills in the intersection numbers; nullopt
/// when the relations do not form a symmetric association scheme.
std::optional<AssociationScheme> build_scheme(int n,
                                              std::vector<std::vector<std::uint64_t>> relations);

/// Union of the chosen non-identity classes as a graph.
Graph fusion_graph(const AssociationScheme& s, const std::vector<int>& classes);

}  // namespace deza
