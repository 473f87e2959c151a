#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "deza/canon.hpp"
#include "deza/graph.hpp"
#include "deza/graph6.hpp"

using namespace deza;

namespace {

Graph lattice_4x2() {
    Graph g(8);
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 4; ++x)
            for (int x2 = x + 1; x2 < 4; ++x2) g.add_edge(y * 4 + x, y * 4 + x2);
    for (int x = 0; x < 4; ++x) g.add_edge(x, 4 + x);
    return g;
}

Graph rook_3x3() {
    Graph g(9);
    for (int u = 0; u < 9; ++u)
        for (int w = u + 1; w < 9; ++w)
            if (u / 3 == w / 3 || u % 3 == w % 3) g.add_edge(u, w);
    return g;
}

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (coin(rng)) g.add_edge(u, w);
    return g;
}

// Oracle: isomorphism by exhaustive permutation search.
bool iso_brute_force(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (apply_permutation(g, perm) == h) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Oracle: |Aut| by exhaustive permutation search.
long aut_brute_force(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        if (apply_permutation(g, perm) == g) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(23);
    std::vector<Graph> corpus{lattice_4x2(), rook_3x3(), cycle_graph(5), complete_graph(6),
                              complete_multipartite(3, 2)};
    for (int t = 0; t < 5; ++t) corpus.push_back(random_graph(10, rng));

    for (const Graph& g : corpus) {
        const CanonicalForm base = canonical_form(g);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(g.order()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(apply_permutation(g, perm)) == base);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(lattice_4x2()) != canonical_form(cycle_graph(8)));

    // Against the brute-force oracle on small random pairs.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + trial % 4;  // 4..7
        const Graph g = random_graph(n, rng);
        const Graph h = random_graph(n, rng);
        CHECK((canonical_form(g) == canonical_form(h)) == iso_brute_force(g, h));
    }
}

TEST_CASE("canonical labeling maps onto the canonical representative") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(9, rng);
        const CanonicalResult r = canonical_labeling(with_unit_partition(g));
        CHECK(to_graph6(apply_permutation(g, r.labeling)) == r.form.bytes);
        for (const Perm& gen : r.generators) CHECK(apply_permutation(g, gen) == g);
    }
}

TEST_CASE("colored canonical form respects the partition") {
    // Same graph, different colorings of an endpoint: forms differ.
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    ColoredGraph a{path, {{0}, {1, 2, 3}}};
    ColoredGraph b{path, {{1}, {0, 2, 3}}};
    CHECK(canonical_form(a) != canonical_form(b));
    // Color-preserving relabeling keeps the form.
    ColoredGraph c{apply_permutation(path, {3, 2, 1, 0}), {{3}, {2, 1, 0}}};
    CHECK(canonical_form(a) == canonical_form(c));
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(lattice_4x2()).order == 48);
    CHECK(aut_brute_force(lattice_4x2()) == 48);
    CHECK(automorphism_group(complete_graph(5)).order == 120);
    CHECK(automorphism_group(cycle_graph(5)).order == 10);
    CHECK(automorphism_group(rook_3x3()).order == 72);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + trial % 6;  // 3..8
        const Graph g = random_graph(n, rng);
        CHECK(automorphism_group(g).order == aut_brute_force(g));
    }
}

TEST_CASE("permutation_group_order on known groups") {
    // S4 from a transposition and a 4-cycle.
    CHECK(permutation_group_order({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4) == 24);
    // Z6 from a 6-cycle.
    CHECK(permutation_group_order({{1, 2, 3, 4, 5, 0}}, 6) == 6);
    CHECK(permutation_group_order({}, 5) == 1);
}

TEST_CASE("seidel automorphisms") {
    SUBCASE("3x3 rook has a non-identity Seidel automorphism") {
        const auto found = seidel_automorphisms(rook_3x3(), false);
        CHECK(!found.empty());
        for (const Perm& s : found) {
            CHECK(is_identity(compose(s, s)));
            CHECK(apply_permutation(rook_3x3(), s) == rook_3x3());
            for (int u = 0; u < 9; ++u)
                if (s[static_cast<std::size_t>(u)] != u)
                    CHECK_FALSE(rook_3x3().adjacent(u, s[static_cast<std::size_t>(u)]));
        }
    }
    SUBCASE("K5 admits none") {
        CHECK(seidel_automorphisms(complete_graph(5), false).empty());
    }
    SUBCASE("C4 has exactly one fixed-point-free one: the antipodal swap") {
        const auto found = seidel_automorphisms(cycle_graph(4), true);
        REQUIRE(found.size() == 1);
        CHECK(found[0] == Perm{2, 3, 0, 1});
    }
}
