#include <set>
#include <string>

#include "doctest.h"
#include "deza/feasibility.hpp"
#include "deza/graph6.hpp"
#include "deza/search.hpp"

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

DezaParams params_for(int v, int k, int b, int a) {
    const auto m = multiplicities(v, k, b, a);
    REQUIRE(m.has_value());
    return DezaParams{v, k, b, a, m->alpha, m->beta};
}

std::set<std::string> canon_set(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs) out.insert(canonical_form(g).bytes);
    return out;
}

}  // namespace

TEST_CASE("seed_prefix case analysis") {
    SUBCASE("(8,4,2,0): alpha=1 < k, Case 1 blocks 2|1|1|2") {
        const auto pm = seed_prefix(params_for(8, 4, 2, 0));
        REQUIRE(pm.has_value());
        CHECK(pm->filled == 2);
        CHECK(pm->blocks == std::vector<std::pair<int, int>>{{2, 2}, {4, 1}, {5, 1}, {6, 2}});
        CHECK(pm->rows[0] == 0b00011110ULL);  // vertex 1, common block, own block
        CHECK(pm->rows[1] == 0b00101101ULL);  // vertex 0, common block, own block
    }
    SUBCASE("(9,4,2,1): alpha = k, Case 2 uses the Case 1 layout") {
        const auto pm = seed_prefix(params_for(9, 4, 2, 1));
        REQUIRE(pm.has_value());
        CHECK(pm->rows[0] & 2);  // adjacent seed pair
        CHECK(pm->blocks == std::vector<std::pair<int, int>>{{2, 2}, {4, 1}, {5, 1}, {6, 3}});
    }
    SUBCASE("(20,10,6,4): alpha = 12 > k, Case 3") {
        const DezaParams p = params_for(20, 10, 6, 4);
        CHECK(p.alpha == 12);
        const auto pm = seed_prefix(p);
        REQUIRE(pm.has_value());
        CHECK_FALSE(pm->rows[0] & 2);  // non-adjacent seed pair
        CHECK(pm->blocks ==
              std::vector<std::pair<int, int>>{{2, 4}, {6, 6}, {12, 6}, {18, 2}});
    }
    SUBCASE("negative block width prunes") {
        DezaParams ok{5, 3, 1, 0, 2, 2};  // v-2k+b = 0, all widths legal
        CHECK(seed_prefix(ok).has_value());
        DezaParams bad{5, 3, 0, 0, 2, 2};  // v-2k+b = -1
        CHECK_FALSE(seed_prefix(bad).has_value());
    }
}

TEST_CASE("extend_row_blockwise on (8,4,2,0)") {
    const auto pm = seed_prefix(params_for(8, 4, 2, 0));
    REQUIRE(pm.has_value());
    const auto pruned = extend_row_blockwise(*pm, true);
    const auto raw = extend_row_blockwise(*pm, false);
    CHECK(!pruned.empty());
    CHECK(pruned.size() <= raw.size());
    // Packed placement yields no two equivalent survivors.
    for (std::size_t i = 0; i < pruned.size(); ++i)
        for (std::size_t j = i + 1; j < pruned.size(); ++j)
            CHECK_FALSE(partial_equivalent(pruned[i], pruned[j]));
    // Every raw candidate is equivalent to some survivor.
    for (const auto& cand : raw) {
        bool matched = false;
        for (const auto& kept : pruned)
            if (partial_equivalent(cand, kept)) matched = true;
        CHECK(matched);
    }
    for (const auto& child : pruned) {
        CHECK(child.filled == 3);
        CHECK(std::popcount(child.rows[2]) == 4);
    }
}

TEST_CASE("partial_equivalent sanity") {
    const auto pm = seed_prefix(params_for(9, 4, 2, 1));
    REQUIRE(pm.has_value());
    CHECK(partial_equivalent(*pm, *pm));
    const auto other = seed_prefix(params_for(8, 4, 2, 0));
    REQUIRE(other.has_value());
    CHECK_THROWS_AS((void)partial_equivalent(*pm, *other), std::invalid_argument);
}

TEST_CASE("enumerate_tuple reproduces known counts") {
    SUBCASE("(8,4,2,0) -> exactly the 4x2 lattice") {
        const TupleResult r = enumerate_tuple(params_for(8, 4, 2, 0));
        REQUIRE(r.graphs.size() == 1);
        CHECK(canonical_form(r.graphs[0]) == canonical_form(lattice_4x2()));
        CHECK(r.stats.complete);
    }
    SUBCASE("(9,4,2,1) -> 2 graphs") {
        const TupleResult r = enumerate_tuple(params_for(9, 4, 2, 1));
        CHECK(r.graphs.size() == 2);
    }
}

TEST_CASE("enumerate_all small orders match the published counts") {
    CHECK(enumerate_all(8).graphs.size() == 3);
    CHECK(enumerate_all(9).graphs.size() == 2);
    CHECK(enumerate_all(10).graphs.size() == 1);
    CHECK(enumerate_all(11).graphs.size() == 0);
    CHECK(enumerate_all(12).graphs.size() == 6);
}

TEST_CASE("every enumerated graph is strictly Deza with the right parameters") {
    const EnumerationResult r = enumerate_all(12);
    std::set<std::string> canon;
    for (const Graph& g : r.graphs) {
        const Classification c = classify_regular_deza(g);
        REQUIRE(std::holds_alternative<DezaParams>(c));
        CHECK(diameter(g) == 2);
        CHECK(canon.insert(canonical_form(g).bytes).second);  // pairwise distinct
    }
}

TEST_CASE("pruning soundness: pruned and unpruned enumerations agree") {
    for (int v = 8; v <= 10; ++v) {
        for (const DezaParams& p : feasible_params(v)) {
            SearchOptions with, without;
            without.prune_equivalent = false;
            const auto a = enumerate_tuple(p, with);
            const auto b = enumerate_tuple(p, without);
            CHECK(canon_set(a.graphs) == canon_set(b.graphs));
        }
    }
}

TEST_CASE("determinism across worker counts") {
    SearchOptions seq, par;
    par.jobs = 4;
    const auto a = enumerate_all(9, seq);
    const auto b = enumerate_all(9, par);
    REQUIRE(a.graphs.size() == b.graphs.size());
    for (std::size_t i = 0; i < a.graphs.size(); ++i)
        CHECK(to_graph6(a.graphs[i]) == to_graph6(b.graphs[i]));
}

TEST_CASE("enumerate_srg known small cases") {
    SUBCASE("(5,2,0,1) -> pentagon") {
        const auto srgs = enumerate_srg(5, 2, 0, 1);
        REQUIRE(srgs.size() == 1);
        CHECK(canonical_form(srgs[0]) == canonical_form(cycle_graph(5)));
    }
    SUBCASE("(9,4,1,2) -> 3x3 rook") {
        const auto srgs = enumerate_srg(9, 4, 1, 2);
        REQUIRE(srgs.size() == 1);
        CHECK(canonical_form(srgs[0]) == canonical_form(rook_3x3()));
    }
    SUBCASE("(16,6,2,2) -> Shrikhande and 4x4 rook") {
        const auto srgs = enumerate_srg(16, 6, 2, 2);
        REQUIRE(srgs.size() == 2);
        CHECK(canonical_form(srgs[0]) != canonical_form(srgs[1]));
        for (const Graph& g : srgs) {
            const auto c = classify_regular_deza(g);
            const auto* s = std::get_if<SrgParams>(&c);
            REQUIRE(s != nullptr);
            CHECK(s->lambda == 2);
            CHECK(s->mu == 2);
        }
    }
    SUBCASE("(10,3,0,1) -> Petersen") {
        CHECK(enumerate_srg(10, 3, 0, 1).size() == 1);
    }
}

TEST_CASE("srg_feasible screens obvious non-parameters") {
    CHECK(srg_feasible(9, 4, 1, 2));
    CHECK(srg_feasible(16, 6, 2, 2));
    CHECK(srg_feasible(5, 2, 0, 1));       // conference, 5 = 4 + 1
    CHECK_FALSE(srg_feasible(21, 10, 4, 5));  // conference, 21 not a sum of two squares
    CHECK_FALSE(srg_feasible(9, 4, 1, 3));    // counting identity fails
    CHECK_FALSE(srg_feasible(11, 5, 2, 2));   // vk odd... 55 odd
}

TEST_CASE("budget produces an explicit incompleteness marker") {
    SearchOptions opt;
    opt.max_nodes = 5;
    const TupleResult r = enumerate_tuple(params_for(12, 6, 3, 2), opt);
    CHECK_FALSE(r.stats.complete);
}
