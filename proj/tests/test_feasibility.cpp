#include <set>
#include <tuple>

#include "doctest.h"
#include "deza/feasibility.hpp"

using namespace deza;

TEST_CASE("multiplicities formulas") {
    SUBCASE("(8,4,2,0) -> (1,6)") {
        const auto m = multiplicities(8, 4, 2, 0);
        REQUIRE(m.has_value());
        CHECK(m->alpha == 1);
        CHECK(m->beta == 6);
    }
    SUBCASE("(9,4,2,1) -> (4,4)") {
        const auto m = multiplicities(9, 4, 2, 1);
        REQUIRE(m.has_value());
        CHECK(m->alpha == 4);
        CHECK(m->beta == 4);
    }
    SUBCASE("a = b = 0 with k >= 2 is not integral") {
        CHECK_FALSE(multiplicities(8, 3, 0, 0).has_value());
    }
    SUBCASE("non-integral quotient rejected") {
        CHECK_FALSE(multiplicities(10, 5, 3, 1).has_value());  // (27-20)/2
    }
    SUBCASE("negative beta rejected") {
        CHECK_FALSE(multiplicities(9, 2, 2, 1).has_value());  // k(k-1) < a(v-1)
    }
}

TEST_CASE("feasible_params counts and self-consistency") {
    // Published feasible-parameter count for v = 8 is 14.
    CHECK(feasible_params(8).size() == 14);
    CHECK(feasible_params(9).size() == 10);
    CHECK(feasible_params(10).size() == 24);

    for (int v = 8; v <= 21; ++v) {
        const auto tuples = feasible_params(v);
        std::set<std::tuple<int, int, int>> seen;
        std::tuple<int, int, int> prev{-1, -1, -1};
        for (const DezaParams& p : tuples) {
            // alpha + beta = v - 1 whenever a != b.
            CHECK(p.alpha + p.beta == v - 1);
            CHECK(p.alpha >= 1);
            CHECK(p.beta >= 1);
            CHECK(p.a < p.b);
            CHECK(p.b <= p.k);
            CHECK((static_cast<long>(v) * p.k) % 2 == 0);
            // Tuple re-passes multiplicities with the same values.
            const auto m = multiplicities(p.v, p.k, p.b, p.a);
            REQUIRE(m.has_value());
            CHECK(m->alpha == p.alpha);
            CHECK(m->beta == p.beta);
            // Deterministic, duplicate-free, lexicographic.
            std::tuple<int, int, int> key{p.k, p.b, p.a};
            CHECK(seen.insert(key).second);
            CHECK(prev < key);
            prev = key;
        }
        CHECK(feasible_params(v) == tuples);
    }
}

TEST_CASE("relaxed mode widens the filter") {
    for (int v : {9, 11, 13}) {
        CHECK(feasible_params(v, ParamFilter::Relaxed).size() >=
              feasible_params(v, ParamFilter::Strict).size());
    }
    // Odd v, odd k tuples appear only in relaxed mode.
    bool found_odd = false;
    for (const DezaParams& p : feasible_params(9, ParamFilter::Relaxed))
        if (p.k % 2 == 1) found_odd = true;
    CHECK(found_odd);
}
