#include <doctest.h>

#include "angulation/formulas.hpp"
#include "angulation/error.hpp"

using namespace angulation;

TEST_CASE("edge bound instances") {
    CHECK(edge_bound(6, 3, 3) == 12); // classical 3n - 6
    CHECK(edge_bound(6, 3, 6) == 9);  // outerplane form 2n - 3
    CHECK(edge_bound(8, 4, 6) == 11);
    CHECK(edge_bound(4, 3, 5) == 4);  // bridge-bearing exterior
    CHECK_THROWS_AS(edge_bound(6, 2, 3), Error);
    CHECK_THROWS_AS(edge_bound(6, 4, 3), Error); // h < g
}

TEST_CASE("feasibility verdicts") {
    SUBCASE("K4 parameters") {
        const FeasibilityReport r = feasibility(4, 3, 3);
        REQUIRE(r.feasible);
        CHECK(r.params->t == 2);
        CHECK(r.params->m == 6);
        CHECK(r.params->inner_faces == 3);
    }
    SUBCASE("odd budget is not divisible") {
        const FeasibilityReport r = feasibility(7, 4, 5);
        CHECK_FALSE(r.feasible);
        CHECK(*r.reason == InfeasibleReason::NotDivisible);
    }
    SUBCASE("pentagonal case") {
        const FeasibilityReport r = feasibility(14, 5, 5);
        REQUIRE(r.feasible);
        CHECK(r.params->t == 6);
        CHECK(r.params->m == 20);
        CHECK(r.params->inner_faces == 7);
    }
    SUBCASE("h out of range") {
        CHECK(*feasibility(6, 4, 3).reason == InfeasibleReason::HTooSmall);
        CHECK(*feasibility(4, 3, 5).reason == InfeasibleReason::HExceedsN);
    }
}

TEST_CASE("convex bound instances") {
    CHECK(convex_bound(5, 3) == 7); // 2n - 3
    CHECK(convex_bound(4, 4) == 4); // the 4-cycle itself
    CHECK(convex_bound(8, 4) == 10);
    CHECK_THROWS_AS(convex_bound(3, 4), Error);
}

TEST_CASE("convex counts") {
    SUBCASE("fan of a convex hexagon") {
        const AngulationParams p = convex_counts(6, 3);
        CHECK(p.t == 3);
        CHECK(p.m == 9);
        CHECK(p.inner_faces == 4);
    }
    SUBCASE("convex quadrangulation") {
        const AngulationParams p = convex_counts(8, 4);
        CHECK(p.t == 2);
        CHECK(p.m == 10);
        CHECK(p.inner_faces == 3);
    }
    SUBCASE("divisibility failure") {
        try {
            convex_counts(9, 4);
            FAIL("expected NotDivisible");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotDivisible);
        }
    }
}

TEST_CASE("triangulation counts") {
    CHECK(triangulation_counts(3, 3) == TriangulationCounts{3, 1});
    CHECK(triangulation_counts(5, 4) == TriangulationCounts{8, 4});
    CHECK(triangulation_counts(10, 3) == TriangulationCounts{24, 15});
}

TEST_CASE("closed bound instances") {
    CHECK(closed_bound(5, 3) == 9);
    CHECK(closed_bound(8, 4) == 12); // the cube attains it
    CHECK(closed_bound(12, 5) == 16); // floor(50 / 3)
}

TEST_CASE("g-angulation counts") {
    SUBCASE("K4") {
        const GAngulationCounts c = g_angulation_counts(4, 3);
        CHECK(c.t_prime == 1);
        CHECK(c.params.m == 6);
        CHECK(c.params.inner_faces == 3);
    }
    SUBCASE("cube") {
        const GAngulationCounts c = g_angulation_counts(8, 4);
        CHECK(c.t_prime == 2);
        CHECK(c.params.m == 12);
        CHECK(c.params.inner_faces == 5);
    }
    SUBCASE("pentagonal") {
        const GAngulationCounts c = g_angulation_counts(11, 5);
        CHECK(c.t_prime == 2);
        CHECK(c.params.m == 15);
        CHECK(c.params.inner_faces == 5);
    }
}

TEST_CASE("specialization identities over a parameter sweep") {
    for (int g = 3; g <= 10; ++g) {
        for (int n = g; n <= 120; ++n) {
            CHECK(edge_bound(n, g, g) == closed_bound(n, g));
            CHECK(edge_bound(n, g, n) == convex_bound(n, g));
            if (g == 3) {
                for (int h = 3; h <= n; ++h) {
                    CHECK(edge_bound(n, 3, h) == 3 * n - 3 - h);
                    CHECK(feasibility(n, 3, h).feasible); // g - 2 = 1 divides everything
                }
            }
        }
    }
}

TEST_CASE("edge bound monotonicity") {
    for (int n = 6; n <= 40; ++n) {
        for (int g = 3; g <= 8 && g <= n; ++g) {
            for (int h = g; h < n; ++h) {
                CHECK(edge_bound(n, g, h) >= edge_bound(n, g, h + 1));
            }
        }
        for (int g = 3; g <= 7 && g + 1 <= n; ++g) {
            for (int h = g + 1; h <= n; ++h) {
                CHECK(edge_bound(n, g, h) >= edge_bound(n, g + 1, h));
            }
        }
    }
}

TEST_CASE("feasible cases attain the bound exactly") {
    for (int g = 3; g <= 8; ++g) {
        for (int h = g; h <= 30; ++h) {
            for (int n = h; n <= 60; ++n) {
                const FeasibilityReport r = feasibility(n, g, h);
                if (r.feasible) {
                    CHECK(r.params->m == edge_bound(n, g, h));
                    CHECK(r.params->m == n + r.params->t);
                    CHECK(r.params->inner_faces == r.params->t + 1);
                }
            }
        }
    }
}

TEST_CASE("g-angulation t equals twice the convex-style t'") {
    for (int g = 3; g <= 8; ++g) {
        for (int tp = 0; tp <= 12; ++tp) {
            const int n = g + tp * (g - 2);
            const GAngulationCounts c = g_angulation_counts(n, g);
            CHECK(c.t_prime == tp);
            CHECK(c.params.t == 2 * tp);
            const FeasibilityReport r = feasibility(n, g, g);
            REQUIRE(r.feasible);
            CHECK(r.params->t == 2 * tp);
            CHECK(r.params->m == closed_bound(n, g));
        }
    }
}
