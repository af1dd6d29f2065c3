#include <doctest.h>

#include <random>
#include <set>

#include "angulation/formulas.hpp"
#include "angulation/oracle.hpp"
#include "angulation/plane_graph.hpp"

using namespace angulation;

namespace {

const PointSet& convex_quad() {
    static const PointSet ps({{0, 0}, {10, 1}, {11, 9}, {1, 10}});
    return ps;
}

PointSet seeded_general_position(unsigned seed, int n) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-40, 40);
    while (true) {
        std::vector<Point> pts;
        std::set<std::pair<std::int64_t, std::int64_t>> used;
        while (static_cast<int>(pts.size()) < n) {
            const Point p{coord(rng), coord(rng)};
            if (used.insert({p.x, p.y}).second) pts.push_back(p);
        }
        PointSet ps(pts);
        if (!find_collinear_triple(ps)) return ps;
    }
}

} // namespace

TEST_CASE("four convex points, girth 3, exterior 4: quadrilateral plus a diagonal") {
    const ExtremalReport r = enumerate_extremal(convex_quad(), 3, 4);
    CHECK(r.max_edges_found == 5);
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == 5);
    CHECK(r.attained);
    CHECK(r.witness.size() == 5);
    CHECK(r.all_extremal_are_angulations);
}

TEST_CASE("four convex points, girth 4: only the 4-cycle") {
    const ExtremalReport r = enumerate_extremal(convex_quad(), 4, 4);
    CHECK(r.max_edges_found == 4);
    CHECK(*r.bound == 4);
    CHECK(r.attained);
    CHECK(r.all_extremal_are_angulations);
}

TEST_CASE("square plus center, girth 3, exterior 4: triangulations win") {
    const PointSet ps({{0, 0}, {8, 1}, {9, 9}, {1, 8}, {4, 3}});
    const ExtremalReport r = enumerate_extremal(ps, 3, 4);
    CHECK(r.max_edges_found == 8); // 3n - 3 - h
    CHECK(*r.bound == 8);
    CHECK(r.attained);
    CHECK(r.all_extremal_are_angulations);
}

TEST_CASE("bridge-bearing exterior on four convex points") {
    // Triangle on three hull corners plus one pendant: exterior walk 5.
    const ExtremalReport r = enumerate_extremal(convex_quad(), 3, 5);
    CHECK(r.max_edges_found == 4);
    CHECK(*r.bound == 4); // edge_bound(4, 3, 5)
    CHECK(r.attained);
}

TEST_CASE("unrealizable exterior degree raises NoGraph") {
    try {
        enumerate_extremal(convex_quad(), 3, 3); // all four hull corners stay exterior
        FAIL("expected NoGraph");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoGraph);
    }
}

TEST_CASE("parameter validation of the search") {
    CHECK_THROWS_AS(enumerate_extremal(convex_quad(), 2, 4), Error);
    CHECK_THROWS_AS(enumerate_extremal(convex_quad(), 3, 2), Error);
    // collinear points are refused up front
    CHECK_THROWS_AS(enumerate_extremal(PointSet({{0, 0}, {2, 2}, {4, 4}, {0, 5}}), 3, 4), Error);
}

TEST_CASE("the search guard rejects large point sets") {
    const PointSet ps = seeded_general_position(4242, 10);
    try {
        enumerate_extremal(ps, 3, 4);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("certify a triangle: one cell") {
    const PointSet ps({{0, 0}, {6, 0}, {3, 5}});
    const std::vector<ExtremalReport> reports = certify_bound(ps, 3);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].h == 3);
    CHECK(reports[0].max_edges_found == 3);
    CHECK(*reports[0].bound == 3);
    CHECK(reports[0].attained);
}

TEST_CASE("certify four convex points at girth 3") {
    const std::vector<ExtremalReport> reports = certify_bound(convex_quad(), 3);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].h == 4);
    CHECK(reports[0].max_edges_found == 5);
    CHECK(reports[1].h == 5);
    CHECK(reports[1].max_edges_found == 4);
    for (const auto& r : reports) {
        REQUIRE(r.bound.has_value());
        CHECK(r.max_edges_found <= *r.bound);
    }
}

TEST_CASE("certification on a seeded 7-point set at girth 4") {
    const PointSet ps = seeded_general_position(777, 7);
    for (const ExtremalReport& r : certify_bound(ps, 4)) {
        REQUIRE(r.bound.has_value());
        CHECK(r.max_edges_found <= *r.bound);
        // Witnesses re-validate inside the oracle; spot-check the graph here.
        const PlaneGraph check = build_geometric(ps, r.witness);
        CHECK(face_census(check).exterior_degree == r.h);
        const auto gi = girth(check);
        REQUIRE(gi.has_value());
        CHECK(*gi >= 4);
    }
}

TEST_CASE("slow mode reproduces fast-mode reports bit for bit") {
    const PointSet ps = seeded_general_position(31337, 6);
    for (int g = 3; g <= 4; ++g) {
        for (const ExtremalReport& fast : certify_bound(ps, g)) {
            const ExtremalReport slow = enumerate_extremal(ps, g, fast.h, /*slow=*/true);
            const ExtremalReport quick = enumerate_extremal(ps, g, fast.h, /*slow=*/false);
            CHECK(slow == quick);
            CHECK(slow == fast);
        }
    }
}

TEST_CASE("extremal graphs on the square plus center are full angulations") {
    // Every extremal girth-3 witness in a feasible cell is a full angulation.
    const PointSet ps({{0, 0}, {8, 1}, {9, 9}, {1, 8}, {4, 3}});
    for (const ExtremalReport& r : certify_bound(ps, 3)) {
        if (!r.bound || !r.attained) continue;
        if (feasibility(r.n, r.g, r.h).feasible) {
            CHECK(r.all_extremal_are_angulations);
        }
    }
}
