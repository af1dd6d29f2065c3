// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every check is exact integer equality; the per-criterion time budgets are
// enforced alongside the results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "angulation/angulator.hpp"
#include "angulation/json_io.hpp"
#include "angulation/oracle.hpp"

using namespace angulation;

namespace {

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    bool (*run)(std::string& detail);
};

bool check(bool cond, std::string& detail, const std::string& message) {
    if (!cond && detail.empty()) detail = message;
    return cond;
}

// ---------------------------------------------------------------------------
// 1. Formula identities for 3 <= g <= 10, g <= h <= n <= 200.
bool criterion_formulas(std::string& detail) {
    bool ok = true;
    for (int g = 3; g <= 10; ++g) {
        for (int n = g; n <= 200; ++n) {
            ok &= check(edge_bound(n, g, g) == closed_bound(n, g), detail,
                        "closed bound mismatch at n=" + std::to_string(n) +
                            " g=" + std::to_string(g));
            ok &= check(edge_bound(n, g, n) == convex_bound(n, g), detail,
                        "convex bound mismatch at n=" + std::to_string(n) +
                            " g=" + std::to_string(g));
            for (int h = g; h <= n; ++h) {
                if (g == 3) {
                    ok &= check(edge_bound(n, 3, h) == 3 * n - 3 - h, detail,
                                "triangulation form mismatch at n=" + std::to_string(n) +
                                    " h=" + std::to_string(h));
                }
                const FeasibilityReport fr = feasibility(n, g, h);
                if (fr.feasible) {
                    ok &= check(fr.params->m == edge_bound(n, g, h), detail,
                                "feasible m below the bound at n=" + std::to_string(n) +
                                    " g=" + std::to_string(g) + " h=" + std::to_string(h));
                    ok &= check(fr.params->m == n + fr.params->t &&
                                    fr.params->inner_faces == fr.params->t + 1,
                                detail, "count identities broken");
                }
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Constructor round-trip over every feasible (n, h, g) with
//    3 <= g <= 7, g <= h <= 20, h <= n <= 40.
bool criterion_roundtrip(std::string& detail) {
    bool ok = true;
    int cases = 0;
    for (int g = 3; g <= 7; ++g) {
        for (int h = g; h <= 20; ++h) {
            for (int n = h; n <= 40; ++n) {
                const FeasibilityReport fr = feasibility(n, g, h);
                if (!fr.feasible) continue;
                ++cases;
                const std::string tag = " at (" + std::to_string(n) + "," + std::to_string(h) +
                                        "," + std::to_string(g) + ")";
                try {
                    const PlaneGraph built = construct_combinatorial(n, h, g);
                    const RecognitionReport r = recognize(built);
                    ok &= check(r.is_angulation, detail, "not recognized" + tag);
                    ok &= check(r.measured.n == n && r.measured.h == h && r.measured.g == g,
                                detail, "parameter mismatch" + tag);
                    ok &= check(r.measured.t == fr.params->t && r.measured.m == n + fr.params->t &&
                                    r.measured.inner_faces == fr.params->t + 1,
                                detail, "count mismatch" + tag);
                    ok &= check(girth(built) == g, detail, "girth mismatch" + tag);
                    ok &= check(euler_audit(built).holds, detail, "euler audit failed" + tag);
                    ok &= check(degree_sum_audit(built).holds, detail,
                                "degree sum audit failed" + tag);
                } catch (const Error& e) {
                    ok &= check(false, detail, std::string(e.what()) + tag);
                }
            }
        }
    }
    ok &= check(cases > 1000, detail, "sweep unexpectedly small");
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Triangulation counts on 200 seeded random general-position point sets.
PointSet seeded_point_set(std::mt19937& rng, int n) {
    std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
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

bool criterion_triangulation(std::string& detail) {
    bool ok = true;
    std::mt19937 rng(600673);
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + (i % 48);
        const PointSet ps = seeded_point_set(rng, n);
        const std::string tag = " at set " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
        try {
            const PlaneGraph tri = triangulate_points(ps);
            const RecognitionReport r = recognize(tri);
            ok &= check(r.is_angulation && r.measured.g == 3, detail,
                        "not a hull triangulation" + tag);
            const TriangulationCounts counts = triangulation_counts(n, r.measured.h);
            ok &= check(tri.edge_count() == counts.edges, detail, "edge count off" + tag);
            ok &= check(r.measured.inner_faces == counts.inner_triangles, detail,
                        "inner face count off" + tag);
            ok &= check(tri.edge_count() == edge_bound(n, 3, r.measured.h), detail,
                        "bound not attained" + tag);
        } catch (const Error& e) {
            ok &= check(false, detail, std::string(e.what()) + tag);
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4 + 5. Exhaustive certification catalog: n in 4..8, g in 3..5.
struct CatalogEntry {
    const char* name;
    std::vector<Point> points;
};

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> sets = {
        {"quad-convex", {{0, 0}, {10, 1}, {11, 9}, {1, 10}}},
        {"quad-hull3", {{0, 0}, {12, 1}, {5, 11}, {5, 4}}},
        {"pent-convex", {{0, 0}, {10, 1}, {13, 8}, {6, 13}, {-2, 7}}},
        {"pent-hull4", {{0, 0}, {8, 1}, {9, 9}, {1, 8}, {4, 3}}},
        {"hex-convex", {{0, 0}, {9, 2}, {12, 8}, {7, 13}, {0, 12}, {-4, 6}}},
        {"hex-hull3", {{0, 0}, {14, 1}, {6, 13}, {5, 4}, {7, 6}, {6, 9}}},
        {"sept-convex", {{0, 0}, {7, 1}, {12, 5}, {11, 11}, {5, 14}, {-2, 10}, {-4, 4}}},
        {"sept-hull5", {{0, 0}, {10, 1}, {12, 9}, {4, 13}, {-3, 6}, {5, 5}, {6, 8}}},
        {"oct-convex", {{0, 0}, {6, 1}, {11, 4}, {12, 10}, {7, 14}, {1, 13}, {-4, 9}, {-5, 3}}},
        {"oct-hull6", {{0, 0}, {9, 1}, {13, 6}, {10, 12}, {3, 13}, {-3, 7}, {4, 5}, {6, 8}}},
    };
    return sets;
}

bool criterion_certification(std::string& detail) {
    bool ok = true;
    int cells = 0;
    for (const CatalogEntry& entry : catalog()) {
        const PointSet ps(entry.points);
        const Hull hull = convex_hull(ps);
        for (int g = 3; g <= 5; ++g) {
            std::vector<ExtremalReport> reports;
            try {
                reports = certify_bound(ps, g);
            } catch (const Error& e) {
                ok &= check(false, detail,
                            std::string(entry.name) + " g=" + std::to_string(g) + ": " + e.what());
                continue;
            }
            for (const ExtremalReport& r : reports) {
                ++cells;
                const std::string tag = std::string(" at ") + entry.name +
                                        " g=" + std::to_string(g) + " h=" + std::to_string(r.h);
                ok &= check(r.bound.has_value() && r.max_edges_found <= *r.bound, detail,
                            "bound exceeded" + tag);
                if (g == 3 && r.h == hull.h()) {
                    ok &= check(r.attained, detail, "hull-degree bound not attained" + tag);
                }
            }
        }
    }
    ok &= check(cells >= 100, detail, "catalog unexpectedly small");

    // Slow-mode spot checks on the n <= 6 sets must be bit-identical.
    for (const CatalogEntry& entry : catalog()) {
        if (entry.points.size() > 6) continue;
        const PointSet ps(entry.points);
        for (int g = 3; g <= 4; ++g) {
            std::vector<ExtremalReport> reports;
            try {
                reports = certify_bound(ps, g);
            } catch (const Error&) {
                continue;
            }
            for (const ExtremalReport& r : reports) {
                const ExtremalReport slow = enumerate_extremal(ps, g, r.h, /*slow=*/true);
                const ExtremalReport fast = enumerate_extremal(ps, g, r.h, /*slow=*/false);
                const bool same = slow == fast && slow == r &&
                                  extremal_to_json(slow).dump() == extremal_to_json(r).dump();
                ok &= check(same, detail,
                            std::string("slow/fast mismatch at ") + entry.name +
                                " g=" + std::to_string(g) + " h=" + std::to_string(r.h));
            }
        }
    }
    return ok;
}

bool criterion_converse(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (const CatalogEntry& entry : catalog()) {
        const PointSet ps(entry.points);
        for (int g = 3; g <= 5; ++g) {
            std::vector<ExtremalReport> reports;
            try {
                reports = certify_bound(ps, g);
            } catch (const Error& e) {
                ok &= check(false, detail,
                            std::string(entry.name) + " g=" + std::to_string(g) + ": " + e.what());
                continue;
            }
            for (const ExtremalReport& r : reports) {
                if (!r.bound || !r.attained) continue;
                if (!feasibility(r.n, g, r.h).feasible) continue;
                ++checked;
                ok &= check(r.all_extremal_are_angulations, detail,
                            std::string("extremal non-angulation at ") + entry.name +
                                " g=" + std::to_string(g) + " h=" + std::to_string(r.h));
            }
        }
    }
    ok &= check(checked >= 30, detail, "too few feasible extremal cells");
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Bridge convention: triangle plus pendant meets the bound with equality.
bool criterion_bridge(std::string& detail) {
    const PointSet ps({{0, 0}, {4, 0}, {2, 3}, {6, 3}});
    const PlaneGraph g = build_geometric(ps, {{0, 1}, {1, 2}, {2, 0}, {1, 3}});
    const FaceCensus census = face_census(g);
    const DegreeSumReport ds = degree_sum_audit(g);
    bool ok = true;
    ok &= check(census.exterior_degree == 5, detail, "exterior walk is not 5");
    ok &= check(ds.lhs == 8 && ds.rhs == 8 && ds.holds, detail, "degree sum is not 8 = 5 + 3");
    ok &= check(girth(g) == 3, detail, "girth is not 3");
    ok &= check(edge_bound(4, 3, 5) == 4, detail, "edge bound is not 4");
    ok &= check(g.edge_count() == edge_bound(4, 3, 5), detail, "bound not met with equality");
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Coordinate synthesis reproduces the combinatorial census exactly.
std::vector<int> canonical_rotation(std::vector<int> walk) {
    std::vector<int> best = walk;
    for (std::size_t s = 1; s < walk.size(); ++s) {
        std::vector<int> rotated;
        for (std::size_t i = 0; i < walk.size(); ++i)
            rotated.push_back(walk[(s + i) % walk.size()]);
        if (rotated < best) best = rotated;
    }
    return best;
}

std::vector<std::vector<int>> face_walk_multiset(const PlaneGraph& g) {
    std::vector<std::vector<int>> walks;
    for (int f = 0; f < g.face_count(); ++f) {
        walks.push_back(canonical_rotation(g.face_vertices(f)));
    }
    std::sort(walks.begin(), walks.end());
    return walks;
}

bool criterion_layout(std::string& detail) {
    bool ok = true;
    int cases = 0;
    for (int g = 3; g <= 6; ++g) {
        for (int h = g; h <= 30; ++h) {
            for (int n = h; n <= 30; ++n) {
                if (!feasibility(n, g, h).feasible) continue;
                ++cases;
                const std::string tag = " at (" + std::to_string(n) + "," + std::to_string(h) +
                                        "," + std::to_string(g) + ")";
                try {
                    const PlaneGraph combinatorial = construct_combinatorial(n, h, g);
                    const PlaneGraph drawn = synthesize_coordinates(combinatorial);
                    ok &= check(drawn.has_coordinates(), detail, "no coordinates" + tag);
                    ok &= check(face_walk_multiset(drawn) == face_walk_multiset(combinatorial),
                                detail, "face census changed" + tag);
                    ok &= check(canonical_rotation(drawn.face_vertices(drawn.outer_face())) ==
                                    canonical_rotation(combinatorial.face_vertices(
                                        combinatorial.outer_face())),
                                detail, "outer face changed" + tag);
                } catch (const Error& e) {
                    ok &= check(false, detail, std::string(e.what()) + tag);
                }
            }
        }
    }
    ok &= check(cases > 700, detail, "layout sweep unexpectedly small");
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "formula identities (bound specializations, feasible m = bound)", 5.0,
         criterion_formulas},
        {2, "constructor round-trip over the feasible sweep", 60.0, criterion_roundtrip},
        {3, "triangulation counts on 200 seeded point sets", 30.0, criterion_triangulation},
        {4, "exhaustive bound certification on the catalog", 600.0, criterion_certification},
        {5, "extremal graphs in feasible cells are full angulations", 600.0, criterion_converse},
        {6, "bridge-convention consistency (triangle plus pendant)", 1.0, criterion_bridge},
        {7, "coordinate-synthesis soundness over the feasible sweep", 60.0, criterion_layout},
    };

    int failures = 0;
    for (const Criterion& crit : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = crit.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed <= crit.budget_seconds;
        if (ok && in_budget) {
            std::printf("[PASS] criterion %d: %s (%.2f s)\n", crit.id, crit.label, elapsed);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%.2f s)%s%s\n", crit.id, crit.label, elapsed,
                        detail.empty() ? "" : " -- ", detail.c_str());
            if (!in_budget) {
                std::printf("       exceeded the %.0f s budget\n", crit.budget_seconds);
            }
        }
    }
    if (failures == 0) {
        std::printf("all 7 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
