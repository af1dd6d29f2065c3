#include "angulation/angulator.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace angulation {

const char* angulation_class_name(AngulationClass c) {
    switch (c) {
    case AngulationClass::NotAngulation: return "NotAngulation";
    case AngulationClass::ConvexHullGAngulation: return "ConvexHullGAngulation";
    case AngulationClass::ConvexGAngulation: return "ConvexGAngulation";
    case AngulationClass::GAngulation: return "GAngulation";
    }
    return "Unknown";
}

RecognitionReport recognize(const PlaneGraph& graph) {
    const auto g_opt = girth(graph);
    if (!g_opt) {
        throw Error(ErrorCode::Acyclic, "graph has no cycle");
    }
    const int g = *g_opt;
    const FaceCensus census = face_census(graph);

    RecognitionReport report;
    report.measured.n = graph.vertex_count();
    report.measured.m = graph.edge_count();
    report.measured.h = census.exterior_degree;
    report.measured.g = g;
    report.measured.t = report.measured.m - report.measured.n;
    report.measured.inner_faces = census.face_count - 1;

    for (int f = 0; f < graph.face_count(); ++f) {
        if (f == graph.outer_face()) continue;
        const int degree = static_cast<int>(graph.face_walk(f).size());
        if (degree != g) report.off_degree_faces.emplace_back(f, degree);
    }

    // All inner faces share one degree, but it differs from the girth.
    if (!census.inner_degree_count.empty() && census.inner_degree_count.size() == 1) {
        const int common = census.inner_degree_count.begin()->first;
        report.girth_mismatch = (common != g);
    }

    const std::vector<int> outer = graph.face_vertices(graph.outer_face());
    std::set<int> distinct(outer.begin(), outer.end());
    report.exterior_not_simple_cycle =
        distinct.size() != outer.size() || outer.size() < 3;

    report.is_angulation =
        report.off_degree_faces.empty() && !report.exterior_not_simple_cycle;

    if (report.is_angulation) {
        report.classification = AngulationClass::ConvexHullGAngulation;
        if (report.measured.h == report.measured.n) {
            report.classification = AngulationClass::ConvexGAngulation;
        }
        if (report.measured.h == g) {
            report.classification = AngulationClass::GAngulation;
        }

        // Count cross-check: the observed counts must agree with the
        // feasibility arithmetic; a mismatch is a bug, never a verdict.
        const FeasibilityReport fr =
            feasibility(report.measured.n, report.measured.g, report.measured.h);
        if (!fr.feasible || fr.params->t != report.measured.t ||
            fr.params->m != report.measured.m ||
            fr.params->inner_faces != report.measured.inner_faces) {
            throw Error(ErrorCode::InternalCheckFailed,
                        "recognized angulation violates the count identities");
        }
    }
    return report;
}

PlaneGraph triangulate_points(const PointSet& ps) {
    const int n = ps.size();
    if (n < 3) {
        throw Error(ErrorCode::InvalidParams, "triangulation needs at least 3 points");
    }
    if (auto triple = find_collinear_triple(ps)) {
        throw Error(ErrorCode::CollinearInput,
                    "points " + std::to_string((*triple)[0]) + ", " +
                        std::to_string((*triple)[1]) + ", " + std::to_string((*triple)[2]) +
                        " are collinear");
    }

    const Hull hull = convex_hull(ps, PositionMode::Strict);
    std::vector<bool> on_hull(static_cast<std::size_t>(n), false);
    for (int idx : hull.indices) on_hull[static_cast<std::size_t>(idx)] = true;

    // Fan the hull polygon from its first vertex, all triangles CCW.
    struct Tri {
        int a, b, c;
    };
    std::vector<Tri> tris;
    for (int i = 1; i + 1 < hull.h(); ++i) {
        tris.push_back({hull.indices[0], hull.indices[static_cast<std::size_t>(i)],
                        hull.indices[static_cast<std::size_t>(i + 1)]});
    }

    // Insert each interior point by splitting its containing triangle.
    for (int p = 0; p < n; ++p) {
        if (on_hull[static_cast<std::size_t>(p)]) continue;
        bool placed = false;
        for (std::size_t ti = 0; ti < tris.size(); ++ti) {
            const Tri t = tris[ti];
            if (cross(ps[t.a], ps[t.b], ps[p]) > 0 && cross(ps[t.b], ps[t.c], ps[p]) > 0 &&
                cross(ps[t.c], ps[t.a], ps[p]) > 0) {
                tris[ti] = {t.a, t.b, p};
                tris.push_back({t.b, t.c, p});
                tris.push_back({t.c, t.a, p});
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw Error(ErrorCode::InternalCheckFailed,
                        "interior point " + std::to_string(p) + " found no containing triangle");
        }
    }

    std::set<std::pair<int, int>> edge_set;
    for (const Tri& t : tris) {
        edge_set.insert({std::min(t.a, t.b), std::max(t.a, t.b)});
        edge_set.insert({std::min(t.b, t.c), std::max(t.b, t.c)});
        edge_set.insert({std::min(t.c, t.a), std::max(t.c, t.a)});
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    return build_geometric(ps, edges);
}

std::vector<EarStep> spiral_plan(int n, int h, int g) {
    const FeasibilityReport fr = feasibility(n, g, h);
    if (!fr.feasible) {
        throw Error(ErrorCode::Infeasible,
                    std::string("no convex hull g-angulation: ") +
                        infeasible_reason_name(*fr.reason));
    }
    std::vector<EarStep> plan;
    std::int64_t budget = n - h; // interior vertices still to place
    std::int64_t c = h;          // current boundary length
    for (std::int64_t step = 0; step < fr.params->t; ++step) {
        const int j = budget > 0 ? static_cast<int>(std::max<std::int64_t>(1, g - 1 - budget))
                                 : g - 1;
        plan.push_back({j, g - j - 1});
        budget -= g - 1 - j;
        c += g - 2 * j;
    }
    if (budget != 0 || c != g) {
        throw Error(ErrorCode::InternalCheckFailed, "spiral plan did not close on a g-gon");
    }
    return plan;
}

namespace {

// State of the spiral fill: the boundary cycle of the unfilled region, the
// cursor, and everything laid so far.
struct FillState {
    std::vector<int> boundary;
    int cursor = 0;
    int next_vertex = 0;
    std::set<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
    std::vector<std::vector<int>> faces;
};

// BFS distance over the edges laid so far, cut off above `limit`.
int laid_distance(const FillState& st, int from, int to, int limit) {
    std::vector<int> dist(st.adjacency.size(), -1);
    std::vector<int> queue;
    queue.push_back(from);
    dist[static_cast<std::size_t>(from)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        if (u == to) return dist[static_cast<std::size_t>(u)];
        if (dist[static_cast<std::size_t>(u)] >= limit) continue;
        for (int w : st.adjacency[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return limit + 1;
}

void lay_edge(FillState& st, int u, int v) {
    if (!st.edges.insert({std::min(u, v), std::max(u, v)}).second) {
        throw Error(ErrorCode::InternalCheckFailed, "spiral fill duplicated an edge");
    }
    st.adjacency[static_cast<std::size_t>(u)].push_back(v);
    st.adjacency[static_cast<std::size_t>(v)].push_back(u);
}

// Attach one ear at `cursor`, consuming j boundary edges and closing the new
// g-gon with a fresh path. The face walk is the consumed path u0..uj followed
// by the fresh vertices; the new boundary replaces the consumed path by
// u0, fresh reversed, uj.
void attach_ear(FillState& st, const EarStep& ear, int cursor) {
    const int c = static_cast<int>(st.boundary.size());
    const int j = ear.consumed_edges;

    std::vector<int> consumed(static_cast<std::size_t>(j + 1));
    for (int i = 0; i <= j; ++i) {
        consumed[static_cast<std::size_t>(i)] =
            st.boundary[static_cast<std::size_t>((cursor + i) % c)];
    }
    std::vector<int> fresh_ids(static_cast<std::size_t>(ear.fresh_vertices));
    for (int i = 0; i < ear.fresh_vertices; ++i) {
        fresh_ids[static_cast<std::size_t>(i)] = st.next_vertex++;
    }

    std::vector<int> face = consumed;
    face.insert(face.end(), fresh_ids.begin(), fresh_ids.end());
    st.faces.push_back(std::move(face));

    int prev = consumed.back();
    for (int x : fresh_ids) {
        lay_edge(st, prev, x);
        prev = x;
    }
    lay_edge(st, prev, consumed.front());

    std::vector<int> next_boundary;
    next_boundary.push_back(consumed.front());
    for (auto it = fresh_ids.rbegin(); it != fresh_ids.rend(); ++it) {
        next_boundary.push_back(*it);
    }
    next_boundary.push_back(consumed.back());
    for (int i = j + 1; i < c; ++i) {
        next_boundary.push_back(st.boundary[static_cast<std::size_t>((cursor + i) % c)]);
    }
    st.boundary = std::move(next_boundary);
    st.cursor = 1; // successor of u0
}

// Place the ears from `idx` on. Positions are tried in canonical order
// (the advanced cursor first), and the rare dead end backtracks to an
// earlier ear; the first completion is the canonical output.
bool fill_ears(const std::vector<EarStep>& plan, std::size_t idx, FillState& st, long& budget,
               FillState& out) {
    if (idx == plan.size()) {
        out = std::move(st);
        return true;
    }
    const EarStep ear = plan[idx];
    const int c = static_cast<int>(st.boundary.size());
    const int j = ear.consumed_edges;
    if (j > c - 1) {
        throw Error(ErrorCode::InternalCheckFailed, "ear would consume the whole boundary");
    }

    for (int offset = 0; offset < c; ++offset) {
        if (--budget < 0) {
            throw Error(ErrorCode::InternalCheckFailed, "spiral fill search budget exhausted");
        }
        const int cursor = (st.cursor + offset) % c;
        // Every cycle the ear creates combines its new path with an existing
        // path between the consumed endpoints, so the girth stays at g
        // exactly when those endpoints are at graph distance j.
        if (j >= 2 &&
            laid_distance(st, st.boundary[static_cast<std::size_t>(cursor)],
                          st.boundary[static_cast<std::size_t>((cursor + j) % c)], j) != j) {
            continue;
        }
        FillState next = st;
        attach_ear(next, ear, cursor);
        if (fill_ears(plan, idx + 1, next, budget, out)) return true;
    }
    return false;
}

} // namespace

PlaneGraph construct_combinatorial(int n, int h, int g) {
    const std::vector<EarStep> plan = spiral_plan(n, h, g);

    FillState st;
    st.boundary.resize(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) st.boundary[static_cast<std::size_t>(i)] = i;
    st.next_vertex = h;
    st.adjacency.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < h; ++i) lay_edge(st, i, (i + 1) % h);

    FillState done;
    long budget = 2'000'000;
    if (!fill_ears(plan, 0, st, budget, done)) {
        throw Error(ErrorCode::InternalCheckFailed,
                    "no girth-safe spiral fill found for the requested parameters");
    }
    if (static_cast<int>(done.boundary.size()) != g || done.next_vertex != n) {
        throw Error(ErrorCode::InternalCheckFailed, "spiral fill ended in a bad state");
    }
    done.faces.push_back(done.boundary);

    // Outer face: the initial h-cycle walked clockwise.
    std::vector<int> outer_walk(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) outer_walk[static_cast<std::size_t>(i)] = (h - i) % h;

    std::vector<std::vector<int>> all_walks = done.faces;
    all_walks.push_back(outer_walk);
    return build_from_face_walks(n, all_walks, outer_walk);
}

} // namespace angulation
