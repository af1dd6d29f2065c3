#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "angulation/angulator.hpp"

// Straight-line grid drawing of the constructed embeddings. The graph is
// triangulated by a star vertex inside every inner face plus one apex below
// the exterior cycle, embedded with the canonical-ordering shift method, and
// the helper vertices are dropped. The rebuilt geometric graph is compared
// face-by-face against the input, so the layout is verified, not trusted.

namespace angulation {

namespace {

std::vector<int> canonical_cycle(std::vector<int> walk) {
    // Lexicographically smallest rotation, direction preserved.
    const std::size_t len = walk.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < len; ++s) {
        for (std::size_t i = 0; i < len; ++i) {
            const int a = walk[(s + i) % len];
            const int b = walk[(best + i) % len];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = walk[(best + i) % len];
    return out;
}

struct FaceSignature {
    std::vector<std::vector<int>> inner;
    std::vector<int> outer;

    friend bool operator==(const FaceSignature&, const FaceSignature&) = default;
};

FaceSignature face_signature(const PlaneGraph& g) {
    FaceSignature sig;
    for (int f = 0; f < g.face_count(); ++f) {
        std::vector<int> walk = canonical_cycle(g.face_vertices(f));
        if (f == g.outer_face()) {
            sig.outer = std::move(walk);
        } else {
            sig.inner.push_back(std::move(walk));
        }
    }
    std::sort(sig.inner.begin(), sig.inner.end());
    return sig;
}

// Rotation (CCW neighbor cycles) of the star-triangulated graph.
struct Augmented {
    int vertex_count = 0;
    int apex = 0;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer_triangle;
};

Augmented augment(const PlaneGraph& g) {
    const int n = g.vertex_count();
    const int fcount = g.face_count();

    std::vector<int> star(static_cast<std::size_t>(fcount), -1);
    int next_id = n;
    for (int f = 0; f < fcount; ++f) {
        if (f != g.outer_face()) star[static_cast<std::size_t>(f)] = next_id++;
    }
    const int apex = next_id++;

    Augmented aug;
    aug.vertex_count = next_id;
    aug.apex = apex;
    aug.rotation.resize(static_cast<std::size_t>(next_id));

    // Outgoing half-edges per vertex, in rotation order sigma = next . twin.
    std::vector<int> first_out(static_cast<std::size_t>(n), -1);
    for (int h = 0; h < 2 * g.edge_count(); ++h) {
        const int o = g.half_edge(h).origin;
        if (first_out[static_cast<std::size_t>(o)] < 0) first_out[static_cast<std::size_t>(o)] = h;
    }
    for (int v = 0; v < n; ++v) {
        const int start = first_out[static_cast<std::size_t>(v)];
        if (start < 0) {
            throw Error(ErrorCode::InvalidParams, "isolated vertex in layout input");
        }
        // next(twin(h)) walks the edges leaving v clockwise; collect and
        // reverse so the rotation list is counter-clockwise.
        std::vector<int> clockwise;
        int h = start;
        do {
            clockwise.push_back(h);
            h = g.half_edge(g.half_edge(h).twin).next;
        } while (h != start);
        for (auto it = clockwise.rbegin(); it != clockwise.rend(); ++it) {
            // Neighbor along the edge, then the corner vertex of the face
            // in the CCW wedge after it (the face left of the half-edge).
            aug.rotation[static_cast<std::size_t>(v)].push_back(g.head(*it));
            const int f = g.face_of(*it);
            aug.rotation[static_cast<std::size_t>(v)].push_back(
                f == g.outer_face() ? apex : star[static_cast<std::size_t>(f)]);
        }
    }
    // A star vertex inside any face, the exterior included, has rotation
    // equal to the face walk order (the walk keeps its face on the left).
    for (int f = 0; f < fcount; ++f) {
        if (f == g.outer_face()) continue;
        aug.rotation[static_cast<std::size_t>(star[static_cast<std::size_t>(f)])] =
            g.face_vertices(f);
    }
    const std::vector<int> outer_walk = g.face_vertices(g.outer_face());
    aug.rotation[static_cast<std::size_t>(apex)] = outer_walk;

    aug.outer_triangle = {outer_walk[0], outer_walk[1], apex};
    return aug;
}

// Half-edge table induced by the rotation lists; validated as a sphere
// embedding by build_combinatorial.
PlaneGraph embed_augmented(const Augmented& aug) {
    std::map<std::pair<int, int>, int> id;
    std::vector<HalfEdge> table;
    for (int v = 0; v < aug.vertex_count; ++v) {
        for (int w : aug.rotation[static_cast<std::size_t>(v)]) {
            if (!id.emplace(std::pair<int, int>{v, w}, static_cast<int>(table.size())).second) {
                throw Error(ErrorCode::InternalCheckFailed, "duplicate rotation entry");
            }
            table.push_back({v, -1, -1});
        }
    }
    for (int v = 0; v < aug.vertex_count; ++v) {
        const auto& rot = aug.rotation[static_cast<std::size_t>(v)];
        const int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i) {
            const int w = rot[static_cast<std::size_t>(i)];
            const int h = id.at({v, w});
            auto twin_it = id.find({w, v});
            if (twin_it == id.end()) {
                throw Error(ErrorCode::InternalCheckFailed, "asymmetric rotation");
            }
            table[static_cast<std::size_t>(h)].twin = twin_it->second;
            // Walk continuation at the head: CCW predecessor of v around w.
            const auto& wrot = aug.rotation[static_cast<std::size_t>(w)];
            const auto pos = std::find(wrot.begin(), wrot.end(), v);
            const int succ = wrot[static_cast<std::size_t>(
                (static_cast<std::size_t>(pos - wrot.begin()) + wrot.size() - 1) % wrot.size())];
            table[static_cast<std::size_t>(h)].next = id.at({w, succ});
        }
    }
    return build_combinatorial(aug.vertex_count, table, aug.outer_triangle);
}

struct PeelStep {
    int vertex = 0;
    std::vector<int> cover; // [cl, exposed interior path..., cr]
};

// Canonical ordering by peeling chord-free exterior vertices. `v1`, `v2` are
// the endpoints of the base edge and are never removed. `outer_contour` must
// be the traced outer walk, so the unbounded side lies left of the directed
// contour; the interior arc rule below depends on it.
std::vector<PeelStep> peel_order(const Augmented& aug, std::vector<int> outer_contour,
                                 int v1, int v2) {
    const int nt = aug.vertex_count;
    std::vector<bool> live(static_cast<std::size_t>(nt), true);
    std::vector<bool> on_contour(static_cast<std::size_t>(nt), false);

    std::vector<int> contour = std::move(outer_contour);
    for (int v : contour) on_contour[static_cast<std::size_t>(v)] = true;

    std::vector<PeelStep> steps;
    while (static_cast<int>(contour.size()) > 2) {
        int pick = -1;
        int pick_pos = -1;
        for (std::size_t pos = 0; pos < contour.size(); ++pos) {
            const int v = contour[pos];
            if (v == v1 || v == v2) continue;
            int contour_neighbors = 0;
            for (int w : aug.rotation[static_cast<std::size_t>(v)]) {
                if (live[static_cast<std::size_t>(w)] && on_contour[static_cast<std::size_t>(w)]) {
                    ++contour_neighbors;
                }
            }
            if (contour_neighbors == 2 && (pick == -1 || v < pick)) {
                pick = v;
                pick_pos = static_cast<int>(pos);
            }
        }
        if (pick < 0) {
            throw Error(ErrorCode::InternalCheckFailed, "no chord-free exterior vertex");
        }

        const int csz = static_cast<int>(contour.size());
        const int cl = contour[static_cast<std::size_t>((pick_pos + csz - 1) % csz)];
        const int cr = contour[static_cast<std::size_t>((pick_pos + 1) % csz)];

        // Interior neighbors of `pick`, read CCW from cl to cr.
        const auto& rot = aug.rotation[static_cast<std::size_t>(pick)];
        const int deg = static_cast<int>(rot.size());
        int i_cl = -1, i_cr = -1;
        for (int i = 0; i < deg; ++i) {
            if (rot[static_cast<std::size_t>(i)] == cl) i_cl = i;
            if (rot[static_cast<std::size_t>(i)] == cr) i_cr = i;
        }
        if (i_cl < 0 || i_cr < 0) {
            throw Error(ErrorCode::InternalCheckFailed, "contour neighbor missing from rotation");
        }
        std::vector<int> exposed;
        for (int i = (i_cl + 1) % deg; i != i_cr; i = (i + 1) % deg) {
            const int w = rot[static_cast<std::size_t>(i)];
            if (!live[static_cast<std::size_t>(w)]) {
                throw Error(ErrorCode::InternalCheckFailed, "exposed path crosses peeled region");
            }
            exposed.push_back(w);
        }

        PeelStep step;
        step.vertex = pick;
        step.cover.push_back(cl);
        step.cover.insert(step.cover.end(), exposed.begin(), exposed.end());
        step.cover.push_back(cr);
        steps.push_back(step);

        live[static_cast<std::size_t>(pick)] = false;
        on_contour[static_cast<std::size_t>(pick)] = false;
        std::vector<int> next_contour;
        for (int i = 0; i < csz; ++i) {
            const int v = contour[static_cast<std::size_t>(i)];
            if (v == pick) {
                for (int w : exposed) {
                    next_contour.push_back(w);
                    on_contour[static_cast<std::size_t>(w)] = true;
                }
            } else {
                next_contour.push_back(v);
            }
        }
        contour = std::move(next_contour);
    }
    return steps;
}

struct GridDrawing {
    std::vector<std::int64_t> x;
    std::vector<std::int64_t> y;
};

GridDrawing shift_place(int nt, int v1, int v2, const std::vector<PeelStep>& peeled) {
    GridDrawing grid;
    grid.x.assign(static_cast<std::size_t>(nt), 0);
    grid.y.assign(static_cast<std::size_t>(nt), 0);
    std::vector<std::vector<int>> covered(static_cast<std::size_t>(nt));

    std::vector<int> path = {v1, v2};
    grid.x[static_cast<std::size_t>(v1)] = 0;
    grid.y[static_cast<std::size_t>(v1)] = 0;
    grid.x[static_cast<std::size_t>(v2)] = 2;
    grid.y[static_cast<std::size_t>(v2)] = 0;
    covered[static_cast<std::size_t>(v1)] = {v1};
    covered[static_cast<std::size_t>(v2)] = {v2};

    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const int v = it->vertex;
        std::vector<int> cover = it->cover;

        const auto front_pos = std::find(path.begin(), path.end(), cover.front());
        const auto back_pos = std::find(path.begin(), path.end(), cover.back());
        if (front_pos == path.end() || back_pos == path.end()) {
            throw Error(ErrorCode::InternalCheckFailed, "cover endpoint missing from contour");
        }
        int p = static_cast<int>(front_pos - path.begin());
        int q = static_cast<int>(back_pos - path.begin());
        if (p > q) {
            std::swap(p, q);
            std::reverse(cover.begin(), cover.end());
        }
        for (int i = p; i <= q; ++i) {
            if (path[static_cast<std::size_t>(i)] != cover[static_cast<std::size_t>(i - p)]) {
                throw Error(ErrorCode::InternalCheckFailed, "cover does not match the contour");
            }
        }

        for (int i = p + 1; i < q; ++i) {
            for (int u : covered[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])]) {
                grid.x[static_cast<std::size_t>(u)] += 1;
            }
        }
        for (int i = q; i < static_cast<int>(path.size()); ++i) {
            for (int u : covered[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])]) {
                grid.x[static_cast<std::size_t>(u)] += 2;
            }
        }

        const int wp = path[static_cast<std::size_t>(p)];
        const int wq = path[static_cast<std::size_t>(q)];
        const std::int64_t xs = grid.x[static_cast<std::size_t>(wp)] +
                                grid.x[static_cast<std::size_t>(wq)] +
                                grid.y[static_cast<std::size_t>(wq)] -
                                grid.y[static_cast<std::size_t>(wp)];
        const std::int64_t ys = grid.x[static_cast<std::size_t>(wq)] -
                                grid.x[static_cast<std::size_t>(wp)] +
                                grid.y[static_cast<std::size_t>(wp)] +
                                grid.y[static_cast<std::size_t>(wq)];
        if (xs % 2 != 0 || ys % 2 != 0) {
            throw Error(ErrorCode::InternalCheckFailed, "shift placement lost integrality");
        }
        grid.x[static_cast<std::size_t>(v)] = xs / 2;
        grid.y[static_cast<std::size_t>(v)] = ys / 2;

        covered[static_cast<std::size_t>(v)] = {v};
        for (int i = p + 1; i < q; ++i) {
            const auto& sub = covered[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])];
            covered[static_cast<std::size_t>(v)].insert(covered[static_cast<std::size_t>(v)].end(),
                                                        sub.begin(), sub.end());
        }

        std::vector<int> next_path(path.begin(), path.begin() + p + 1);
        next_path.push_back(v);
        next_path.insert(next_path.end(), path.begin() + q, path.end());
        path = std::move(next_path);
    }
    return grid;
}

PlaneGraph rebuild_with(const PlaneGraph& g, std::vector<Point> coords) {
    for (const Point& p : coords) {
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit) {
            throw Error(ErrorCode::LayoutOverflow, "layout exceeds the coordinate cap");
        }
    }
    return build_geometric(PointSet(std::move(coords)), g.edges());
}

std::vector<Point> polygon_coords(const PlaneGraph& g) {
    // Single cycle: a near-regular polygon in walk order.
    const int inner = g.outer_face() == 0 ? 1 : 0;
    const std::vector<int> walk = g.face_vertices(inner);
    const int n = static_cast<int>(walk.size());
    const double radius = 16.0 * n;
    std::vector<Point> coords(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * 3.141592653589793 * i / n;
        coords[static_cast<std::size_t>(walk[static_cast<std::size_t>(i)])] = {
            std::llround(radius * std::cos(angle)), std::llround(radius * std::sin(angle))};
    }
    return coords;
}

} // namespace

PlaneGraph synthesize_coordinates(const PlaneGraph& g) {
    for (int f = 0; f < g.face_count(); ++f) {
        const std::vector<int> verts = g.face_vertices(f);
        if (std::set<int>(verts.begin(), verts.end()).size() != verts.size()) {
            throw Error(ErrorCode::InvalidParams,
                        "layout requires every face boundary to be a simple cycle");
        }
    }

    const FaceSignature want = face_signature(g);

    std::vector<Point> coords;
    if (g.face_count() == 2) {
        coords = polygon_coords(g);
    } else {
        const Augmented aug = augment(g);
        const PlaneGraph tri = embed_augmented(aug);
        const int v1 = aug.outer_triangle[0];
        const int v2 = aug.outer_triangle[1];
        const std::vector<PeelStep> steps =
            peel_order(aug, tri.face_vertices(tri.outer_face()), v1, v2);
        if (static_cast<int>(steps.size()) != aug.vertex_count - 2) {
            throw Error(ErrorCode::InternalCheckFailed, "canonical ordering is incomplete");
        }
        const GridDrawing grid = shift_place(aug.vertex_count, v1, v2, steps);
        coords.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            coords[static_cast<std::size_t>(v)] = {grid.x[static_cast<std::size_t>(v)],
                                                   grid.y[static_cast<std::size_t>(v)]};
        }
    }

    PlaneGraph rebuilt = rebuild_with(g, coords);
    if (face_signature(rebuilt) == want) return rebuilt;

    // The shift drawing can realize the mirror embedding; flip and retry.
    std::vector<Point> mirrored = coords;
    for (Point& p : mirrored) p.x = -p.x;
    PlaneGraph flipped = rebuild_with(g, std::move(mirrored));
    if (face_signature(flipped) == want) return flipped;

    throw Error(ErrorCode::InternalCheckFailed, "layout does not realize the input embedding");
}

} // namespace angulation
