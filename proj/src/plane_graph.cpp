#include "angulation/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace angulation {

PlaneGraph::PlaneGraph(int n, std::vector<HalfEdge> half_edges, int outer_face,
                       std::vector<std::vector<int>> face_walks, std::vector<int> face_of,
                       std::optional<std::vector<Point>> coordinates)
    : n_(n),
      half_(std::move(half_edges)),
      outer_face_(outer_face),
      face_walks_(std::move(face_walks)),
      face_of_(std::move(face_of)),
      coordinates_(std::move(coordinates)) {}

std::vector<int> PlaneGraph::face_vertices(int f) const {
    std::vector<int> verts;
    for (int h : face_walks_[static_cast<std::size_t>(f)]) {
        verts.push_back(half_[static_cast<std::size_t>(h)].origin);
    }
    return verts;
}

std::vector<std::pair<int, int>> PlaneGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t h = 0; h < half_.size(); ++h) {
        const int u = half_[h].origin;
        const int v = half_[half_[h].twin].origin;
        if (u < v) out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> PlaneGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& [u, v] : edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

const std::vector<Point>& PlaneGraph::coordinates() const {
    if (!coordinates_) {
        throw Error(ErrorCode::MissingCoordinates, "plane graph carries no coordinates");
    }
    return *coordinates_;
}

namespace {

// CCW angular order of directions starting at the positive x axis.
// Half 0 covers [0, pi), half 1 covers [pi, 2*pi).
int angle_half(std::int64_t dx, std::int64_t dy) {
    if (dy > 0 || (dy == 0 && dx > 0)) return 0;
    return 1;
}

bool angle_less(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    const int ha = angle_half(ax, ay);
    const int hb = angle_half(bx, by);
    if (ha != hb) return ha < hb;
    const std::int64_t c = ax * by - ay * bx;
    return c > 0;
}

void check_connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n <= 0) throw Error(ErrorCode::InvalidParams, "graph needs at least one vertex");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++count;
                q.push(v);
            }
        }
    }
    if (count != n) {
        throw Error(ErrorCode::Disconnected, "graph is not connected");
    }
}

struct TracedFaces {
    std::vector<std::vector<int>> walks;
    std::vector<int> face_of;
};

TracedFaces trace_faces(const std::vector<HalfEdge>& half) {
    TracedFaces out;
    out.face_of.assign(half.size(), -1);
    for (std::size_t start = 0; start < half.size(); ++start) {
        if (out.face_of[start] != -1) continue;
        const int id = static_cast<int>(out.walks.size());
        std::vector<int> walk;
        int h = static_cast<int>(start);
        do {
            if (out.face_of[static_cast<std::size_t>(h)] != -1) {
                throw Error(ErrorCode::MalformedRotationSystem,
                            "next is not a permutation of the half-edges");
            }
            out.face_of[static_cast<std::size_t>(h)] = id;
            walk.push_back(h);
            h = half[static_cast<std::size_t>(h)].next;
            if (h < 0 || h >= static_cast<int>(half.size())) {
                throw Error(ErrorCode::MalformedRotationSystem, "next reference out of range");
            }
        } while (h != static_cast<int>(start));
        out.walks.push_back(std::move(walk));
    }
    return out;
}

} // namespace

PlaneGraph build_geometric(const PointSet& ps, const std::vector<std::pair<int, int>>& edges) {
    const int n = ps.size();
    std::set<std::pair<int, int>> seen_pairs;
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorCode::InvalidParams, "edge endpoint out of range");
        }
        if (u == v) throw Error(ErrorCode::InvalidParams, "loop edge");
        if (!seen_pairs.insert({std::min(u, v), std::max(u, v)}).second) {
            throw Error(ErrorCode::InvalidParams, "duplicate edge");
        }
    }

    const int m = static_cast<int>(edges.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (segments_cross(ps[edges[static_cast<std::size_t>(a)].first],
                               ps[edges[static_cast<std::size_t>(a)].second],
                               ps[edges[static_cast<std::size_t>(b)].first],
                               ps[edges[static_cast<std::size_t>(b)].second])) {
                throw Error(ErrorCode::CrossingEdges,
                            "edges " + std::to_string(a) + " and " + std::to_string(b) + " cross");
            }
        }
    }

    // Half-edges 2e (u -> v) and 2e + 1 (v -> u).
    std::vector<HalfEdge> half(static_cast<std::size_t>(2 * m));
    std::vector<std::vector<int>> outgoing(static_cast<std::size_t>(n));
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        half[static_cast<std::size_t>(2 * e)] = {u, 2 * e + 1, -1};
        half[static_cast<std::size_t>(2 * e + 1)] = {v, 2 * e, -1};
        outgoing[static_cast<std::size_t>(u)].push_back(2 * e);
        outgoing[static_cast<std::size_t>(v)].push_back(2 * e + 1);
    }

    auto direction = [&](int h) {
        const int u = half[static_cast<std::size_t>(h)].origin;
        const int v = half[static_cast<std::size_t>(half[static_cast<std::size_t>(h)].twin)].origin;
        return Point{ps[v].x - ps[u].x, ps[v].y - ps[u].y};
    };

    // Rotation: CCW angular order at each vertex. The walk continuation of
    // h at its head is the CCW predecessor of twin(h), which keeps every
    // inner face on the left of its (counter-clockwise) walk.
    std::vector<int> rot_prev(half.size(), -1);
    for (int v = 0; v < n; ++v) {
        auto& out = outgoing[static_cast<std::size_t>(v)];
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            const Point da = direction(a);
            const Point db = direction(b);
            return angle_less(da.x, da.y, db.x, db.y);
        });
        for (std::size_t i = 0; i < out.size(); ++i) {
            rot_prev[static_cast<std::size_t>(out[i])] = out[(i + out.size() - 1) % out.size()];
        }
    }
    for (std::size_t h = 0; h < half.size(); ++h) {
        half[h].next = rot_prev[static_cast<std::size_t>(half[h].twin)];
    }

    TracedFaces traced = trace_faces(half);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    check_connected(n, adj);

    // Exterior face: at the bottom-most (then leftmost) vertex all edges point
    // weakly upward, so the face left of the angular-maximal half-edge owns
    // the wedge containing the downward direction.
    int bottom = 0;
    for (int v = 1; v < n; ++v) {
        if (ps[v].y < ps[bottom].y || (ps[v].y == ps[bottom].y && ps[v].x < ps[bottom].x)) {
            bottom = v;
        }
    }
    if (outgoing[static_cast<std::size_t>(bottom)].empty()) {
        throw Error(ErrorCode::Disconnected, "isolated vertex");
    }
    const int extremal = outgoing[static_cast<std::size_t>(bottom)].back();
    const int outer = traced.face_of[static_cast<std::size_t>(extremal)];

    return PlaneGraph(n, std::move(half), outer, std::move(traced.walks), std::move(traced.face_of),
                      ps.points());
}

PlaneGraph build_combinatorial(int n, const std::vector<HalfEdge>& table,
                               const std::vector<int>& outer_walk) {
    const std::size_t sz = table.size();
    if (sz == 0 || sz % 2 != 0) {
        throw Error(ErrorCode::MalformedRotationSystem, "half-edge count must be even and non-zero");
    }
    for (std::size_t h = 0; h < sz; ++h) {
        const HalfEdge& he = table[h];
        if (he.origin < 0 || he.origin >= n) {
            throw Error(ErrorCode::MalformedRotationSystem, "origin out of range");
        }
        if (he.twin < 0 || he.twin >= static_cast<int>(sz) ||
            he.next < 0 || he.next >= static_cast<int>(sz)) {
            throw Error(ErrorCode::MalformedRotationSystem, "reference out of range");
        }
        if (he.twin == static_cast<int>(h) ||
            table[static_cast<std::size_t>(he.twin)].twin != static_cast<int>(h)) {
            throw Error(ErrorCode::MalformedRotationSystem, "twin is not a fixed-point-free involution");
        }
        if (table[static_cast<std::size_t>(he.twin)].origin == he.origin) {
            throw Error(ErrorCode::MalformedRotationSystem, "loop edge");
        }
    }

    // Rotation consistency: sigma = next . twin must keep the origin fixed.
    for (std::size_t h = 0; h < sz; ++h) {
        const int s = table[static_cast<std::size_t>(table[h].twin)].next;
        if (table[static_cast<std::size_t>(s)].origin != table[h].origin) {
            throw Error(ErrorCode::MalformedRotationSystem, "next does not respect the vertex rotation");
        }
    }

    // Simplicity: each unordered vertex pair carries exactly one edge.
    std::set<std::pair<int, int>> pairs;
    for (std::size_t h = 0; h < sz; ++h) {
        const int u = table[h].origin;
        const int v = table[static_cast<std::size_t>(table[h].twin)].origin;
        if (u < v && !pairs.insert({u, v}).second) {
            throw Error(ErrorCode::MalformedRotationSystem, "parallel edges");
        }
    }

    std::vector<HalfEdge> half = table;
    TracedFaces traced = trace_faces(half);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : pairs) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    check_connected(n, adj);

    // Genus check: a rotation system embeds in the sphere iff Euler holds.
    const std::int64_t m = static_cast<std::int64_t>(sz) / 2;
    const std::int64_t f = static_cast<std::int64_t>(traced.walks.size());
    if (n - m + f != 2) {
        throw Error(ErrorCode::MalformedRotationSystem,
                    "rotation system is not a sphere embedding (n - m + f = " +
                        std::to_string(n - m + f) + ")");
    }

    // Locate the designated exterior face by its vertex walk.
    if (outer_walk.size() < 2) {
        throw Error(ErrorCode::InvalidParams, "outer face walk needs at least two vertices");
    }
    auto walk_matches = [&](const std::vector<int>& walk_halves, const std::vector<int>& verts) {
        const std::size_t len = walk_halves.size();
        if (len != verts.size()) return false;
        for (std::size_t shift = 0; shift < len; ++shift) {
            bool ok = true;
            for (std::size_t i = 0; i < len && ok; ++i) {
                const int origin = half[static_cast<std::size_t>(walk_halves[(shift + i) % len])].origin;
                if (origin != verts[i]) ok = false;
            }
            if (ok) return true;
        }
        return false;
    };
    // A directed walk pins down one face; only fall back to the reversed
    // reading when no face is traced in the given direction (for a bare
    // cycle the two faces are vertex-reversals of each other).
    std::vector<int> reversed(outer_walk.rbegin(), outer_walk.rend());
    int outer = -1;
    for (std::size_t fidx = 0; fidx < traced.walks.size() && outer < 0; ++fidx) {
        if (walk_matches(traced.walks[fidx], outer_walk)) outer = static_cast<int>(fidx);
    }
    for (std::size_t fidx = 0; fidx < traced.walks.size() && outer < 0; ++fidx) {
        if (walk_matches(traced.walks[fidx], reversed)) outer = static_cast<int>(fidx);
    }
    if (outer < 0) {
        throw Error(ErrorCode::InvalidParams, "outer face walk does not match any traced face");
    }

    return PlaneGraph(n, std::move(half), outer, std::move(traced.walks), std::move(traced.face_of),
                      std::nullopt);
}

PlaneGraph build_from_face_walks(int n, const std::vector<std::vector<int>>& walks,
                                 const std::vector<int>& outer_walk) {
    std::map<std::pair<int, int>, int> half_id;
    std::vector<HalfEdge> table;
    for (const auto& walk : walks) {
        if (walk.size() < 2) {
            throw Error(ErrorCode::MalformedRotationSystem, "face walk shorter than two vertices");
        }
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const int u = walk[i];
            const int v = walk[(i + 1) % walk.size()];
            if (!half_id.emplace(std::pair<int, int>{u, v}, static_cast<int>(table.size()))
                     .second) {
                throw Error(ErrorCode::MalformedRotationSystem,
                            "directed edge appears in two face walks");
            }
            table.push_back({u, -1, -1});
        }
    }
    int base = 0;
    for (const auto& walk : walks) {
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            const int u = walk[static_cast<std::size_t>(i)];
            const int v = walk[static_cast<std::size_t>((i + 1) % len)];
            const auto twin_it = half_id.find({v, u});
            if (twin_it == half_id.end()) {
                throw Error(ErrorCode::MalformedRotationSystem,
                            "directed edge without its reversal: " + std::to_string(u) + "->" +
                                std::to_string(v));
            }
            table[static_cast<std::size_t>(base + i)].twin = twin_it->second;
            table[static_cast<std::size_t>(base + i)].next = base + (i + 1) % len;
        }
        base += len;
    }
    return build_combinatorial(n, table, outer_walk);
}

FaceCensus face_census(const PlaneGraph& g) {
    FaceCensus census;
    census.face_count = g.face_count();
    census.exterior_face = g.outer_face();
    for (int f = 0; f < g.face_count(); ++f) {
        const int degree = static_cast<int>(g.face_walk(f).size());
        census.degrees.push_back(degree);
        if (f == g.outer_face()) {
            census.exterior_degree = degree;
        } else {
            ++census.inner_degree_count[degree];
        }
    }
    return census;
}

std::optional<int> girth(const PlaneGraph& g) {
    const int n = g.vertex_count();
    const auto adj = g.adjacency();
    int best = -1;

    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    const int cand = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best == -1 || cand < best) best = cand;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

EulerReport euler_audit(const PlaneGraph& g) {
    EulerReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.f = g.face_count();
    r.holds = (r.n - r.m + r.f == 2);
    return r;
}

DegreeSumReport degree_sum_audit(const PlaneGraph& g) {
    const FaceCensus census = face_census(g);
    DegreeSumReport r;
    r.lhs = 2 * static_cast<std::int64_t>(g.edge_count());
    r.rhs = census.exterior_degree;
    for (const auto& [degree, count] : census.inner_degree_count) {
        r.rhs += static_cast<std::int64_t>(degree) * count;
    }
    r.holds = (r.lhs == r.rhs);
    return r;
}

} // namespace angulation
