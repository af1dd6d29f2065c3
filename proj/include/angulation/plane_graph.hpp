#ifndef ANGULATION_PLANE_GRAPH_HPP
#define ANGULATION_PLANE_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "angulation/geometry.hpp"

namespace angulation {

/// One directed side of an edge. `twin` is the opposite side, `next` the
/// successor around the face lying to the left of this half-edge.
struct HalfEdge {
    int origin = -1;
    int twin = -1;
    int next = -1;
};

/// Connected simple plane graph as a rotation system with a designated
/// exterior face. Inner faces are walked counter-clockwise, the exterior
/// face clockwise, so every face lies to the left of its walk.
class PlaneGraph {
public:
    PlaneGraph(int n, std::vector<HalfEdge> half_edges, int outer_face,
               std::vector<std::vector<int>> face_walks, std::vector<int> face_of,
               std::optional<std::vector<Point>> coordinates);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(half_.size()) / 2; }
    int face_count() const { return static_cast<int>(face_walks_.size()); }
    int outer_face() const { return outer_face_; }

    const std::vector<HalfEdge>& half_edges() const { return half_; }
    const HalfEdge& half_edge(int h) const { return half_[static_cast<std::size_t>(h)]; }
    int head(int h) const { return half_[static_cast<std::size_t>(half_[static_cast<std::size_t>(h)].twin)].origin; }

    /// Face walk as a cyclic half-edge sequence.
    const std::vector<int>& face_walk(int f) const { return face_walks_[static_cast<std::size_t>(f)]; }
    int face_of(int h) const { return face_of_[static_cast<std::size_t>(h)]; }
    /// Face walk as the cyclic sequence of origin vertices.
    std::vector<int> face_vertices(int f) const;

    /// Undirected edges as index pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::vector<int>> adjacency() const;

    bool has_coordinates() const { return coordinates_.has_value(); }
    const std::vector<Point>& coordinates() const;

private:
    int n_;
    std::vector<HalfEdge> half_;
    int outer_face_;
    std::vector<std::vector<int>> face_walks_;
    std::vector<int> face_of_;
    std::optional<std::vector<Point>> coordinates_;
};

/// Straight-line build: rotation from exact angular order at each vertex,
/// exterior face found through the bottom-most point's extremal edge.
PlaneGraph build_geometric(const PointSet& ps, const std::vector<std::pair<int, int>>& edges);

/// Build from an explicit half-edge table. `outer_walk` names the exterior
/// face as a cyclic vertex walk matching one traced face.
PlaneGraph build_combinatorial(int n, const std::vector<HalfEdge>& table,
                               const std::vector<int>& outer_walk);

/// Build from the complete list of face walks (each directed edge must appear
/// in exactly one walk). This is how embeddings without coordinates travel
/// through the interchange format.
PlaneGraph build_from_face_walks(int n, const std::vector<std::vector<int>>& walks,
                                 const std::vector<int>& outer_walk);

/// Per-face boundary degrees. A bridge is counted twice by the face it borders.
struct FaceCensus {
    std::vector<int> degrees;              // walk length per face id
    int exterior_face = -1;
    int exterior_degree = 0;               // h
    std::map<int, int> inner_degree_count; // degree -> number of inner faces
    int face_count = 0;                    // f
};

FaceCensus face_census(const PlaneGraph& g);

/// Shortest cycle length by BFS from every vertex; nullopt for forests.
std::optional<int> girth(const PlaneGraph& g);

struct EulerReport {
    std::int64_t n = 0, m = 0, f = 0;
    bool holds = false; // n - m + f == 2
};

EulerReport euler_audit(const PlaneGraph& g);

struct DegreeSumReport {
    std::int64_t lhs = 0; // 2m
    std::int64_t rhs = 0; // h + sum of g' * f_{g'}
    bool holds = false;
};

DegreeSumReport degree_sum_audit(const PlaneGraph& g);

} // namespace angulation

#endif
