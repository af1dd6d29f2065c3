#ifndef ANGULATION_ANGULATOR_HPP
#define ANGULATION_ANGULATOR_HPP

#include <utility>
#include <vector>

#include "angulation/formulas.hpp"
#include "angulation/plane_graph.hpp"

namespace angulation {

enum class AngulationClass {
    NotAngulation,
    ConvexHullGAngulation, // exterior simple h-cycle, inner faces g-cycles
    ConvexGAngulation,     // additionally h = n
    GAngulation,           // additionally h = g (every face a g-cycle)
};

const char* angulation_class_name(AngulationClass c);

struct RecognitionReport {
    bool is_angulation = false;
    AngulationClass classification = AngulationClass::NotAngulation;
    /// Observed parameters: g is the measured girth, t = m - n.
    AngulationParams measured;
    /// Inner faces whose degree differs from the girth, as (face id, degree).
    std::vector<std::pair<int, int>> off_degree_faces;
    bool exterior_not_simple_cycle = false;
    /// Inner face degrees agree on a common value that is not the girth.
    bool girth_mismatch = false;
};

/// Classify an embedded graph against the convex hull g-angulation definition,
/// taking g to be the measured girth. Throws Acyclic for forests.
RecognitionReport recognize(const PlaneGraph& g);

/// Hull-fan-then-insert triangulation of a point set in strict general
/// position. The result is a convex hull 3-angulation attaining the edge bound.
PlaneGraph triangulate_points(const PointSet& ps);

/// One spiral-fill step: a new inner g-gon consuming `consumed_edges`
/// consecutive boundary edges and adding `fresh_vertices` interior vertices.
struct EarStep {
    int consumed_edges = 0;  // j
    int fresh_vertices = 0;  // g - j - 1
};

/// The deterministic ear sequence for a feasible (n, h, g); throws Infeasible
/// otherwise. Each step lowers the residual (c + 2b - g)/(g - 2) by one.
std::vector<EarStep> spiral_plan(int n, int h, int g);

/// Build a combinatorial convex hull g-angulation with the requested
/// parameters by spiral fill. Vertices 0..h-1 form the exterior cycle.
PlaneGraph construct_combinatorial(int n, int h, int g);

/// Compute an integer straight-line drawing realizing the embedding of `g`
/// (every face boundary must be a simple cycle) and return the geometric
/// rebuild, whose face structure is verified to match `g` exactly.
PlaneGraph synthesize_coordinates(const PlaneGraph& g);

} // namespace angulation

#endif
