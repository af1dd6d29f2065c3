#ifndef ANGULATION_FORMULAS_HPP
#define ANGULATION_FORMULAS_HPP

#include <cstdint>
#include <optional>

namespace angulation {

/// The parameter tuple of a convex hull g-angulation: n vertices, exterior
/// degree h, inner face degree g, t = (2n - h - g) / (g - 2), m = n + t edges
/// and t + 1 inner faces.
struct AngulationParams {
    std::int64_t n = 0;
    std::int64_t h = 0;
    std::int64_t g = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;
    std::int64_t inner_faces = 0;

    friend bool operator==(const AngulationParams&, const AngulationParams&) = default;
};

enum class InfeasibleReason { NotDivisible, HTooSmall, HExceedsN, BudgetNegative };

const char* infeasible_reason_name(InfeasibleReason reason);

struct FeasibilityReport {
    bool feasible = false;
    std::optional<AngulationParams> params;
    std::optional<InfeasibleReason> reason;
};

/// Maximum edge count of a connected simple plane graph with n vertices,
/// girth g and exterior face degree h >= g: floor of
/// (g (n - 2) - (h - g)) / (g - 2), in exact integer arithmetic.
std::int64_t edge_bound(std::int64_t n, std::int64_t g, std::int64_t h);

/// Existence criterion for a convex hull g-angulation on n points with h of
/// them on the hull: feasible iff n >= h >= g >= 3 and (g - 2) | (2n - h - g).
FeasibilityReport feasibility(std::int64_t n, std::int64_t g, std::int64_t h);

/// Specialization h = n: floor of ((g - 1) n - g) / (g - 2).
std::int64_t convex_bound(std::int64_t n, std::int64_t g);

/// Counts of a convex g-angulation, requiring n = g + t (g - 2).
AngulationParams convex_counts(std::int64_t n, std::int64_t g);

/// Convex hull triangulation counts: (3n - 3 - h) edges, (2n - 2 - h) inner triangles.
struct TriangulationCounts {
    std::int64_t edges = 0;
    std::int64_t inner_triangles = 0;

    friend bool operator==(const TriangulationCounts&, const TriangulationCounts&) = default;
};

TriangulationCounts triangulation_counts(std::int64_t n, std::int64_t h);

/// Specialization h = g: floor of g (n - 2) / (g - 2).
std::int64_t closed_bound(std::int64_t n, std::int64_t g);

/// Counts of a g-angulation (every face a g-cycle), requiring
/// n = g + t' (g - 2); reports t = 2t', m = n + 2t', 2t' + 1 inner faces.
struct GAngulationCounts {
    std::int64_t t_prime = 0;
    AngulationParams params;
};

GAngulationCounts g_angulation_counts(std::int64_t n, std::int64_t g);

} // namespace angulation

#endif
