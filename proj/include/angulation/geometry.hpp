#ifndef ANGULATION_GEOMETRY_HPP
#define ANGULATION_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "angulation/error.hpp"

namespace angulation {

// Coordinates are capped so every predicate fits in signed 64-bit intermediates.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 20;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation { Left, Right, Collinear };

/// Exact cross product (q - p) x (r - p).
std::int64_t cross(Point p, Point q, Point r);

Orientation orientation(Point p, Point q, Point r);

/// Interior collinearity handling: Strict rejects any collinear triple on the
/// hull boundary, Lax counts mid-edge boundary points into the hull walk.
enum class PositionMode { Strict, Lax };

/// A list of pairwise-distinct integer points; indices are stable identifiers.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

private:
    std::vector<Point> points_;
};

/// Convex hull boundary in counter-clockwise order.
struct Hull {
    std::vector<int> indices;

    int h() const { return static_cast<int>(indices.size()); }
};

/// Counter-clockwise convex hull of `ps`. Lax mode keeps points lying in the
/// relative interior of a hull edge as hull vertices; strict mode rejects them.
Hull convex_hull(const PointSet& ps, PositionMode mode = PositionMode::Strict);

/// True iff the closed segments a0a1 and b0b1 share a point that is not a
/// common endpoint. Collinear overlap of positive length counts as a crossing.
bool segments_cross(Point a0, Point a1, Point b0, Point b1);

/// First collinear triple of indices, if any. Used to audit strict general position.
std::optional<std::array<int, 3>> find_collinear_triple(const PointSet& ps);

} // namespace angulation

#endif
