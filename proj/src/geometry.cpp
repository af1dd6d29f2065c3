#include "angulation/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace angulation {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::CollinearBoundary: return "CollinearBoundary";
    case ErrorCode::CrossingEdges: return "CrossingEdges";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MalformedRotationSystem: return "MalformedRotationSystem";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Acyclic: return "Acyclic";
    case ErrorCode::LayoutOverflow: return "LayoutOverflow";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoGraph: return "NoGraph";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Error";
}

std::int64_t cross(Point p, Point q, Point r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(Point p, Point q, Point r) {
    const std::int64_t c = cross(p, q, r);
    if (c > 0) return Orientation::Left;
    if (c < 0) return Orientation::Right;
    return Orientation::Collinear;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const Point& p : points_) {
        if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit || p.y > kCoordLimit) {
            throw Error(ErrorCode::InvalidParams,
                        "coordinate magnitude exceeds " + std::to_string(kCoordLimit));
        }
    }
    std::vector<Point> sorted = points_;
    std::sort(sorted.begin(), sorted.end(),
              [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw Error(ErrorCode::InvalidParams, "duplicate point in point set");
        }
    }
}

namespace {

bool on_segment(Point p, Point a, Point b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

} // namespace

Hull convex_hull(const PointSet& ps, PositionMode mode) {
    const int n = ps.size();
    if (n < 3) {
        throw Error(ErrorCode::InvalidParams, "convex hull needs at least 3 points");
    }

    // Andrew's monotone chain over point indices, dropping collinear boundary
    // points. Lax mode re-inserts them into the walk afterwards.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return ps[a].x != ps[b].x ? ps[a].x < ps[b].x : ps[a].y < ps[b].y;
    });

    auto build_chain = [&](const std::vector<int>& seq) {
        std::vector<int> chain;
        for (int idx : seq) {
            while (chain.size() >= 2 &&
                   cross(ps[chain[chain.size() - 2]], ps[chain.back()], ps[idx]) <= 0) {
                chain.pop_back();
            }
            chain.push_back(idx);
        }
        return chain;
    };

    std::vector<int> lower = build_chain(order);
    std::vector<int> reversed(order.rbegin(), order.rend());
    std::vector<int> upper = build_chain(reversed);

    std::vector<int> hull = lower;
    hull.insert(hull.end(), upper.begin() + 1, upper.end() - 1);
    if (static_cast<int>(hull.size()) < 3) {
        throw Error(ErrorCode::CollinearInput, "all points are collinear");
    }

    // Points in the relative interior of a hull edge.
    std::vector<bool> on_hull(static_cast<std::size_t>(n), false);
    for (int idx : hull) on_hull[static_cast<std::size_t>(idx)] = true;

    const int hsz = static_cast<int>(hull.size());
    std::vector<std::vector<int>> edge_riders(static_cast<std::size_t>(hsz));
    for (int p = 0; p < n; ++p) {
        if (on_hull[static_cast<std::size_t>(p)]) continue;
        for (int e = 0; e < hsz; ++e) {
            const Point a = ps[hull[static_cast<std::size_t>(e)]];
            const Point b = ps[hull[static_cast<std::size_t>((e + 1) % hsz)]];
            if (on_segment(ps[p], a, b)) {
                if (mode == PositionMode::Strict) {
                    throw Error(ErrorCode::CollinearBoundary,
                                "point " + std::to_string(p) + " lies on a hull edge");
                }
                edge_riders[static_cast<std::size_t>(e)].push_back(p);
                break;
            }
        }
    }

    Hull out;
    for (int e = 0; e < hsz; ++e) {
        const int a = hull[static_cast<std::size_t>(e)];
        out.indices.push_back(a);
        auto& riders = edge_riders[static_cast<std::size_t>(e)];
        std::sort(riders.begin(), riders.end(), [&](int p, int q) {
            const std::int64_t dp = std::abs(ps[p].x - ps[a].x) + std::abs(ps[p].y - ps[a].y);
            const std::int64_t dq = std::abs(ps[q].x - ps[a].x) + std::abs(ps[q].y - ps[a].y);
            return dp < dq;
        });
        for (int p : riders) out.indices.push_back(p);
    }
    return out;
}

bool segments_cross(Point a0, Point a1, Point b0, Point b1) {
    const std::int64_t d1 = cross(b0, b1, a0);
    const std::int64_t d2 = cross(b0, b1, a1);
    const std::int64_t d3 = cross(a0, a1, b0);
    const std::int64_t d4 = cross(a0, a1, b1);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear: a crossing iff the 1-D overlap has positive length.
        auto key = [](Point p) { return std::pair<std::int64_t, std::int64_t>(p.x, p.y); };
        auto lo_a = std::min(key(a0), key(a1)), hi_a = std::max(key(a0), key(a1));
        auto lo_b = std::min(key(b0), key(b1)), hi_b = std::max(key(b0), key(b1));
        auto lo = std::max(lo_a, lo_b), hi = std::min(hi_a, hi_b);
        return lo < hi;
    }

    // Non-collinear segments meet in at most one point; a shared endpoint is
    // then the entire intersection and does not count.
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;

    const bool proper = ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) &&
                        d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
    if (proper) return true;

    // Endpoint of one segment in the interior or at an endpoint of the other.
    if (d1 == 0 && on_segment(a0, b0, b1)) return true;
    if (d2 == 0 && on_segment(a1, b0, b1)) return true;
    if (d3 == 0 && on_segment(b0, a0, a1)) return true;
    if (d4 == 0 && on_segment(b1, a0, a1)) return true;
    return false;
}

std::optional<std::array<int, 3>> find_collinear_triple(const PointSet& ps) {
    const int n = ps.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(ps[i], ps[j], ps[k]) == Orientation::Collinear)
                    return std::array<int, 3>{i, j, k};
    return std::nullopt;
}

} // namespace angulation
