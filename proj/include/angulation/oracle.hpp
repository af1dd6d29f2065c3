#ifndef ANGULATION_ORACLE_HPP
#define ANGULATION_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "angulation/geometry.hpp"

namespace angulation {

/// Exhaustive-search certificate for one (girth floor, exterior degree) cell
/// on a fixed point set.
struct ExtremalReport {
    int n = 0;
    int g = 0; // girth floor of the search
    int h = 0; // exterior face degree of this cell
    int max_edges_found = 0;
    /// edge_bound(n, g, h) when h >= g; empty for tree-only cells with h < g.
    std::optional<std::int64_t> bound;
    bool attained = false;
    /// First maximum-edge witness in canonical search order.
    std::vector<std::pair<int, int>> witness;
    /// Every maximum witness of girth exactly g has all inner faces of degree g.
    bool all_extremal_are_angulations = true;

    friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

inline constexpr int kOracleMaxPoints = 9;

/// Exact maximum edge count over all connected simple non-crossing spanning
/// graphs on `ps` with girth >= g and exterior walk degree exactly h.
/// `slow` disables the edge-bound pruning accelerator; reports are identical.
ExtremalReport enumerate_extremal(const PointSet& ps, int g, int h, bool slow = false);

/// One report per exterior degree realized by some graph on `ps`,
/// ascending in h. Certifies max <= edge_bound for every cell with h >= g.
std::vector<ExtremalReport> certify_bound(const PointSet& ps, int g);

} // namespace angulation

#endif
