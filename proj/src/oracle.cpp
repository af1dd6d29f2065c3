#include "angulation/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>

#include "angulation/formulas.hpp"
#include "angulation/plane_graph.hpp"

namespace angulation {

namespace {

// CCW order from the positive x axis, exact.
int angle_half(std::int64_t dx, std::int64_t dy) {
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

bool angle_less(Point o, Point a, Point b) {
    const std::int64_t ax = a.x - o.x, ay = a.y - o.y;
    const std::int64_t bx = b.x - o.x, by = b.y - o.y;
    const int ha = angle_half(ax, ay), hb = angle_half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

struct Bin {
    int max_m = -1;
    std::vector<std::pair<int, int>> witness;
    bool all_angulations = true;
};

class ExtremalSearch {
public:
    ExtremalSearch(const PointSet& ps, int g_floor, bool bound_prune)
        : ps_(ps), n_(ps.size()), g_(g_floor), bound_prune_(bound_prune) {
        if (n_ > kOracleMaxPoints) {
            throw Error(ErrorCode::TooLarge,
                        "exhaustive search is guarded at n <= " + std::to_string(kOracleMaxPoints));
        }
        if (n_ < 3) throw Error(ErrorCode::InvalidParams, "need at least 3 points");
        if (g_ < 3) throw Error(ErrorCode::InvalidParams, "girth floor must be at least 3");
        if (auto triple = find_collinear_triple(ps)) {
            throw Error(ErrorCode::CollinearInput, "point set is not in strict general position");
        }

        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) cand_.emplace_back(u, v);
        m_all_ = static_cast<int>(cand_.size());

        conflict_.assign(static_cast<std::size_t>(m_all_), 0);
        for (int a = 0; a < m_all_; ++a) {
            for (int b = a + 1; b < m_all_; ++b) {
                if (segments_cross(ps_[cand_[static_cast<std::size_t>(a)].first],
                                   ps_[cand_[static_cast<std::size_t>(a)].second],
                                   ps_[cand_[static_cast<std::size_t>(b)].first],
                                   ps_[cand_[static_cast<std::size_t>(b)].second])) {
                    conflict_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                    conflict_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
                }
            }
        }

        for (int v = 0; v < n_; ++v) {
            std::vector<int> rot;
            for (int u = 0; u < n_; ++u)
                if (u != v) rot.push_back(u);
            std::sort(rot.begin(), rot.end(),
                      [&](int a, int b) { return angle_less(ps_[v], ps_[a], ps_[b]); });
            rotation_[static_cast<std::size_t>(v)] = rot;
            for (std::size_t i = 0; i < rot.size(); ++i) {
                rot_pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(rot[i])] =
                    static_cast<int>(i);
            }
            edge_id_[static_cast<std::size_t>(v)].fill(-1);
        }
        for (int e = 0; e < m_all_; ++e) {
            const auto [u, v] = cand_[static_cast<std::size_t>(e)];
            edge_id_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = e;
            edge_id_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = e;
        }

        bottom_ = 0;
        for (int v = 1; v < n_; ++v) {
            if (ps_[v].y < ps_[bottom_].y ||
                (ps_[v].y == ps_[bottom_].y && ps_[v].x < ps_[bottom_].x)) {
                bottom_ = v;
            }
        }
    }

    // Explore every non-crossing girth-ok subset in canonical order
    // (lexicographic edges, include before exclude).
    void run(std::optional<int> target_h) {
        target_h_ = target_h;
        adj_.fill(0);
        chosen_ = 0;
        chosen_count_ = 0;
        dfs(0);
    }

    std::map<int, Bin> bins;

private:
    void dfs(int idx) {
        if (idx == m_all_) {
            evaluate();
            return;
        }

        // Counting prune: even taking every remaining edge cannot reach the
        // incumbent of the target cell. Only sound when one cell is tracked.
        if (target_h_) {
            auto it = bins.find(*target_h_);
            const int best = it == bins.end() ? -1 : it->second.max_m;
            int ub = chosen_count_ + (m_all_ - idx);
            if (bound_prune_ && cap_ >= 0) ub = std::min(ub, cap_);
            if (ub < best) return;
        }

        const auto [u, v] = cand_[static_cast<std::size_t>(idx)];
        const bool crossing = (chosen_ & conflict_[static_cast<std::size_t>(idx)]) != 0;
        if (!crossing && bfs_distance_at_least(u, v, g_ - 1)) {
            chosen_ |= std::uint64_t{1} << idx;
            ++chosen_count_;
            adj_[static_cast<std::size_t>(u)] |= 1u << v;
            adj_[static_cast<std::size_t>(v)] |= 1u << u;
            dfs(idx + 1);
            adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
            adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
            --chosen_count_;
            chosen_ &= ~(std::uint64_t{1} << idx);
        }
        dfs(idx + 1);
    }

    // True iff dist(u, v) over chosen edges is at least `limit` (BFS cutoff).
    bool bfs_distance_at_least(int u, int v, int limit) const {
        if (limit <= 0) return true;
        std::uint32_t frontier = 1u << u;
        std::uint32_t seen = frontier;
        for (int d = 1; d < limit; ++d) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f != 0) {
                const int w = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[static_cast<std::size_t>(w)];
            }
            next &= ~seen;
            if (next == 0) return true;
            if ((next >> v) & 1u) return false; // dist(u, v) == d + ... <= limit - 1
            seen |= next;
            frontier = next;
        }
        return true;
    }

    bool connected() const {
        std::uint32_t seen = 1u << 0;
        std::uint32_t frontier = seen;
        while (frontier != 0) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f != 0) {
                const int w = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[static_cast<std::size_t>(w)];
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == (1u << n_) - 1u;
    }

    // Successor of the directed edge (u -> v) around its left face:
    // (v -> w) with w the first chosen neighbor clockwise from u around v.
    int next_around(int u, int v) const {
        const auto& rot = rotation_[static_cast<std::size_t>(v)];
        const int deg = static_cast<int>(rot.size());
        int i = rot_pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        for (int step = 0; step < deg; ++step) {
            i = (i + deg - 1) % deg;
            const int w = rot[static_cast<std::size_t>(i)];
            if ((adj_[static_cast<std::size_t>(v)] >> w) & 1u) return w;
        }
        return u; // unreachable for chosen edges
    }

    int outer_start_half() const {
        // Angular-maximal chosen half-edge out of the bottom-most vertex.
        const auto& rot = rotation_[static_cast<std::size_t>(bottom_)];
        for (int i = static_cast<int>(rot.size()) - 1; i >= 0; --i) {
            const int w = rot[static_cast<std::size_t>(i)];
            if ((adj_[static_cast<std::size_t>(bottom_)] >> w) & 1u) {
                return 2 * edge_id_[static_cast<std::size_t>(bottom_)][static_cast<std::size_t>(w)] +
                       (bottom_ > w ? 1 : 0);
            }
        }
        return -1;
    }

    int directed_id(int u, int v) const {
        return 2 * edge_id_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] + (u > v ? 1 : 0);
    }

    // Walk the face left of (u -> v); returns its length.
    int face_length(int u, int v) const {
        const int start_u = u, start_v = v;
        int len = 0;
        do {
            const int w = next_around(u, v);
            u = v;
            v = w;
            ++len;
        } while (!(u == start_u && v == start_v));
        return len;
    }

    int exterior_degree() const {
        const int h0 = outer_start_half();
        const int u = h0 % 2 == 0 ? cand_[static_cast<std::size_t>(h0 / 2)].first
                                  : cand_[static_cast<std::size_t>(h0 / 2)].second;
        const int v = h0 % 2 == 0 ? cand_[static_cast<std::size_t>(h0 / 2)].second
                                  : cand_[static_cast<std::size_t>(h0 / 2)].first;
        return face_length(u, v);
    }

    // Exact girth over chosen edges; -1 for forests.
    int exact_girth() const {
        int best = -1;
        for (int s = 0; s < n_; ++s) {
            std::array<int, kOracleMaxPoints> dist;
            std::array<int, kOracleMaxPoints> parent;
            dist.fill(-1);
            parent.fill(-1);
            std::array<int, kOracleMaxPoints> queue;
            int qh = 0, qt = 0;
            queue[static_cast<std::size_t>(qt++)] = s;
            dist[static_cast<std::size_t>(s)] = 0;
            while (qh < qt) {
                const int x = queue[static_cast<std::size_t>(qh++)];
                std::uint32_t nb = adj_[static_cast<std::size_t>(x)];
                while (nb != 0) {
                    const int y = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (dist[static_cast<std::size_t>(y)] == -1) {
                        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                        parent[static_cast<std::size_t>(y)] = x;
                        queue[static_cast<std::size_t>(qt++)] = y;
                    } else if (y != parent[static_cast<std::size_t>(x)]) {
                        const int cand_len =
                            dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
                        if (best == -1 || cand_len < best) best = cand_len;
                    }
                }
            }
        }
        return best;
    }

    // All inner faces of the current graph have degree exactly g_, vacuously
    // true when the girth is not exactly g_.
    bool angulation_flag() const {
        const int gi = exact_girth();
        if (gi != g_) return true;
        const int outer = outer_start_half();
        std::array<bool, 128> seen{};
        // Mark the outer walk first.
        {
            int u = outer % 2 == 0 ? cand_[static_cast<std::size_t>(outer / 2)].first
                                   : cand_[static_cast<std::size_t>(outer / 2)].second;
            int v = outer % 2 == 0 ? cand_[static_cast<std::size_t>(outer / 2)].second
                                   : cand_[static_cast<std::size_t>(outer / 2)].first;
            const int su = u, sv = v;
            do {
                seen[static_cast<std::size_t>(directed_id(u, v))] = true;
                const int w = next_around(u, v);
                u = v;
                v = w;
            } while (!(u == su && v == sv));
        }
        std::uint64_t rest = chosen_;
        while (rest != 0) {
            const int e = std::countr_zero(rest);
            rest &= rest - 1;
            for (int side = 0; side < 2; ++side) {
                const int hid = 2 * e + side;
                if (seen[static_cast<std::size_t>(hid)]) continue;
                int u = side == 0 ? cand_[static_cast<std::size_t>(e)].first
                                  : cand_[static_cast<std::size_t>(e)].second;
                int v = side == 0 ? cand_[static_cast<std::size_t>(e)].second
                                  : cand_[static_cast<std::size_t>(e)].first;
                const int su = u, sv = v;
                int len = 0;
                do {
                    seen[static_cast<std::size_t>(directed_id(u, v))] = true;
                    const int w = next_around(u, v);
                    u = v;
                    v = w;
                    ++len;
                } while (!(u == su && v == sv));
                if (len != g_) return false;
            }
        }
        return true;
    }

    void evaluate() {
        // Spanning, connected, and carrying a cycle: a forest has no girth,
        // so it never satisfies "girth >= g".
        if (chosen_count_ < n_ || !connected()) return;
        const int h = exterior_degree();
        if (target_h_ && h != *target_h_) return;

        auto [it, inserted] = bins.try_emplace(h);
        Bin& bin = it->second;
        if (chosen_count_ < bin.max_m) return;
        if (chosen_count_ > bin.max_m) {
            bin.max_m = chosen_count_;
            bin.witness.clear();
            std::uint64_t rest = chosen_;
            while (rest != 0) {
                const int e = std::countr_zero(rest);
                rest &= rest - 1;
                bin.witness.push_back(cand_[static_cast<std::size_t>(e)]);
            }
            bin.all_angulations = angulation_flag();
        } else {
            bin.all_angulations = bin.all_angulations && angulation_flag();
        }
    }

public:
    void set_cap(int cap) { cap_ = cap; }

private:
    const PointSet& ps_;
    int n_;
    int g_;
    bool bound_prune_;
    std::optional<int> target_h_;
    int cap_ = -1;

    std::vector<std::pair<int, int>> cand_;
    int m_all_ = 0;
    std::vector<std::uint64_t> conflict_;
    std::array<std::vector<int>, kOracleMaxPoints> rotation_;
    std::array<std::array<int, kOracleMaxPoints>, kOracleMaxPoints> rot_pos_{};
    std::array<std::array<int, kOracleMaxPoints>, kOracleMaxPoints> edge_id_{};
    int bottom_ = 0;

    std::uint64_t chosen_ = 0;
    int chosen_count_ = 0;
    std::array<std::uint32_t, kOracleMaxPoints> adj_{};
};

// Largest edge count the degree-sum bound allows for any girth the cell
// could realize; admissible for pruning, never reported.
int admissible_cap(int n, int g_floor, int h) {
    std::int64_t cap = -1;
    for (int gp = g_floor; gp <= std::min(h, n); ++gp) {
        cap = std::max(cap, edge_bound(n, gp, h));
    }
    return static_cast<int>(cap);
}

ExtremalReport finalize_report(const PointSet& ps, int n, int g, int h, const Bin& bin) {
    ExtremalReport report;
    report.n = n;
    report.g = g;
    report.h = h;
    report.max_edges_found = bin.max_m;
    if (h >= g) {
        report.bound = edge_bound(n, g, h);
        if (bin.max_m > *report.bound) {
            throw Error(ErrorCode::InternalCheckFailed,
                        "search exceeded the edge bound at h = " + std::to_string(h));
        }
        report.attained = (bin.max_m == *report.bound);
    }
    report.witness = bin.witness;
    report.all_extremal_are_angulations = bin.all_angulations;

    // Soundness: the witness must re-validate through the plane-graph stack.
    const PlaneGraph check = build_geometric(ps, report.witness);
    const FaceCensus census = face_census(check);
    const auto gi = girth(check);
    if (census.exterior_degree != h || check.edge_count() != bin.max_m || !gi || *gi < g) {
        throw Error(ErrorCode::InternalCheckFailed, "witness failed re-validation");
    }
    return report;
}

} // namespace

ExtremalReport enumerate_extremal(const PointSet& ps, int g, int h, bool slow) {
    if (h < 3) throw Error(ErrorCode::InvalidParams, "exterior degree must be at least 3");
    ExtremalSearch search(ps, g, !slow);
    search.set_cap(admissible_cap(ps.size(), g, h));
    search.run(h);
    const auto it = search.bins.find(h);
    if (it == search.bins.end() || it->second.max_m < 0) {
        throw Error(ErrorCode::NoGraph,
                    "no graph with girth >= " + std::to_string(g) + " and exterior degree " +
                        std::to_string(h));
    }
    return finalize_report(ps, ps.size(), g, h, it->second);
}

std::vector<ExtremalReport> certify_bound(const PointSet& ps, int g) {
    ExtremalSearch search(ps, g, false);
    search.run(std::nullopt);
    std::vector<ExtremalReport> reports;
    for (const auto& [h, bin] : search.bins) {
        reports.push_back(finalize_report(ps, ps.size(), g, h, bin));
    }
    return reports;
}

} // namespace angulation
