#include "angulation/formulas.hpp"

#include <string>

#include "angulation/error.hpp"

namespace angulation {

const char* infeasible_reason_name(InfeasibleReason reason) {
    switch (reason) {
    case InfeasibleReason::NotDivisible: return "NotDivisible";
    case InfeasibleReason::HTooSmall: return "HTooSmall";
    case InfeasibleReason::HExceedsN: return "HExceedsN";
    case InfeasibleReason::BudgetNegative: return "BudgetNegative";
    }
    return "Unknown";
}

namespace {

// Keeps every product in the formulas within int64 (g <= h <= n can make
// g * n approach n^2).
constexpr std::int64_t kParamLimit = 2'000'000'000;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void require(bool cond, const std::string& message) {
    if (!cond) throw Error(ErrorCode::InvalidParams, message);
}

void require_in_range(std::int64_t n, std::int64_t g, std::int64_t h) {
    require(n <= kParamLimit && g <= kParamLimit && h <= 2 * kParamLimit,
            "parameters exceed the supported range");
}

} // namespace

std::int64_t edge_bound(std::int64_t n, std::int64_t g, std::int64_t h) {
    require(g >= 3, "girth must be at least 3");
    require_in_range(n, g, h);
    require(h >= g, "exterior degree must be at least the girth");
    require(n >= 3, "need at least 3 vertices");
    return floor_div(g * (n - 2) - (h - g), g - 2);
}

FeasibilityReport feasibility(std::int64_t n, std::int64_t g, std::int64_t h) {
    require(g >= 3, "girth must be at least 3");
    require_in_range(n, g, h);
    FeasibilityReport report;
    if (h < g) {
        report.reason = InfeasibleReason::HTooSmall;
        return report;
    }
    if (h > n) {
        report.reason = InfeasibleReason::HExceedsN;
        return report;
    }
    const std::int64_t budget = 2 * n - h - g;
    if (budget < 0) {
        report.reason = InfeasibleReason::BudgetNegative;
        return report;
    }
    if (budget % (g - 2) != 0) {
        report.reason = InfeasibleReason::NotDivisible;
        return report;
    }
    AngulationParams params;
    params.n = n;
    params.h = h;
    params.g = g;
    params.t = budget / (g - 2);
    params.m = n + params.t;
    params.inner_faces = params.t + 1;
    if (params.m != edge_bound(n, g, h)) {
        throw Error(ErrorCode::InternalCheckFailed,
                    "feasible edge count disagrees with the edge bound");
    }
    report.feasible = true;
    report.params = params;
    return report;
}

std::int64_t convex_bound(std::int64_t n, std::int64_t g) {
    require(g >= 3, "girth must be at least 3");
    require_in_range(n, g, g);
    require(n >= g, "need n >= g");
    return floor_div((g - 1) * n - g, g - 2);
}

AngulationParams convex_counts(std::int64_t n, std::int64_t g) {
    require(g >= 3, "girth must be at least 3");
    require_in_range(n, g, g);
    require(n >= g, "need n >= g");
    if ((n - g) % (g - 2) != 0) {
        throw Error(ErrorCode::NotDivisible,
                    "n - g = " + std::to_string(n - g) + " is not divisible by g - 2");
    }
    const std::int64_t t = (n - g) / (g - 2);
    return AngulationParams{n, n, g, t, n + t, t + 1};
}

TriangulationCounts triangulation_counts(std::int64_t n, std::int64_t h) {
    require(h >= 3, "hull needs at least 3 vertices");
    require_in_range(n, 3, h);
    require(n >= h, "need n >= h");
    const FeasibilityReport fr = feasibility(n, 3, h);
    if (!fr.feasible || fr.params->m != 3 * n - 3 - h ||
        fr.params->inner_faces != 2 * n - 2 - h) {
        throw Error(ErrorCode::InternalCheckFailed,
                    "triangulation counts disagree with the feasibility counts");
    }
    return TriangulationCounts{3 * n - 3 - h, 2 * n - 2 - h};
}

std::int64_t closed_bound(std::int64_t n, std::int64_t g) {
    require(g >= 3, "girth must be at least 3");
    require_in_range(n, g, g);
    require(n >= g, "need n >= g");
    return floor_div(g * (n - 2), g - 2);
}

GAngulationCounts g_angulation_counts(std::int64_t n, std::int64_t g) {
    require(g >= 3, "girth must be at least 3");
    require_in_range(n, g, g);
    require(n >= g, "need n >= g");
    if ((n - g) % (g - 2) != 0) {
        throw Error(ErrorCode::NotDivisible,
                    "n - g = " + std::to_string(n - g) + " is not divisible by g - 2");
    }
    GAngulationCounts out;
    out.t_prime = (n - g) / (g - 2);
    out.params = AngulationParams{n, g, g, 2 * out.t_prime, n + 2 * out.t_prime,
                                  2 * out.t_prime + 1};
    const FeasibilityReport fr = feasibility(n, g, g);
    if (!fr.feasible || fr.params->t != out.params.t || fr.params->m != out.params.m) {
        throw Error(ErrorCode::InternalCheckFailed,
                    "g-angulation counts disagree with the feasibility counts");
    }
    return out;
}

} // namespace angulation
