#include "angulation/json_io.hpp"

#include <string>

namespace angulation {

using nlohmann::json;

namespace {

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

} // namespace

PointSet point_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
        throw Error(ErrorCode::ParseError, "expected an object with a \"points\" array");
    }
    std::vector<Point> points;
    for (const auto& entry : j["points"]) {
        if (!entry.is_array() || entry.size() != 2) {
            throw Error(ErrorCode::ParseError, "each point must be an [x, y] pair");
        }
        points.push_back({as_int(entry[0], "x"), as_int(entry[1], "y")});
    }
    return PointSet(std::move(points));
}

json point_set_to_json(const PointSet& ps) {
    json pts = json::array();
    for (const Point& p : ps.points()) pts.push_back({p.x, p.y});
    return json{{"points", pts}};
}

json graph_to_json(const PlaneGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (g.has_coordinates()) {
        json coords = json::array();
        for (const Point& p : g.coordinates()) coords.push_back({p.x, p.y});
        j["coordinates"] = coords;
    }
    j["outer_face"] = g.face_vertices(g.outer_face());
    json faces = json::array();
    for (int f = 0; f < g.face_count(); ++f) faces.push_back(g.face_vertices(f));
    j["faces"] = faces;
    return j;
}

PlaneGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw Error(ErrorCode::ParseError, "graph needs \"n\" and \"edges\"");
    }
    const int n = static_cast<int>(as_int(j["n"], "n"));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) {
            throw Error(ErrorCode::ParseError, "each edge must be a [u, v] pair");
        }
        edges.emplace_back(static_cast<int>(as_int(e[0], "u")), static_cast<int>(as_int(e[1], "v")));
    }

    if (j.contains("coordinates")) {
        const auto& coords_json = j["coordinates"];
        if (!coords_json.is_array() || static_cast<int>(coords_json.size()) != n) {
            throw Error(ErrorCode::ParseError, "coordinates must list one [x, y] pair per vertex");
        }
        std::vector<Point> coords;
        for (const auto& entry : coords_json) {
            if (!entry.is_array() || entry.size() != 2) {
                throw Error(ErrorCode::ParseError, "each coordinate must be an [x, y] pair");
            }
            coords.push_back({as_int(entry[0], "x"), as_int(entry[1], "y")});
        }
        return build_geometric(PointSet(std::move(coords)), edges);
    }

    if (!j.contains("faces") || !j.contains("outer_face")) {
        throw Error(ErrorCode::ParseError,
                    "a graph without coordinates needs \"faces\" and \"outer_face\"");
    }
    std::vector<std::vector<int>> walks;
    for (const auto& walk : j["faces"]) {
        std::vector<int> verts;
        for (const auto& v : walk) verts.push_back(static_cast<int>(as_int(v, "face vertex")));
        walks.push_back(std::move(verts));
    }
    std::vector<int> outer;
    for (const auto& v : j["outer_face"]) {
        outer.push_back(static_cast<int>(as_int(v, "outer face vertex")));
    }
    return build_from_face_walks(n, walks, outer);
}

json hull_to_json(const Hull& hull) {
    return json{{"h", hull.h()}, {"hull", hull.indices}};
}

json params_to_json(const AngulationParams& p) {
    return json{{"n", p.n}, {"h", p.h},           {"g", p.g},
                {"t", p.t}, {"edges", p.m},       {"inner_faces", p.inner_faces}};
}

json feasibility_to_json(const FeasibilityReport& report) {
    json j;
    j["feasible"] = report.feasible;
    if (report.feasible) {
        j["params"] = params_to_json(*report.params);
    } else {
        j["reason"] = infeasible_reason_name(*report.reason);
    }
    return j;
}

json recognition_to_json(const RecognitionReport& report) {
    json j;
    j["is_angulation"] = report.is_angulation;
    j["classification"] = angulation_class_name(report.classification);
    j["measured"] = params_to_json(report.measured);
    json violations = json::array();
    for (const auto& [face, degree] : report.off_degree_faces) {
        violations.push_back({{"face", face}, {"degree", degree}});
    }
    j["off_degree_faces"] = violations;
    j["exterior_not_simple_cycle"] = report.exterior_not_simple_cycle;
    j["girth_mismatch"] = report.girth_mismatch;
    return j;
}

json extremal_to_json(const ExtremalReport& report) {
    json j;
    j["n"] = report.n;
    j["g"] = report.g;
    j["h"] = report.h;
    j["max_edges_found"] = report.max_edges_found;
    if (report.bound) {
        j["bound"] = *report.bound;
        j["attained"] = report.attained;
    } else {
        j["bound"] = nullptr;
        j["attained"] = false;
    }
    json witness = json::array();
    for (const auto& [u, v] : report.witness) witness.push_back({u, v});
    j["witness"] = witness;
    j["all_extremal_are_angulations"] = report.all_extremal_are_angulations;
    return j;
}

} // namespace angulation
