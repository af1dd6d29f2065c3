// Command-line surface over the angulation library: bounds and feasibility
// queries, construction, recognition, triangulation, exhaustive certification
// and SVG rendering. Data commands emit JSON on stdout; `render` emits SVG.
//
// Exit status: 0 success, 2 usage or validation error, 1 internal invariant
// failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "angulation/angulator.hpp"
#include "angulation/json_io.hpp"
#include "angulation/oracle.hpp"
#include "angulation/svg_render.hpp"

namespace {

using nlohmann::json;

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw angulation::Error(angulation::ErrorCode::ParseError,
                                    "cannot open input file: " + path);
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw angulation::Error(angulation::ErrorCode::ParseError, "input is not valid JSON");
    }
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph edge bounds and convex hull g-angulations"};
    app.require_subcommand(1);
    // --h is a domain flag (exterior face degree), so help is --help only.
    app.set_help_flag("--help", "print help");

    std::string in_path;
    std::int64_t n = 0, g = 0, h = 0;
    bool lax = false, coords = false, slow = false;
    bool has_h = false;
    angulation::RenderSpec spec;

    auto* hull_cmd = app.add_subcommand("hull", "convex hull of a point set");
    hull_cmd->add_option("--in", in_path, "points JSON (default: stdin)");
    hull_cmd->add_flag("--lax", lax, "count mid-edge boundary points into the hull");

    auto* bound_cmd = app.add_subcommand("bound", "maximum edge count for (n, g, h)");
    bound_cmd->add_option("--n", n, "vertex count")->required();
    bound_cmd->add_option("--g", g, "girth")->required();
    bound_cmd->add_option("--h", h, "exterior face degree")->required();

    auto* feasible_cmd = app.add_subcommand("feasible", "convex hull g-angulation feasibility");
    feasible_cmd->add_option("--n", n, "vertex count")->required();
    feasible_cmd->add_option("--g", g, "inner face degree")->required();
    feasible_cmd->add_option("--h", h, "hull size")->required();

    auto* construct_cmd = app.add_subcommand("construct", "build a convex hull g-angulation");
    construct_cmd->add_option("--n", n, "vertex count")->required();
    construct_cmd->add_option("--h", h, "exterior cycle length")->required();
    construct_cmd->add_option("--g", g, "inner face degree")->required();
    construct_cmd->add_flag("--coords", coords, "synthesize an integer straight-line drawing");

    auto* recognize_cmd = app.add_subcommand("recognize", "classify an embedded graph");
    recognize_cmd->add_option("--in", in_path, "graph JSON (default: stdin)");

    auto* triangulate_cmd = app.add_subcommand("triangulate", "triangulate a point set");
    triangulate_cmd->add_option("--in", in_path, "points JSON (default: stdin)");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive extremal search");
    oracle_cmd->add_option("--in", in_path, "points JSON (default: stdin)");
    oracle_cmd->add_option("--g", g, "girth floor")->required();
    oracle_cmd->add_option("--h", h, "exterior degree (omit to report every achievable h)")
        ->each([&](const std::string&) { has_h = true; });
    oracle_cmd->add_flag("--slow", slow, "disable the edge-bound pruning accelerator");

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a graph with coordinates");
    render_cmd->add_option("--in", in_path, "graph JSON (default: stdin)");
    render_cmd->add_option("--canvas", spec.canvas, "canvas size in pixels");
    render_cmd->add_option("--stroke", spec.stroke_width, "stroke width");
    render_cmd->add_option("--vertex-radius", spec.vertex_radius, "vertex mark radius");
    render_cmd->add_flag("--labels", spec.face_labels, "label inner faces with their degree");

    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->set_help_flag("--help", "print help");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (hull_cmd->parsed()) {
            const angulation::PointSet ps = angulation::point_set_from_json(read_input(in_path));
            emit(angulation::hull_to_json(angulation::convex_hull(
                ps, lax ? angulation::PositionMode::Lax : angulation::PositionMode::Strict)));
        } else if (bound_cmd->parsed()) {
            emit(json{{"max_edges", angulation::edge_bound(n, g, h)}});
        } else if (feasible_cmd->parsed()) {
            emit(angulation::feasibility_to_json(angulation::feasibility(n, g, h)));
        } else if (construct_cmd->parsed()) {
            angulation::PlaneGraph built = angulation::construct_combinatorial(
                static_cast<int>(n), static_cast<int>(h), static_cast<int>(g));
            if (coords) built = angulation::synthesize_coordinates(built);
            emit(angulation::graph_to_json(built));
        } else if (recognize_cmd->parsed()) {
            const angulation::PlaneGraph graph = angulation::graph_from_json(read_input(in_path));
            emit(angulation::recognition_to_json(angulation::recognize(graph)));
        } else if (triangulate_cmd->parsed()) {
            const angulation::PointSet ps = angulation::point_set_from_json(read_input(in_path));
            emit(angulation::graph_to_json(angulation::triangulate_points(ps)));
        } else if (oracle_cmd->parsed()) {
            const angulation::PointSet ps = angulation::point_set_from_json(read_input(in_path));
            if (has_h) {
                emit(angulation::extremal_to_json(angulation::enumerate_extremal(
                    ps, static_cast<int>(g), static_cast<int>(h), slow)));
            } else {
                json reports = json::array();
                for (const auto& report : angulation::certify_bound(ps, static_cast<int>(g))) {
                    reports.push_back(angulation::extremal_to_json(report));
                }
                emit(reports);
            }
        } else if (render_cmd->parsed()) {
            const angulation::PlaneGraph graph = angulation::graph_from_json(read_input(in_path));
            std::cout << angulation::render_svg(graph, spec);
        }
    } catch (const angulation::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == angulation::ErrorCode::InternalCheckFailed ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
