#include "angulation/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace angulation {

namespace {

std::string fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

} // namespace

std::string render_svg(const PlaneGraph& g, const RenderSpec& spec) {
    if (!g.has_coordinates()) {
        throw Error(ErrorCode::MissingCoordinates, "rendering needs vertex coordinates");
    }
    if (spec.canvas <= 0 || spec.stroke_width <= 0 || spec.vertex_radius <= 0) {
        throw Error(ErrorCode::InvalidParams, "render dimensions must be positive");
    }
    const auto& coords = g.coordinates();

    std::int64_t min_x = coords[0].x, max_x = coords[0].x;
    std::int64_t min_y = coords[0].y, max_y = coords[0].y;
    for (const Point& p : coords) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double margin = spec.canvas * 0.05;
    const double span_x = static_cast<double>(max_x - min_x);
    const double span_y = static_cast<double>(max_y - min_y);
    const double scale = (spec.canvas - 2.0 * margin) / std::max({span_x, span_y, 1.0});

    // Mathematical y grows upward, SVG y grows downward; flip on output.
    auto sx = [&](std::int64_t x) { return margin + (static_cast<double>(x - min_x)) * scale; };
    auto sy = [&](std::int64_t y) {
        return spec.canvas - margin - (static_cast<double>(y - min_y)) * scale;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<!-- y axis flipped: mathematical y-up coordinates drawn in the SVG y-down viewport -->\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.canvas) +
           "\" height=\"" + std::to_string(spec.canvas) + "\" viewBox=\"0 0 " +
           std::to_string(spec.canvas) + " " + std::to_string(spec.canvas) + "\">\n";

    for (const auto& [u, v] : g.edges()) {
        out += "  <line x1=\"" + fixed2(sx(coords[static_cast<std::size_t>(u)].x)) + "\" y1=\"" +
               fixed2(sy(coords[static_cast<std::size_t>(u)].y)) + "\" x2=\"" +
               fixed2(sx(coords[static_cast<std::size_t>(v)].x)) + "\" y2=\"" +
               fixed2(sy(coords[static_cast<std::size_t>(v)].y)) + "\" stroke=\"black\" stroke-width=\"" +
               fixed2(spec.stroke_width) + "\"/>\n";
    }
    for (const Point& p : coords) {
        out += "  <circle cx=\"" + fixed2(sx(p.x)) + "\" cy=\"" + fixed2(sy(p.y)) + "\" r=\"" +
               fixed2(spec.vertex_radius) + "\" fill=\"black\"/>\n";
    }
    if (spec.face_labels) {
        for (int f = 0; f < g.face_count(); ++f) {
            if (f == g.outer_face()) continue;
            const std::vector<int> verts = g.face_vertices(f);
            double cx = 0.0, cy = 0.0;
            for (int v : verts) {
                cx += sx(coords[static_cast<std::size_t>(v)].x);
                cy += sy(coords[static_cast<std::size_t>(v)].y);
            }
            cx /= static_cast<double>(verts.size());
            cy /= static_cast<double>(verts.size());
            out += "  <text x=\"" + fixed2(cx) + "\" y=\"" + fixed2(cy) +
                   "\" font-size=\"12\" text-anchor=\"middle\" fill=\"crimson\">" +
                   std::to_string(verts.size()) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace angulation
