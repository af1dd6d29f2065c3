#ifndef ANGULATION_SVG_RENDER_HPP
#define ANGULATION_SVG_RENDER_HPP

#include <string>

#include "angulation/plane_graph.hpp"

namespace angulation {

struct RenderSpec {
    int canvas = 640;          // square canvas, pixels
    double stroke_width = 2.0;
    double vertex_radius = 4.0;
    bool face_labels = false;  // label inner faces with their degree
};

/// SVG 1.1 straight-line drawing. Output is deterministic for identical
/// inputs; the graph must carry coordinates.
std::string render_svg(const PlaneGraph& g, const RenderSpec& spec = {});

} // namespace angulation

#endif
