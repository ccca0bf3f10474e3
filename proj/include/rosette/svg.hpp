#pragma once

#include <string>
#include <vector>

#include "rosette/config.hpp"
#include "rosette/pattern.hpp"

namespace rosette {

struct Stroke {
    Segment segment;
    double width = 1.0;
};

// A resolution-independent drawing in SVG user coordinates (y grows down,
// so pattern coordinates are already flipped).
struct RenderDoc {
    double min_x = 0.0;
    double min_y = 0.0;
    double width = 0.0;
    double height = 0.0;
    int pixel_width = 0;
    int pixel_height = 0;
    std::vector<Stroke> strokes;
};

// Throws EmptyPattern if there are no segments.
RenderDoc build_render_doc(const SegmentSet& segments, const RenderOptions& opts);

// Standalone SVG 1.1, one <line> per stroke, numbers at 9 significant digits.
std::string write_svg(const RenderDoc& doc);

std::string render_svg(const SegmentSet& segments, const RenderOptions& opts);

}  // namespace rosette
