#include "rosette/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "rosette/error.hpp"

namespace rosette {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    // Values that round to zero at 9 digits still print with their sign.
    if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0) return "0";
    return buf;
}

}  // namespace

RenderDoc build_render_doc(const SegmentSet& segments, const RenderOptions& opts) {
    if (segments.empty()) throw EmptyPattern();

    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = lo_x;
    double hi_x = -lo_x;
    double hi_y = -lo_x;

    RenderDoc doc;
    doc.strokes.reserve(segments.size());
    for (const Segment& s : segments.segments) {
        const Segment flipped{{s.a.x, -s.a.y}, {s.b.x, -s.b.y}};
        for (Point p : {flipped.a, flipped.b}) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
        doc.strokes.push_back({flipped, 0.0});
    }

    const double extent = std::max(hi_x - lo_x, hi_y - lo_y);
    const double pad = opts.margin_ratio * extent;
    doc.min_x = lo_x - pad;
    doc.min_y = lo_y - pad;
    doc.width = (hi_x - lo_x) + 2.0 * pad;
    doc.height = (hi_y - lo_y) + 2.0 * pad;

    const double longest = std::max(doc.width, doc.height);
    doc.pixel_width = std::max(1, static_cast<int>(std::lround(opts.size * doc.width / longest)));
    doc.pixel_height = std::max(1, static_cast<int>(std::lround(opts.size * doc.height / longest)));

    // stroke_width is in output pixels.
    const double width = opts.stroke_width * longest / opts.size;
    for (Stroke& s : doc.strokes) s.width = width;
    return doc;
}

std::string write_svg(const RenderDoc& doc) {
    std::string out;
    out.reserve(128 + doc.strokes.size() * 96);
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(doc.pixel_width) + "\" height=\"" + std::to_string(doc.pixel_height) +
           "\" viewBox=\"" + num(doc.min_x) + " " + num(doc.min_y) + " " + num(doc.width) + " " +
           num(doc.height) + "\">\n";

    const double group_width = doc.strokes.empty() ? 1.0 : doc.strokes.front().width;
    out += "<g fill=\"none\" stroke=\"#000000\" stroke-linecap=\"round\" stroke-width=\"" + num(group_width) +
           "\">\n";
    for (const Stroke& s : doc.strokes) {
        out += "<line x1=\"" + num(s.segment.a.x) + "\" y1=\"" + num(s.segment.a.y) + "\" x2=\"" +
               num(s.segment.b.x) + "\" y2=\"" + num(s.segment.b.y) + "\"";
        if (s.width != group_width) out += " stroke-width=\"" + num(s.width) + "\"";
        out += "/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_svg(const SegmentSet& segments, const RenderOptions& opts) {
    return write_svg(build_render_doc(segments, opts));
}

}  // namespace rosette
