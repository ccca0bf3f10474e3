#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rosette/geometry.hpp"

namespace rosette {

// Nine-parameter description of a star or rosette, plus a global rotation.
//
// Circles are numbered 1..S in the order given by `radii`; radii need not
// increase. When `special` is set, the pair (special-1, special) is routed
// through two special points per marked point, which lie on the "green"
// circle of radius radii[special-1] - spr. spr may be negative.
struct PatternSpec {
    int n = 8;                         // marked points per circle
    int s = 2;                         // number of concentric circles
    std::vector<double> radii{1.0, 2.0};
    double alpha = 0.0;                // special-point half-spread, degrees
    double spr = 0.0;                  // green-circle inset
    std::optional<int> special;        // 1-based, 2..S
    Point center{};
    double base_rotation = 0.0;        // degrees

    // Throws InvalidParameter naming the first offending field.
    void validate() const;

    double radius(int w) const { return radii[static_cast<std::size_t>(w - 1)]; }
    double green_radius() const;
    double max_radius() const;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

struct Segment {
    Point a;
    Point b;

    double length() const { return distance(a, b); }

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentSet {
    std::vector<Segment> segments;
    PatternSpec spec;

    std::size_t size() const { return segments.size(); }
    bool empty() const { return segments.empty(); }
};

// Number of segments generate() emits before dropping zero-length ones:
// 2N per ordinary adjacent pair and 4N for the special pair.
std::size_t expected_segment_count(const PatternSpec& spec);

// Marked point i (1-based) of circle w (1-based), including base_rotation.
Point marked_point(const PatternSpec& spec, int w, int i);

// The two special points flanking marked point i of the special circle,
// at angles -alpha and +alpha around it. Throws NoSpecialCircle.
std::pair<Point, Point> special_points(const PatternSpec& spec, int i);

// Generates the star/rosette. For each adjacent pair (w, w+1) and each
// marked point i of circle w+1:
//   ordinary pair: P(w,i)->P(w+1,i), P(w,i+1)->P(w+1,i)
//   special pair:  P(w,i)->SP1(i), P(w,i+1)->SP2(i), SP1(i)->P(w+1,i), SP2(i)->P(w+1,i)
// with i+1 wrapping N back to 1. Output order is pair, then i, then the
// order above. Segments shorter than 1e-12 (coincident endpoints, e.g. a
// rosette with alpha = spr = 0) are dropped, so the count equals
// expected_segment_count() whenever no connected points coincide.
//
// The work is split over (pair, i) cells with OpenMP; generate_serial is
// the single-threaded reference and must agree bitwise.
SegmentSet generate(const PatternSpec& spec);
SegmentSet generate_serial(const PatternSpec& spec);

// Radii r(1..S) that put the first marked point of every circle on the line
// through P1 = (r1, 0deg) and P2 = (r2, 180/N deg), so each successive
// first-angle chord has the same gradient. Circle w's first angle is
// (w-1)*180/N; its radius is where that ray meets the line:
//   r(w) = (g*x1 - y1) / (g*cos(a_w) - sin(a_w)),  g = gradient of P1P2
// evaluated with g multiplied through by dx so vertical lines work.
//
// Throws InvalidParameter (r1, r2 <= 0, N < 3, S < 3), DegenerateLine if
// the line passes through the center, ParallelRay if some ray is parallel
// to the line or meets it only behind the center.
std::vector<double> desired_radii(double r1, double r2, int n, int s);

}  // namespace rosette
