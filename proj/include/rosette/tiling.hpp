#pragma once

#include <cstddef>

#include "rosette/geometry.hpp"
#include "rosette/pattern.hpp"

namespace rosette {

// Three equal, mutually tangent circles. A and B sit on a horizontal line
// and C is the apex above them.
struct TangentTriple {
    Point a;
    Point b;
    Point c;
    double radius = 1.0;
};

// The circle inscribed in the gap between the three circles of a triple.
struct SurroundedCircle {
    Point center;
    double radius = 0.0;
};

// Fill for a surrounded circle: a two-circle star whose outer radius is the
// surrounded radius and inner radius is inner_ratio times that.
struct GapFillSpec {
    int n = 6;
    double inner_ratio = 0.5;  // [0.5, 1)

    friend bool operator==(const GapFillSpec&, const GapFillSpec&) = default;
};

struct TilingSpec {
    PatternSpec circle_pattern;
    GapFillSpec gap_fill;
    double radius = 1.0;  // R, common radius of the tangent circles
    int rows = 1;
    int cols = 1;
    bool fill_down_gaps = true;
    std::size_t motif_cap = 10'000;

    // Throws InvalidParameter or MotifCapExceeded.
    void validate() const;
};

TangentTriple build_triple(double radius, Point anchor);

// Center is the triangle's centroid ((xA+xB)/2, yA + (yC-yA)/3). With
// M = Sy - yA, sin(30) = M / (R + r) gives r = 2M - R.
// Throws DegenerateTriple when the triple is not tangent within 1e-6 or
// is not in canonical orientation.
SurroundedCircle surrounded_circle(const TangentTriple& triple);

// Lattice translations of the hexagonal packing: u = (2R, 0), v = (R, sqrt(3) R).
Point lattice_point(const TilingSpec& spec, Point anchor, int col, int row);

// The tangent-circle pattern scaled so its largest radius equals R, at the
// given center.
PatternSpec circle_pattern_at(const TilingSpec& spec, Point center);

// The gap star for a surrounded circle.
PatternSpec gap_pattern(const TilingSpec& spec, const SurroundedCircle& gap);

// One filled triple: the circle pattern at A, B and C, the star in the
// up-pointing gap and, when fill_down_gaps is set, the same star reflected
// vertically in the down-pointing gap between B, C and B + v.
SegmentSet fill_motif(const TilingSpec& spec, const TangentTriple& triple);

// rows x cols motifs placed row-major at lattice_point(col, row), without
// deduplication. Shared tangent circles are repeated.
SegmentSet place_motifs(const TilingSpec& spec);

// Covers the plane: place_motifs with repeated segments removed (first
// occurrence kept). Placements are filled in parallel and merged row-major;
// tile_plane_serial is the reference and must agree bitwise.
SegmentSet tile_plane(const TilingSpec& spec);
SegmentSet tile_plane_serial(const TilingSpec& spec);

// Removes segments that repeat an earlier one, comparing unordered
// endpoint pairs quantized to a 1e-9 grid. Order of survivors is kept.
std::vector<Segment> dedup_segments(const std::vector<Segment>& segments);

}  // namespace rosette
