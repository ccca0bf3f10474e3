#include "rosette/tiling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "rosette/error.hpp"

namespace rosette {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Largest coordinate magnitude that still quantizes into an int64 key.
constexpr double kMaxQuantizedExtent = 1e9;

using SegmentKey = std::array<std::int64_t, 4>;

struct SegmentKeyHash {
    std::size_t operator()(const SegmentKey& k) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : k) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

SegmentKey quantize(const Segment& seg) {
    auto q = [](double v) { return static_cast<std::int64_t>(std::llround(v / kGeomEps)); };
    std::array<std::int64_t, 2> a{q(seg.a.x), q(seg.a.y)};
    std::array<std::int64_t, 2> b{q(seg.b.x), q(seg.b.y)};
    if (b < a) std::swap(a, b);
    return {a[0], a[1], b[0], b[1]};
}

void append(std::vector<Segment>& out, const SegmentSet& set) {
    out.insert(out.end(), set.segments.begin(), set.segments.end());
}

SurroundedCircle down_gap(const TangentTriple& t, const SurroundedCircle& up) {
    // Centroid of B, C and D = B + (C - A); it sits above its base CD's
    // opposite vertex B, mirroring the up gap.
    const Point d = t.b + (t.c - t.a);
    return {{(t.c.x + d.x) / 2.0, t.c.y - (t.c.y - t.b.y) / 3.0}, up.radius};
}

std::vector<Segment> motif_segments(const TilingSpec& spec, int col, int row) {
    const Point anchor{};
    const TangentTriple triple{lattice_point(spec, anchor, col, row),
                               lattice_point(spec, anchor, col + 1, row),
                               lattice_point(spec, anchor, col, row + 1), spec.radius};
    return fill_motif(spec, triple).segments;
}

}  // namespace

void TilingSpec::validate() const {
    circle_pattern.validate();
    if (!(std::isfinite(radius) && radius > 0.0)) throw InvalidParameter("R", "must be finite and > 0");
    if (rows < 1) throw InvalidParameter("rows", "must be >= 1");
    if (cols < 1) throw InvalidParameter("cols", "must be >= 1");
    if (gap_fill.n < 3) throw InvalidParameter("gap_N", "must be >= 3");
    if (!(gap_fill.inner_ratio >= 0.5 && gap_fill.inner_ratio < 1.0))
        throw InvalidParameter("inner_ratio", "must lie in [0.5, 1)");
    const auto motifs = static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols);
    if (motifs > motif_cap)
        throw MotifCapExceeded("rows*cols = " + std::to_string(motifs) + " exceeds the cap of " +
                               std::to_string(motif_cap) + " motifs");
    const double extent = radius * (2.0 * cols + rows + 2.0);
    if (!(extent < kMaxQuantizedExtent))
        throw InvalidParameter("R", "tiling extent exceeds " + std::to_string(kMaxQuantizedExtent));
}

TangentTriple build_triple(double radius, Point anchor) {
    if (!(std::isfinite(radius) && radius > 0.0)) throw InvalidParameter("R", "must be finite and > 0");
    return {anchor, anchor + Point{2.0 * radius, 0.0}, anchor + Point{radius, kSqrt3 * radius}, radius};
}

SurroundedCircle surrounded_circle(const TangentTriple& t) {
    constexpr double tol = 1e-6;
    const double side = 2.0 * t.radius;
    if (!(t.radius > 0.0) || std::abs(distance(t.a, t.b) - side) > tol ||
        std::abs(distance(t.b, t.c) - side) > tol || std::abs(distance(t.a, t.c) - side) > tol)
        throw DegenerateTriple("circles are not mutually tangent with radius " +
                               std::to_string(t.radius));
    if (std::abs(t.a.y - t.b.y) > tol || !(t.c.y > t.a.y))
        throw DegenerateTriple("triple is not in canonical orientation (A, B level, C above)");

    const Point center{(t.a.x + t.b.x) / 2.0, t.a.y + (t.c.y - t.a.y) / 3.0};
    const double m = center.y - t.a.y;
    return {center, 2.0 * m - t.radius};
}

Point lattice_point(const TilingSpec& spec, Point anchor, int col, int row) {
    const double r = spec.radius;
    return anchor + Point{col * 2.0 * r + row * r, row * kSqrt3 * r};
}

PatternSpec circle_pattern_at(const TilingSpec& spec, Point center) {
    PatternSpec p = spec.circle_pattern;
    const double scale = spec.radius / p.max_radius();
    for (double& r : p.radii) r *= scale;
    p.spr *= scale;
    p.center = center;
    return p;
}

PatternSpec gap_pattern(const TilingSpec& spec, const SurroundedCircle& gap) {
    PatternSpec p;
    p.n = spec.gap_fill.n;
    p.s = 2;
    p.radii = {spec.gap_fill.inner_ratio * gap.radius, gap.radius};
    p.center = gap.center;
    return p;
}

SegmentSet fill_motif(const TilingSpec& spec, const TangentTriple& triple) {
    spec.validate();
    const SurroundedCircle up = surrounded_circle(triple);

    SegmentSet out{{}, spec.circle_pattern};
    for (Point c : {triple.a, triple.b, triple.c}) append(out.segments, generate(circle_pattern_at(spec, c)));
    append(out.segments, generate(gap_pattern(spec, up)));

    if (spec.fill_down_gaps) {
        const SurroundedCircle down = down_gap(triple, up);
        SegmentSet star = generate(gap_pattern(spec, down));
        for (Segment& s : star.segments) {
            s.a.y = 2.0 * down.center.y - s.a.y;
            s.b.y = 2.0 * down.center.y - s.b.y;
        }
        append(out.segments, star);
    }
    return out;
}

SegmentSet place_motifs(const TilingSpec& spec) {
    spec.validate();
    SegmentSet out{{}, spec.circle_pattern};
    for (int row = 0; row < spec.rows; ++row)
        for (int col = 0; col < spec.cols; ++col) {
            auto segs = motif_segments(spec, col, row);
            out.segments.insert(out.segments.end(), segs.begin(), segs.end());
        }
    return out;
}

SegmentSet tile_plane(const TilingSpec& spec) {
    spec.validate();
    const long placements = static_cast<long>(spec.rows) * spec.cols;
    std::vector<std::vector<Segment>> cells(static_cast<std::size_t>(placements));

#pragma omp parallel for schedule(dynamic) if (placements > 1)
    for (long k = 0; k < placements; ++k) {
        const int row = static_cast<int>(k / spec.cols);
        const int col = static_cast<int>(k % spec.cols);
        cells[static_cast<std::size_t>(k)] = motif_segments(spec, col, row);
    }

    std::vector<Segment> merged;
    for (auto& cell : cells) merged.insert(merged.end(), cell.begin(), cell.end());
    return {dedup_segments(merged), spec.circle_pattern};
}

SegmentSet tile_plane_serial(const TilingSpec& spec) {
    return {dedup_segments(place_motifs(spec).segments), spec.circle_pattern};
}

std::vector<Segment> dedup_segments(const std::vector<Segment>& segments) {
    std::unordered_set<SegmentKey, SegmentKeyHash> seen;
    seen.reserve(segments.size());
    std::vector<Segment> out;
    out.reserve(segments.size());
    for (const Segment& s : segments)
        if (seen.insert(quantize(s)).second) out.push_back(s);
    return out;
}

}  // namespace rosette
