#include "rosette/pattern.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "rosette/error.hpp"

namespace rosette {

namespace {

constexpr double kMinSegmentLength = 1e-12;

// Below this many (pair, i) cells the OpenMP fork costs more than the work.
constexpr long kParallelThreshold = 512;

struct Cell {
    std::array<Segment, 4> segs;
    int count = 0;
};

AngleDeg point_angle(const PatternSpec& spec, int w, int i) {
    return divide_circle_closed(spec.n, w, i) + spec.base_rotation;
}

// Emits the segments of one (pair, marked point) cell. `w` is the inner
// circle of the pair, `i` the marked point of circle w+1; both 1-based.
Cell emit_cell(const PatternSpec& spec, int w, int i) {
    Cell cell;
    auto push = [&cell](Point a, Point b) {
        if (distance(a, b) > kMinSegmentLength) cell.segs[cell.count++] = {a, b};
    };
    const int next = (i % spec.n) + 1;
    const Point inner = marked_point(spec, w, i);
    const Point inner_next = marked_point(spec, w, next);
    const Point outer = marked_point(spec, w + 1, i);
    if (spec.special && *spec.special == w + 1) {
        const auto [sp1, sp2] = special_points(spec, i);
        push(inner, sp1);
        push(inner_next, sp2);
        push(sp1, outer);
        push(sp2, outer);
    } else {
        push(inner, outer);
        push(inner_next, outer);
    }
    return cell;
}

void check_field(bool ok, const char* field, const std::string& reason) {
    if (!ok) throw InvalidParameter(field, reason);
}

}  // namespace

void PatternSpec::validate() const {
    check_field(n >= 3, "N", "must be >= 3, got " + std::to_string(n));
    check_field(s >= 2, "S", "must be >= 2, got " + std::to_string(s));
    check_field(radii.size() == static_cast<std::size_t>(s), "radii",
                "expected " + std::to_string(s) + " radii, got " + std::to_string(radii.size()));
    for (double r : radii)
        check_field(std::isfinite(r) && r > 0.0, "radii", "every radius must be finite and > 0");
    check_field(std::isfinite(alpha) && alpha > -360.0 && alpha < 360.0, "alpha",
                "must lie in (-360, 360)");
    check_field(std::isfinite(spr), "spr", "must be finite");
    check_field(std::isfinite(base_rotation), "base_rotation", "must be finite");
    check_field(is_finite(center), "center", "must be finite");
    if (special) {
        check_field(*special >= 2 && *special <= s, "special",
                    "must be in 2.." + std::to_string(s) + ", got " + std::to_string(*special));
        check_field(green_radius() > 0.0, "spr",
                    "green circle radius r(special) - spr must be > 0");
    }
}

double PatternSpec::green_radius() const {
    if (!special) throw NoSpecialCircle();
    return radius(*special) - spr;
}

double PatternSpec::max_radius() const { return *std::max_element(radii.begin(), radii.end()); }

std::size_t expected_segment_count(const PatternSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.n);
    const auto pairs = static_cast<std::size_t>(spec.s - 1);
    return spec.special ? 2 * n * (pairs - 1) + 4 * n : 2 * n * pairs;
}

Point marked_point(const PatternSpec& spec, int w, int i) {
    return polar_point(spec.radius(w), point_angle(spec, w, i), spec.center);
}

std::pair<Point, Point> special_points(const PatternSpec& spec, int i) {
    if (!spec.special) throw NoSpecialCircle();
    if (i < 1 || i > spec.n)
        throw InvalidParameter("i", "marked point index must be in 1.." + std::to_string(spec.n));
    const double green = spec.green_radius();
    const AngleDeg angle = point_angle(spec, *spec.special, i);
    return {polar_point(green, angle - spec.alpha, spec.center),
            polar_point(green, angle + spec.alpha, spec.center)};
}

SegmentSet generate(const PatternSpec& spec) {
    spec.validate();
    const long cells = static_cast<long>(spec.s - 1) * spec.n;
    std::vector<Cell> buffer(static_cast<std::size_t>(cells));

#pragma omp parallel for schedule(static) if (cells >= kParallelThreshold)
    for (long k = 0; k < cells; ++k) {
        const int w = static_cast<int>(k / spec.n) + 1;
        const int i = static_cast<int>(k % spec.n) + 1;
        buffer[static_cast<std::size_t>(k)] = emit_cell(spec, w, i);
    }

    SegmentSet out{{}, spec};
    out.segments.reserve(expected_segment_count(spec));
    for (const Cell& cell : buffer)
        out.segments.insert(out.segments.end(), cell.segs.begin(), cell.segs.begin() + cell.count);
    return out;
}

SegmentSet generate_serial(const PatternSpec& spec) {
    spec.validate();
    SegmentSet out{{}, spec};
    out.segments.reserve(expected_segment_count(spec));
    for (int w = 1; w < spec.s; ++w) {
        for (int i = 1; i <= spec.n; ++i) {
            const Cell cell = emit_cell(spec, w, i);
            out.segments.insert(out.segments.end(), cell.segs.begin(), cell.segs.begin() + cell.count);
        }
    }
    return out;
}

std::vector<double> desired_radii(double r1, double r2, int n, int s) {
    check_field(std::isfinite(r1) && r1 > 0.0, "r1", "must be finite and > 0");
    check_field(std::isfinite(r2) && r2 > 0.0, "r2", "must be finite and > 0");
    check_field(n >= 3, "N", "must be >= 3, got " + std::to_string(n));
    check_field(s >= 3, "S", "must be >= 3, got " + std::to_string(s));

    const Point p1 = polar_point(r1, divide_circle_closed(n, 1, 1), {});
    const Point p2 = polar_point(r2, divide_circle_closed(n, 2, 1), {});
    const double dx = p2.x - p1.x;
    const double dy = p2.y - p1.y;
    const double len = std::hypot(dx, dy);

    // Signed distance of the line from the center, times len.
    const double numerator = dy * p1.x - dx * p1.y;
    if (std::abs(numerator) / len < 1e-12 * std::max(r1, r2))
        throw DegenerateLine("line through the first two marked points passes through the center");

    std::vector<double> radii{r1, r2};
    radii.reserve(static_cast<std::size_t>(s));
    for (int w = 3; w <= s; ++w) {
        const double a = divide_circle_closed(n, w, 1).value();
        const double denominator = dy * cos_deg(a) - dx * sin_deg(a);
        if (std::abs(denominator) / len < 1e-12)
            throw ParallelRay("ray of circle " + std::to_string(w) + " is parallel to the line");
        const double r = numerator / denominator;
        if (!(r > 0.0))
            throw ParallelRay("ray of circle " + std::to_string(w) + " does not reach the line");
        radii.push_back(r);
    }
    return radii;
}

}  // namespace rosette
