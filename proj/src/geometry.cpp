#include "rosette/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rosette/error.hpp"

namespace rosette {

namespace {

struct SinCos {
    double sin;
    double cos;
};

// Reduces to a quadrant plus a residual in [-45, 45] before calling libm,
// so quarter turns land exactly on the axes.
SinCos sincos_deg(double degrees) {
    const double d = normalize_degrees(degrees);
    const double quadrant = std::round(d / 90.0);
    const double rad = (d - 90.0 * quadrant) * (std::numbers::pi / 180.0);
    const double s = std::sin(rad);
    const double c = std::cos(rad);
    switch (static_cast<int>(quadrant) & 3) {
        case 0: return {s, c};
        case 1: return {c, -s};
        case 2: return {-s, -c};
        default: return {-c, s};
    }
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double normalize_degrees(double degrees) {
    double r = std::fmod(degrees, 360.0);
    if (r < 0.0) r += 360.0;
    if (r >= 360.0 || r == 0.0) r = 0.0;  // also folds -0.0
    return r;
}

AngleDeg::AngleDeg(double degrees) : value_(normalize_degrees(degrees)) {}

double cos_deg(double degrees) { return sincos_deg(degrees).cos; }
double sin_deg(double degrees) { return sincos_deg(degrees).sin; }

std::vector<CircleDivision> divide_circle_iterative(int n, int s) {
    if (n < 3) throw InvalidParameter("N", "must be >= 3, got " + std::to_string(n));
    if (s < 2) throw InvalidParameter("S", "must be >= 2, got " + std::to_string(s));

    // t is kept in whole half-steps of 180/N: a marked point advances it by
    // two, a new circle by one. Counting in integers keeps the offsets exact
    // no matter how far t runs.
    const double half_step = 180.0 / n;
    std::vector<CircleDivision> circles;
    circles.reserve(static_cast<std::size_t>(s));
    long t = 0;
    for (int i = 1; i <= s; ++i) {
        CircleDivision div{i, n, {}};
        div.angles.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            div.angles.emplace_back(static_cast<double>(t % (2L * n)) * half_step);
            t += 2;
        }
        t += 1;
        circles.push_back(std::move(div));
    }
    return circles;
}

AngleDeg divide_circle_closed(int n, int w, int j) {
    if (n < 3) throw InvalidParameter("N", "must be >= 3, got " + std::to_string(n));
    if (w < 1) throw InvalidParameter("w", "circle index must be >= 1, got " + std::to_string(w));
    if (j < 1 || j > n)
        throw InvalidParameter("j", "marked point index must be in 1.." + std::to_string(n) +
                                        ", got " + std::to_string(j));
    return AngleDeg((w - 1) * (180.0 / n) + (j - 1) * (360.0 / n));
}

Point polar_point(double r, AngleDeg angle, Point center) {
    if (!(r > 0.0)) throw InvalidParameter("r", "radius must be > 0");
    const auto [s, c] = sincos_deg(angle.value());
    return {center.x + r * c, center.y + r * s};
}

}  // namespace rosette
