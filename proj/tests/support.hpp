#pragma once

// Test-only helpers: random spec generators and tolerance-based segment
// set comparison. Nothing here calls into the code under test except to
// construct inputs.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "rosette/pattern.hpp"

namespace rosette::testing {

inline PatternSpec random_pattern_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(3, 24), s_dist(2, 6), coin(0, 2);
    std::uniform_real_distribution<double> radius(5.0, 300.0), alpha(-90.0, 90.0), spr(-150.0, 150.0);

    PatternSpec spec;
    spec.n = n_dist(rng);
    spec.s = s_dist(rng);
    spec.radii.clear();
    for (int w = 0; w < spec.s; ++w) spec.radii.push_back(radius(rng));
    if (coin(rng) != 0) {
        spec.special = std::uniform_int_distribution<int>(2, spec.s)(rng);
        spec.alpha = alpha(rng);
        do {
            spec.spr = spr(rng);
        } while (spec.radius(*spec.special) - spec.spr <= 1.0);
    }
    return spec;
}

inline Point rotate_about(Point p, Point c, double degrees) {
    const double t = degrees * std::numbers::pi / 180.0;
    const double dx = p.x - c.x;
    const double dy = p.y - c.y;
    return {c.x + dx * std::cos(t) - dy * std::sin(t), c.y + dx * std::sin(t) + dy * std::cos(t)};
}

inline std::vector<Segment> rotated(const std::vector<Segment>& segs, Point c, double degrees) {
    std::vector<Segment> out;
    for (const Segment& s : segs) out.push_back({rotate_about(s.a, c, degrees), rotate_about(s.b, c, degrees)});
    return out;
}

inline std::vector<Segment> reflected_horizontal(const std::vector<Segment>& segs, double axis_y) {
    std::vector<Segment> out;
    for (const Segment& s : segs) out.push_back({{s.a.x, 2 * axis_y - s.a.y}, {s.b.x, 2 * axis_y - s.b.y}});
    return out;
}

inline bool near(Point a, Point b, double tol) { return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol; }

inline bool same_segment(const Segment& s, const Segment& t, double tol) {
    return (near(s.a, t.a, tol) && near(s.b, t.b, tol)) || (near(s.a, t.b, tol) && near(s.b, t.a, tol));
}

// Multiset equality of unordered segments, pointwise within tol.
inline bool same_segment_set(const std::vector<Segment>& a, const std::vector<Segment>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Segment& s : a) {
        bool found = false;
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (!used[k] && same_segment(s, b[k], tol)) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Every segment of a has a match in b (duplicates allowed).
inline bool covered_by(const std::vector<Segment>& a, const std::vector<Segment>& b, double tol) {
    for (const Segment& s : a) {
        bool found = false;
        for (const Segment& t : b)
            if (same_segment(s, t, tol)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// Point where the ray at `degrees` from the origin crosses the line through
// p1, p2, found by bisection on the signed side of the line. Returns -1 if
// the sign never changes on (0, limit].
inline double ray_line_bisect(Point p1, Point p2, double degrees, double limit) {
    const double t = degrees * std::numbers::pi / 180.0;
    auto side = [&](double r) {
        const Point q{r * std::cos(t), r * std::sin(t)};
        return (p2.x - p1.x) * (q.y - p1.y) - (p2.y - p1.y) * (q.x - p1.x);
    };
    double lo = 0.0, hi = limit;
    if ((side(lo) > 0) == (side(hi) > 0)) return -1.0;
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        if ((side(mid) > 0) == (side(lo) > 0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace rosette::testing

#include "rosette/config.hpp"

namespace rosette::testing {

// Random valid config; reals are drawn at full double precision so the
// round trip exercises shortest-form formatting.
inline ConfigDoc random_config(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1), small(1, 6), gap(3, 24), size(16, 4000);
    std::uniform_real_distribution<double> unit(0.0, 1.0), rot(-720.0, 720.0);

    ConfigDoc doc;
    doc.mode = coin(rng) ? Mode::tiling : Mode::star;
    doc.pattern = random_pattern_spec(rng);
    if (coin(rng)) doc.pattern.base_rotation = rot(rng);
    if (doc.mode == Mode::tiling || coin(rng)) {
        TilingFields t;
        t.radius = 0.5 + 200.0 * unit(rng);
        t.rows = small(rng);
        t.cols = small(rng);
        t.gap_n = gap(rng);
        t.inner_ratio = 0.5 + 0.49 * unit(rng);
        t.fill_down_gaps = coin(rng) != 0;
        doc.tiling = t;
    }
    doc.render.stroke_width = 0.1 + 5.0 * unit(rng);
    doc.render.size = size(rng);
    doc.render.margin_ratio = 0.2 * unit(rng);
    return doc;
}

}  // namespace rosette::testing
