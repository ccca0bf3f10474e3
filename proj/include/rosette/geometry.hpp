#pragma once

#include <vector>

namespace rosette {

// Absolute tolerance for geometric equality, in pattern units.
inline constexpr double kGeomEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double distance(Point a, Point b);
bool is_finite(Point p);

// Angle in degrees, always held in [0, 360).
class AngleDeg {
public:
    constexpr AngleDeg() = default;
    explicit AngleDeg(double degrees);

    double value() const noexcept { return value_; }

    AngleDeg operator+(double degrees) const { return AngleDeg(value_ + degrees); }
    AngleDeg operator-(double degrees) const { return AngleDeg(value_ - degrees); }

    friend bool operator==(const AngleDeg&, const AngleDeg&) = default;

private:
    double value_ = 0.0;
};

// Reduces any finite angle in degrees to [0, 360).
double normalize_degrees(double degrees);

// cos/sin of an angle in degrees. Multiples of 90 come out exact.
double cos_deg(double degrees);
double sin_deg(double degrees);

// The N marked-point angles of one concentric circle. `index` is the
// 1-based circle number w; angles[0] is marked point 1.
struct CircleDivision {
    int index = 1;
    int n = 0;
    std::vector<AngleDeg> angles;
};

// Runs the accumulator loop over S circles: each marked point advances the
// running angle by 360/N and each new circle adds a further 180/N.
// Throws InvalidParameter if N < 3 or S < 2.
std::vector<CircleDivision> divide_circle_iterative(int n, int s);

// Closed form of the same loop: ((w-1)*180/N + (j-1)*360/N) mod 360.
// w and j are 1-based. Throws InvalidParameter on out-of-range arguments.
AngleDeg divide_circle_closed(int n, int w, int j);

// center + r * (cos a, sin a). Throws InvalidParameter if r <= 0.
Point polar_point(double r, AngleDeg angle, Point center);

}  // namespace rosette
