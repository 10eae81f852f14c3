#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvereach {

/// Error with a stable machine-readable code ("NotConvex", "VertexStart", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Global tolerance policy. All lengths are in units of the turning radius (1).
struct Tolerance {
    double len = 1e-9;    // length comparisons, tangency snapping
    double angle = 1e-9;  // angle comparisons
    double band = 1e-6;   // inside/boundary/outside classification band
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2&) const = default;
};

using Point = Vec2;

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double sq_norm(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double distance(Point a, Point b) { return norm(b - a); }
inline Vec2 perp_ccw(Vec2 a) { return {-a.y, a.x}; }  // rotate +90 degrees
inline Vec2 perp_cw(Vec2 a) { return {a.y, -a.x} ; }  // rotate -90 degrees
inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    if (n == 0.0) throw Error("ZeroVector", "cannot normalize zero vector");
    return {a.x / n, a.y / n};
}
inline Vec2 rotated(Vec2 a, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

/// Normalize an angle to (-pi, pi].
double normalize_angle(double a);
/// Normalize an angle to [0, 2*pi).
double normalize_angle_2pi(double a);
/// Counterclockwise sweep from angle `from` to angle `to`, in [0, 2*pi).
inline double ccw_sweep(double from, double to) { return normalize_angle_2pi(to - from); }
/// Clockwise sweep from angle `from` to angle `to`, in [0, 2*pi).
inline double cw_sweep(double from, double to) { return normalize_angle_2pi(from - to); }

/// Unit heading vector.
struct Direction {
    double ux = 1.0;
    double uy = 0.0;

    Direction() = default;
    Direction(double ux_, double uy_, const Tolerance& tol = {});
    explicit Direction(Vec2 v, const Tolerance& tol = {}) : Direction(v.x, v.y, tol) {}
    static Direction from_angle(double a) {
        Direction d;
        d.ux = std::cos(a);
        d.uy = std::sin(a);
        return d;
    }

    Vec2 vec() const { return {ux, uy}; }
    double angle() const { return std::atan2(uy, ux); }
    Direction reversed() const {
        Direction d;
        d.ux = -ux;
        d.uy = -uy;
        return d;
    }
};

/// A point with a direction of travel.
struct Configuration {
    Point point;
    Direction dir;

    Configuration() = default;
    Configuration(Point p, Direction d) : point(p), dir(d) {}
};

/// Disk of radius exactly 1; the radius is implicit, only the center is stored.
struct UnitDisk {
    Point center;

    bool contains(Point p, double slack = 0.0) const {
        return sq_norm(p - center) <= (1.0 + slack) * (1.0 + slack);
    }
};

/// Arc of a unit-radius circle. Endpoints are center + (cos a, sin a).
/// The angular extent, measured in the arc's own orientation, lies in (0, 2*pi].
struct Arc {
    Point center;
    double from_angle = 0.0;
    double to_angle = 0.0;
    bool ccw = true;

    Point point_at(double a) const { return {center.x + std::cos(a), center.y + std::sin(a)}; }
    Point start() const { return point_at(from_angle); }
    Point end() const { return point_at(to_angle); }
    /// Angular extent in (0, 2*pi]; a from==to arc is a full circle.
    double extent() const {
        double e = ccw ? ccw_sweep(from_angle, to_angle) : cw_sweep(from_angle, to_angle);
        return e <= 1e-12 ? kTwoPi : e;
    }
    /// Angle after sweeping fraction u in [0,1] of the extent from `from_angle`.
    double angle_at(double u) const {
        return from_angle + (ccw ? 1.0 : -1.0) * u * extent();
    }
    /// True if angle a (any representation) lies within the swept span, with slack in radians.
    bool spans_angle(double a, double slack = 0.0) const {
        double s = ccw ? ccw_sweep(from_angle, a) : cw_sweep(from_angle, a);
        return s <= extent() + slack || s >= kTwoPi - slack;
    }
    /// Unit tangent in the direction of travel at angle a on this arc.
    Vec2 tangent_at(double a) const {
        Vec2 radial{std::cos(a), std::sin(a)};
        return ccw ? perp_ccw(radial) : perp_cw(radial);
    }
};

struct Segment {
    Point a;
    Point b;

    Vec2 delta() const { return b - a; }
    double length() const { return norm(delta()); }
    Point point_at(double u) const { return a + delta() * u; }
    Point midpoint() const { return point_at(0.5); }
};

/// Distance from p to the segment (not the supporting line).
double distance_to_segment(Point p, const Segment& seg);
/// Parameter in [0,1] of the point on seg closest to p.
double closest_param_on_segment(Point p, const Segment& seg);

/// Disk reached by turning left from c: tangent at c.point, on the left of the heading.
UnitDisk left_disk(const Configuration& c);
/// Disk reached by turning right from c.
UnitDisk right_disk(const Configuration& c);

/// Intersections of the unit circle around d.center with a segment (0..2 points).
/// A tangency within tol.len is snapped and reported as a single point.
std::vector<Point> intersect_circle_segment(const UnitDisk& d, const Segment& seg,
                                            const Tolerance& tol = {});

/// Intersections of two unit circles (0..2 points; tangency snapped to one).
/// Throws CoincidentCircles when the centers coincide within tol.len.
std::vector<Point> intersect_circles(const UnitDisk& d1, const UnitDisk& d2,
                                     const Tolerance& tol = {});

/// Intersections of the unit circle around d.center with the full line through seg,
/// returned as (t, point) pairs where t parameterizes a + t * (b - a).
std::vector<std::pair<double, Point>> intersect_circle_line(const UnitDisk& d, const Segment& seg,
                                                            const Tolerance& tol = {});

/// Configuration on the boundary of d at angle theta, heading tangent in the
/// given rotational sense.
Configuration tangent_ray_from_disk(const UnitDisk& d, double theta, bool ccw);

}  // namespace curvereach
