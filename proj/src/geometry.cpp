#include "curvereach/geometry.hpp"

#include <algorithm>

namespace curvereach {

double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    if (a > kPi) a -= kTwoPi;
    return a;
}

double normalize_angle_2pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

Direction::Direction(double ux_, double uy_, const Tolerance& tol) : ux(ux_), uy(uy_) {
    double n2 = ux * ux + uy * uy;
    if (std::abs(n2 - 1.0) > 2.0 * tol.len) {
        if (n2 < tol.len * tol.len) throw Error("ZeroVector", "direction has zero length");
        double n = std::sqrt(n2);
        ux /= n;
        uy /= n;
    }
}

double closest_param_on_segment(Point p, const Segment& seg) {
    Vec2 d = seg.delta();
    double len2 = sq_norm(d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - seg.a, d) / len2, 0.0, 1.0);
}

double distance_to_segment(Point p, const Segment& seg) {
    return distance(p, seg.point_at(closest_param_on_segment(p, seg)));
}

UnitDisk left_disk(const Configuration& c) {
    return UnitDisk{c.point + perp_ccw(c.dir.vec())};
}

UnitDisk right_disk(const Configuration& c) {
    return UnitDisk{c.point + perp_cw(c.dir.vec())};
}

std::vector<std::pair<double, Point>> intersect_circle_line(const UnitDisk& d, const Segment& seg,
                                                            const Tolerance& tol) {
    std::vector<std::pair<double, Point>> out;
    Vec2 u = seg.delta();
    double len = norm(u);
    if (len < tol.len) {
        // Degenerate segment: at most the point itself, if on the circle.
        if (std::abs(distance(seg.a, d.center) - 1.0) <= tol.len) out.push_back({0.0, seg.a});
        return out;
    }
    Vec2 dir = u * (1.0 / len);
    // Foot of the perpendicular from the center onto the line.
    double tf = dot(d.center - seg.a, dir);
    Point foot = seg.a + dir * tf;
    double h2 = sq_norm(d.center - foot);
    double disc = 1.0 - h2;
    if (disc < -2.0 * tol.len) return out;
    if (disc <= 2.0 * tol.len) {
        // Tangent line: single snapped touch point.
        out.push_back({tf / len, foot});
        return out;
    }
    double half = std::sqrt(disc);
    out.push_back({(tf - half) / len, seg.a + dir * (tf - half)});
    out.push_back({(tf + half) / len, seg.a + dir * (tf + half)});
    return out;
}

std::vector<Point> intersect_circle_segment(const UnitDisk& d, const Segment& seg,
                                            const Tolerance& tol) {
    std::vector<Point> out;
    double len = seg.length();
    double slack = len > 0.0 ? tol.len / len : 0.0;
    for (const auto& [t, p] : intersect_circle_line(d, seg, tol)) {
        if (t >= -slack && t <= 1.0 + slack) out.push_back(p);
    }
    return out;
}

std::vector<Point> intersect_circles(const UnitDisk& d1, const UnitDisk& d2,
                                     const Tolerance& tol) {
    Vec2 delta = d2.center - d1.center;
    double dist = norm(delta);
    if (dist < tol.len) throw Error("CoincidentCircles", "unit circles share a center");
    std::vector<Point> out;
    if (dist > 2.0 + tol.len) return out;
    Vec2 u = delta * (1.0 / dist);
    Point mid = d1.center + u * (dist / 2.0);
    double h2 = 1.0 - dist * dist / 4.0;
    if (dist >= 2.0 - tol.len || h2 <= tol.len * tol.len) {
        out.push_back(mid);  // externally tangent (snapped)
        return out;
    }
    double h = std::sqrt(h2);
    Vec2 n = perp_ccw(u);
    out.push_back(mid + n * h);
    out.push_back(mid - n * h);
    return out;
}

Configuration tangent_ray_from_disk(const UnitDisk& d, double theta, bool ccw) {
    Vec2 radial{std::cos(theta), std::sin(theta)};
    Direction dir{ccw ? perp_ccw(radial) : perp_cw(radial)};
    return Configuration{d.center + radial, dir};
}

}  // namespace curvereach
