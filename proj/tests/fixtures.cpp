#include "fixtures.hpp"

#include <functional>

namespace fixtures {

ConvexPolygon square(double side, Point origin) {
    return rectangle(side, side, origin);
}

ConvexPolygon rectangle(double w, double h, Point origin) {
    return ConvexPolygon::validate({origin,
                                    {origin.x + w, origin.y},
                                    {origin.x + w, origin.y + h},
                                    {origin.x, origin.y + h}});
}

ConvexPolygon triangle() {
    return ConvexPolygon::validate({{0, 0}, {12, 0}, {0, 12}});
}

ConvexPolygon regular_gon(int k, double circumradius, Point center) {
    std::vector<Point> v;
    for (int i = 0; i < k; ++i) {
        double a = kTwoPi * i / k;
        v.push_back({center.x + circumradius * std::cos(a),
                     center.y + circumradius * std::sin(a)});
    }
    return ConvexPolygon::validate(std::move(v));
}

ConvexPolygon random_convex(int n, double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> jitter(0.85, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> angles(n);
        for (double& a : angles) a = unit(rng) * kTwoPi;
        std::sort(angles.begin(), angles.end());
        bool spaced = true;
        for (int i = 0; i < n; ++i) {
            double gap = (i + 1 < n ? angles[i + 1] : angles[0] + kTwoPi) - angles[i];
            if (gap < 0.2 / n || gap > kPi * 0.9) spaced = false;
        }
        if (!spaced) continue;
        std::vector<Point> pts(n);
        for (int i = 0; i < n; ++i) {
            double r = radius * jitter(rng);
            pts[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
        }
        try {
            return ConvexPolygon::validate(pts);
        } catch (const Error&) {
            continue;
        }
    }
    return regular_gon(n, radius);
}

Point sample_in_polygon(const ConvexPolygon& poly, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> acc;
    double total = 0.0;
    for (int i = 1; i + 1 < poly.size(); ++i) {
        total += cross(poly.vertex(i) - poly.vertex(0), poly.vertex(i + 1) - poly.vertex(0)) / 2;
        acc.push_back(total);
    }
    double r = unit(rng) * total;
    size_t t = std::lower_bound(acc.begin(), acc.end(), r) - acc.begin();
    Point a = poly.vertex(0), b = poly.vertex(static_cast<int>(t) + 1),
          c = poly.vertex(static_cast<int>(t) + 2);
    double u = unit(rng), v = unit(rng);
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    return a + (b - a) * u + (c - a) * v;
}

double mc_area(const ConvexPolygon& poly, int samples, std::mt19937_64& rng,
               const std::function<bool(Point)>& inside) {
    double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
    for (const Point& v : poly.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
    int hit = 0;
    for (int i = 0; i < samples; ++i) {
        if (inside({ux(rng), uy(rng)})) ++hit;
    }
    return (xmax - xmin) * (ymax - ymin) * hit / samples;
}

double mc_region_area(const ArcPolygon& region, int samples, std::mt19937_64& rng) {
    auto [xmin, xmax, ymin, ymax] = region_bbox(region);
    std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
    Tolerance tol;
    tol.band = 1e-9;
    int hit = 0;
    for (int i = 0; i < samples; ++i) {
        if (region_classify(region, {ux(rng), uy(rng)}, tol) == Side::Inside) ++hit;
    }
    return (xmax - xmin) * (ymax - ymin) * hit / samples;
}

// ---------------------------------------------------------------------------
// Independent Dubins oracle: per family, a scalar feasibility function of the
// first-arc sweep whose zeros are the valid paths; zeros are found by a dense
// grid with sign-change bisection.
// ---------------------------------------------------------------------------

namespace {

Point circle_center(Point p, double heading, double side) {
    return {p.x - side * std::sin(heading), p.y + side * std::cos(heading)};
}

struct FamilyEval {
    double residual = 1e18;  // signed where possible
    double length = 1e18;
    bool feasible = false;
};

// CSC: residual = perpendicular miss of the straight leg.
FamilyEval eval_csc(Point goal, double phi, double s1, double s3, double t1) {
    FamilyEval ev;
    Point c1 = circle_center({0, 0}, 0.0, s1);
    double a0 = std::atan2(0.0 - c1.y, 0.0 - c1.x);
    double a1 = a0 + s1 * t1;
    Point p1{c1.x + std::cos(a1), c1.y + std::sin(a1)};
    double h1 = s1 * t1;
    double t3 = normalize_angle_2pi(s3 * (phi - h1));
    Point c3 = circle_center(goal, phi, s3);
    double ag = std::atan2(goal.y - c3.y, goal.x - c3.x);
    double aq = ag - s3 * t3;
    Point q3{c3.x + std::cos(aq), c3.y + std::sin(aq)};
    Vec2 u{std::cos(h1), std::sin(h1)};
    Vec2 need = q3 - p1;
    ev.residual = cross(u, need);
    double s = dot(u, need);
    if (s >= -1e-9) {
        ev.feasible = true;
        ev.length = t1 + std::max(s, 0.0) + t3;
    }
    return ev;
}

// CCC: residual = |cm - c3| - 2 for the middle circle implied by t1.
FamilyEval eval_ccc(Point goal, double phi, double s1, double t1) {
    FamilyEval ev;
    Point c1 = circle_center({0, 0}, 0.0, s1);
    double a0 = std::atan2(0.0 - c1.y, 0.0 - c1.x);
    double a1 = a0 + s1 * t1;
    Point sw{c1.x + std::cos(a1), c1.y + std::sin(a1)};
    Point cm{2 * sw.x - c1.x, 2 * sw.y - c1.y};
    Point c3 = circle_center(goal, phi, s1);
    double d = distance(cm, c3);
    ev.residual = d - 2.0;
    if (std::abs(ev.residual) < 1e-7) {
        Point m2{(cm.x + c3.x) / 2.0, (cm.y + c3.y) / 2.0};
        double am0 = std::atan2(sw.y - cm.y, sw.x - cm.x);
        double am1 = std::atan2(m2.y - cm.y, m2.x - cm.x);
        double tm = (-s1) > 0 ? normalize_angle_2pi(am1 - am0) : normalize_angle_2pi(am0 - am1);
        double a30 = std::atan2(m2.y - c3.y, m2.x - c3.x);
        double a31 = std::atan2(goal.y - c3.y, goal.x - c3.x);
        double t3 = s1 > 0 ? normalize_angle_2pi(a31 - a30) : normalize_angle_2pi(a30 - a31);
        if (tm > kPi) {
            ev.feasible = true;
            ev.length = t1 + tm + t3;
        }
    }
    return ev;
}

}  // namespace

double dubins_length_oracle(const Configuration& a, const Configuration& b) {
    Vec2 rel = b.point - a.point;
    double ca = a.dir.ux, sa = a.dir.uy;
    Point goal{ca * rel.x + sa * rel.y, -sa * rel.x + ca * rel.y};
    double phi = normalize_angle(b.dir.angle() - a.dir.angle());
    if (norm(goal) < 1e-12 && std::abs(phi) < 1e-12) return 0.0;

    double best = 1e18;
    const int N = 4000;
    const double step = kTwoPi / N;

    auto scan = [&](const std::function<FamilyEval(double)>& eval) {
        FamilyEval prev = eval(0.0);
        if (prev.feasible && std::abs(prev.residual) < 1e-9) best = std::min(best, prev.length);
        for (int i = 1; i <= N; ++i) {
            double t = step * i;
            FamilyEval cur = eval(t);
            if (std::signbit(cur.residual) != std::signbit(prev.residual) &&
                std::abs(cur.residual) < 1e17 && std::abs(prev.residual) < 1e17) {
                double lo = t - step, hi = t;
                for (int it = 0; it < 80; ++it) {
                    double mid = (lo + hi) / 2;
                    FamilyEval em = eval(mid);
                    if (std::signbit(em.residual) == std::signbit(eval(lo).residual)) lo = mid;
                    else hi = mid;
                }
                FamilyEval root = eval((lo + hi) / 2);
                if (root.feasible && std::abs(root.residual) < 1e-6)
                    best = std::min(best, root.length);
            }
            prev = cur;
        }
    };

    for (double s1 : {1.0, -1.0}) {
        for (double s3 : {1.0, -1.0}) {
            scan([&](double t1) { return eval_csc(goal, phi, s1, s3, t1); });
        }
        scan([&](double t1) { return eval_ccc(goal, phi, s1, t1); });
    }
    return best;
}

}  // namespace fixtures
