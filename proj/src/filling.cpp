#include "curvereach/filling.hpp"

#include <algorithm>
#include <limits>

namespace curvereach {

namespace {

// Sutherland-Hodgman clip of a convex loop against the halfplane n.x >= c.
// The keep test is relaxed so exactly-degenerate intersections (point or
// segment hulls) survive floating-point noise.
std::vector<Point> clip_halfplane(const std::vector<Point>& pts, Vec2 n, double c) {
    constexpr double eps = 1e-9;
    std::vector<Point> out;
    int k = static_cast<int>(pts.size());
    for (int i = 0; i < k; ++i) {
        Point a = pts[i];
        Point b = pts[(i + 1) % k];
        double da = dot(n, a) - c;
        double db = dot(n, b) - c;
        if (da >= -eps) out.push_back(a);
        if ((da > eps && db < -eps) || (da < -eps && db > eps)) {
            double t = da / (da - db);
            out.push_back(a + (b - a) * t);
        }
    }
    return out;
}

std::vector<Point> dedupe_loop(std::vector<Point> pts, double eps) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        if (out.empty() || distance(out.back(), p) > eps) out.push_back(p);
    }
    while (out.size() > 1 && distance(out.front(), out.back()) <= eps) out.pop_back();
    // Remove collinear interior points.
    bool changed = true;
    while (changed && out.size() > 2) {
        changed = false;
        for (size_t i = 0; i < out.size(); ++i) {
            Point a = out[(i + out.size() - 1) % out.size()];
            Point b = out[i];
            Point c = out[(i + 1) % out.size()];
            if (std::abs(cross(b - a, c - b)) < eps * (norm(b - a) + norm(c - b) + eps)) {
                out.erase(out.begin() + i);
                changed = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace

bool Filling::center_contains(Point c, double slack) const {
    size_t k = center_hull.size();
    if (k == 0) return false;
    if (k == 1) return distance(c, center_hull[0]) <= slack;
    if (k == 2) return distance_to_segment(c, {center_hull[0], center_hull[1]}) <= slack;
    for (size_t i = 0; i < k; ++i) {
        Vec2 e = center_hull[(i + 1) % k] - center_hull[i];
        if (cross(e, c - center_hull[i]) < -slack * norm(e)) return false;
    }
    return true;
}

Filling compute_filling(const ConvexPolygon& poly, const Tolerance& tol) {
    std::vector<Point> hull = poly.vertices();
    for (int i = 0; i < poly.size() && !hull.empty(); ++i) {
        Vec2 n = poly.inward_normal(i);
        hull = clip_halfplane(hull, n, dot(n, Vec2(poly.vertex(i))) + 1.0);
    }
    hull = dedupe_loop(std::move(hull), 10.0 * tol.len);

    Filling fil;
    fil.center_hull = hull;
    for (const Point& p : hull) fil.extreme_disks.push_back(UnitDisk{p});
    size_t k = hull.size();
    if (k == 0) return fil;
    if (k == 1) {
        fil.fil_region = region_from_disk(UnitDisk{hull[0]});
        return fil;
    }
    // Minkowski sum of the hull with the unit disk: offset segments joined by
    // arcs at the hull vertices. A 2-point hull yields a stadium via the same
    // loop over directed hull edges.
    std::vector<Element> cycle;
    auto outward = [&](size_t i) {
        Vec2 d = normalized(hull[(i + 1) % k] - hull[i]);
        return perp_cw(d);
    };
    for (size_t i = 0; i < k; ++i) {
        size_t j = (i + 1) % k;
        Vec2 r = outward(i);
        cycle.push_back(Segment{hull[i] + r, hull[j] + r});
        Vec2 r2 = outward(j);
        double a0 = std::atan2(r.y, r.x);
        double a1 = std::atan2(r2.y, r2.x);
        if (ccw_sweep(a0, a1) > 1e-12 && ccw_sweep(a0, a1) < kTwoPi - 1e-12)
            cycle.push_back(Arc{hull[j], a0, a1, true});
    }
    fil.fil_region = ArcPolygon{{std::move(cycle)}};
    return fil;
}

std::vector<Segment> boundary_chain(const ConvexPolygon& poly, Point a, Point b,
                                    const Tolerance& tol) {
    int ia = poly.nearest_edge(a);
    int ib = poly.nearest_edge(b);
    std::vector<Segment> out;
    auto push = [&](Point p, Point q) {
        if (distance(p, q) > 10.0 * tol.len) out.push_back({p, q});
    };
    if (ia == ib) {
        Segment e = poly.edge(ia);
        double ta = dot(a - e.a, e.delta());
        double tb = dot(b - e.a, e.delta());
        if (ta <= tb) {
            push(a, b);
            return out;
        }
    }
    push(a, poly.edge(ia).b);
    for (int i = poly.wrap(ia + 1); i != ib; i = poly.wrap(i + 1)) {
        out.push_back(poly.edge(i));
    }
    push(poly.edge(ib).a, b);
    return out;
}

std::vector<Pocket> compute_pockets(const ConvexPolygon& poly, const Filling& fil,
                                    const Tolerance& tol) {
    if (fil.empty()) throw Error("EmptyFilling", "pockets need a nonempty filling");
    std::vector<Pocket> pockets;
    size_t k = fil.center_hull.size();
    double eps = 1e-7;

    if (k == 1) {
        // Single inscribed disk: pockets lie between consecutive tangency feet.
        Point c = fil.center_hull[0];
        std::vector<Point> feet;
        for (int i = 0; i < poly.size(); ++i) {
            if (std::abs(poly.signed_dist(c, i) - 1.0) > eps) continue;
            Point foot = c - poly.inward_normal(i);
            feet.push_back(foot);
        }
        std::sort(feet.begin(), feet.end(), [&](Point p, Point q) {
            return std::atan2(p.y - c.y, p.x - c.x) < std::atan2(q.y - c.y, q.x - c.x);
        });
        for (size_t i = 0; i < feet.size(); ++i) {
            Point t_in = feet[i];
            Point t_out = feet[(i + 1) % feet.size()];
            double a0 = std::atan2(t_in.y - c.y, t_in.x - c.x);
            double a1 = std::atan2(t_out.y - c.y, t_out.x - c.x);
            pockets.push_back({UnitDisk{c}, Arc{c, a0, a1, true},
                               boundary_chain(poly, t_in, t_out, tol), t_in, t_out});
        }
        return pockets;
    }

    // One pocket per hull vertex, between the tangency feet of its adjacent
    // hull edges on their generating polygon edges.
    auto generating_edge = [&](Point ha, Point hb) -> int {
        Vec2 d = normalized(hb - ha);
        for (int i = 0; i < poly.size(); ++i) {
            if (std::abs(poly.signed_dist(ha, i) - 1.0) > eps) continue;
            if (std::abs(poly.signed_dist(hb, i) - 1.0) > eps) continue;
            Vec2 e = poly.edge_dir(i).vec();
            if (dot(d, e) > 0.0 && std::abs(cross(d, e)) < eps) return i;
        }
        throw Error("DegenerateFilling", "hull edge without a generating polygon edge");
    };

    size_t m = (k == 2) ? 2 : k;  // directed hull edges
    for (size_t i = 0; i < m; ++i) {
        Point prev = fil.center_hull[(i + m - 1) % m];
        Point v = fil.center_hull[i];
        Point next = fil.center_hull[(i + 1) % m];
        int e_in = generating_edge(prev, v);
        int e_out = generating_edge(v, next);
        Point t_in = v - poly.inward_normal(e_in);
        Point t_out = v - poly.inward_normal(e_out);
        double a0 = std::atan2(t_in.y - v.y, t_in.x - v.x);
        double a1 = std::atan2(t_out.y - v.y, t_out.x - v.x);
        pockets.push_back({UnitDisk{v}, Arc{v, a0, a1, true},
                           boundary_chain(poly, t_in, t_out, tol), t_in, t_out});
    }
    return pockets;
}

ArcPolygon intersect_unit_disks(const std::vector<UnitDisk>& disks, const Tolerance& tol) {
    std::vector<Point> centers;
    for (const UnitDisk& d : disks) {
        bool dup = false;
        for (const Point& c : centers)
            if (distance(c, d.center) <= tol.len) dup = true;
        if (!dup) centers.push_back(d.center);
    }
    if (centers.empty()) return {};
    if (centers.size() == 1) return region_from_disk(UnitDisk{centers[0]});

    struct ArcPiece {
        Point center;
        double from, to;
    };
    std::vector<ArcPiece> pieces;
    for (size_t i = 0; i < centers.size(); ++i) {
        // Feasible angular interval of circle i inside every other disk,
        // tracked as midpoint +- halfwidth (each constraint has halfwidth
        // below pi/2, so the intersection stays a single interval).
        double mid = 0.0, half = kPi;
        bool alive = true;
        for (size_t j = 0; j < centers.size() && alive; ++j) {
            if (j == i) continue;
            Vec2 d = centers[j] - centers[i];
            double dist_ij = norm(d);
            if (dist_ij >= 2.0 - tol.len) return {};
            double cmid = std::atan2(d.y, d.x);
            double chalf = std::acos(std::clamp(dist_ij / 2.0, -1.0, 1.0));
            if (half >= kPi - 1e-15) {
                mid = cmid;
                half = chalf;
                continue;
            }
            double delta = normalize_angle(cmid - mid);
            double lo = std::max(-half, delta - chalf);
            double hi = std::min(half, delta + chalf);
            if (lo > hi) {
                alive = false;
                break;
            }
            mid = mid + (lo + hi) / 2.0;
            half = (hi - lo) / 2.0;
        }
        if (alive && half > 1e-7) pieces.push_back({centers[i], mid - half, mid + half});
    }
    if (pieces.empty()) return {};

    // Chain the arcs into the single convex boundary cycle.
    std::vector<Element> cycle;
    std::vector<bool> used(pieces.size(), false);
    cycle.push_back(Arc{pieces[0].center, pieces[0].from, pieces[0].to, true});
    used[0] = true;
    Point cur = element_end(cycle.back());
    for (size_t step = 1; step < pieces.size(); ++step) {
        double best = std::numeric_limits<double>::infinity();
        size_t pick = pieces.size();
        for (size_t j = 0; j < pieces.size(); ++j) {
            if (used[j]) continue;
            double d = distance(cur, Arc{pieces[j].center, pieces[j].from, pieces[j].to, true}.start());
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        if (pick == pieces.size() || best > 1e-5)
            throw Error("DegenerateCore", "disk intersection boundary did not close");
        used[pick] = true;
        cycle.push_back(Arc{pieces[pick].center, pieces[pick].from, pieces[pick].to, true});
        cur = element_end(cycle.back());
    }
    if (distance(cur, element_start(cycle.front())) > 1e-5)
        throw Error("DegenerateCore", "disk intersection boundary did not close");
    ArcPolygon r{{std::move(cycle)}};
    if (region_area(r) < 1e-12) return {};
    return r;
}

Core core_intersection(const Filling& fil, const Tolerance& tol) {
    if (fil.empty()) throw Error("EmptyFilling", "core needs a nonempty filling");
    return Core{intersect_unit_disks(fil.extreme_disks, tol)};
}

ArcPolygon polygon_minus_core(const ConvexPolygon& poly, const Core& core) {
    ArcPolygon out = region_from_polygon(poly);
    for (const auto& cyc : core.region.cycles) {
        std::vector<Element> rev;
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) {
            if (const Segment* s = std::get_if<Segment>(&*it)) {
                rev.push_back(Segment{s->b, s->a});
            } else {
                const Arc& a = std::get<Arc>(*it);
                rev.push_back(Arc{a.center, a.to_angle, a.from_angle, !a.ccw});
            }
        }
        out.cycles.push_back(std::move(rev));
    }
    return out;
}

}  // namespace curvereach
