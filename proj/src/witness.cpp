#include "curvereach/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvereach {

double CurvaturePath::length() const {
    double L = 0.0;
    for (const PathPrimitive& p : primitives) L += p.amount;
    return L;
}

Configuration advance(const Configuration& c, const PathPrimitive& p, double fraction) {
    double amt = p.amount * fraction;
    if (!p.is_arc) return {c.point + c.dir.vec() * amt, c.dir};
    double sign = (p.turn == Turn::Left) ? 1.0 : -1.0;
    Point o = c.point + (p.turn == Turn::Left ? perp_ccw(c.dir.vec()) : perp_cw(c.dir.vec()));
    Vec2 radial = c.point - o;
    Vec2 nr = rotated(radial, sign * amt);
    return {o + nr, Direction(rotated(c.dir.vec(), sign * amt))};
}

Configuration CurvaturePath::end_config() const {
    Configuration c = start;
    for (const PathPrimitive& p : primitives) c = advance(c, p);
    return c;
}

CurvaturePath normalized_path(const CurvaturePath& p, double eps) {
    CurvaturePath out;
    out.start = p.start;
    for (const PathPrimitive& prim : p.primitives)
        if (prim.amount > eps) out.primitives.push_back(prim);
    return out;
}

CurvaturePath mirror_path(const CurvaturePath& p) {
    CurvaturePath out;
    out.start = mirror_config(p.start);
    for (PathPrimitive prim : p.primitives) {
        if (prim.is_arc) prim.turn = (prim.turn == Turn::Left) ? Turn::Right : Turn::Left;
        out.primitives.push_back(prim);
    }
    return out;
}

bool schema_within_ccscs(const CurvaturePath& p) {
    const bool schema_is_arc[5] = {true, true, false, true, false};
    size_t slot = 0;
    for (const PathPrimitive& prim : p.primitives) {
        while (slot < 5 && schema_is_arc[slot] != prim.is_arc) ++slot;
        if (slot == 5) return false;
        ++slot;
    }
    return true;
}

PathValidation validate_path(const ConvexPolygon& poly, const CurvaturePath& path,
                             std::optional<Point> target, double step) {
    PathValidation v;
    Configuration c = path.start;
    auto check = [&](Point p) {
        if (poly.min_signed_dist(p) < 0.0)
            v.max_polygon_violation = std::max(v.max_polygon_violation, poly.boundary_distance(p));
    };
    check(c.point);
    for (const PathPrimitive& prim : path.primitives) {
        int n = std::max(1, static_cast<int>(std::ceil(prim.amount / step)));
        for (int k = 1; k <= n; ++k) {
            Configuration q = advance(c, prim, static_cast<double>(k) / n);
            check(q.point);
        }
        c = advance(c, prim);
    }
    if (target) v.endpoint_error = distance(c.point, *target);
    return v;
}

// ---------------------------------------------------------------------------
// Dubins shortest path
// ---------------------------------------------------------------------------

namespace {

struct DubinsCandidate {
    double total = std::numeric_limits<double>::infinity();
    std::vector<PathPrimitive> prims;
};

double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

void consider(DubinsCandidate& best, std::vector<PathPrimitive> prims) {
    double total = 0.0;
    for (const PathPrimitive& p : prims) total += p.amount;
    if (total < best.total) best = {total, std::move(prims)};
}

void csc_family(DubinsCandidate& best, const Configuration& a, const Configuration& b,
                bool left1, bool left2) {
    UnitDisk d1 = left1 ? left_disk(a) : right_disk(a);
    UnitDisk d2 = left2 ? left_disk(b) : right_disk(b);
    Vec2 D = d2.center - d1.center;
    double d = norm(D);
    Turn t1 = left1 ? Turn::Left : Turn::Right;
    Turn t2 = left2 ? Turn::Left : Turn::Right;
    if (left1 == left2) {
        if (d < 1e-9) {
            // Same circle: one arc suffices.
            double a0 = angle_of(a.point - d1.center);
            double a1 = angle_of(b.point - d1.center);
            double sweep = left1 ? ccw_sweep(a0, a1) : cw_sweep(a0, a1);
            consider(best, {PathPrimitive::arc(t1, sweep), PathPrimitive::straight(0.0),
                            PathPrimitive::arc(t2, 0.0)});
            return;
        }
        Vec2 u = D * (1.0 / d);
        Vec2 off = left1 ? perp_cw(u) : perp_ccw(u);
        Point q1 = d1.center + off;
        Point q2 = d2.center + off;
        double s1 = left1 ? ccw_sweep(angle_of(a.point - d1.center), angle_of(q1 - d1.center))
                          : cw_sweep(angle_of(a.point - d1.center), angle_of(q1 - d1.center));
        double s2 = left2 ? ccw_sweep(angle_of(q2 - d2.center), angle_of(b.point - d2.center))
                          : cw_sweep(angle_of(q2 - d2.center), angle_of(b.point - d2.center));
        consider(best, {PathPrimitive::arc(t1, s1), PathPrimitive::straight(d),
                        PathPrimitive::arc(t2, s2)});
        return;
    }
    if (d < 2.0) return;  // no inner tangent
    double lam = std::sqrt(std::max(d * d - 4.0, 0.0));
    Vec2 pD = perp_ccw(D);
    Vec2 u = left1 ? Vec2{(lam * D.x + 2.0 * pD.x) / (d * d), (lam * D.y + 2.0 * pD.y) / (d * d)}
                   : Vec2{(lam * D.x - 2.0 * pD.x) / (d * d), (lam * D.y - 2.0 * pD.y) / (d * d)};
    Point q1 = d1.center + (left1 ? perp_cw(u) : perp_ccw(u));
    Point q2 = d2.center + (left2 ? perp_cw(u) : perp_ccw(u));
    double s1 = left1 ? ccw_sweep(angle_of(a.point - d1.center), angle_of(q1 - d1.center))
                      : cw_sweep(angle_of(a.point - d1.center), angle_of(q1 - d1.center));
    double s2 = left2 ? ccw_sweep(angle_of(q2 - d2.center), angle_of(b.point - d2.center))
                      : cw_sweep(angle_of(q2 - d2.center), angle_of(b.point - d2.center));
    consider(best, {PathPrimitive::arc(t1, s1), PathPrimitive::straight(lam),
                    PathPrimitive::arc(t2, s2)});
}

void ccc_family(DubinsCandidate& best, const Configuration& a, const Configuration& b,
                bool left_outer) {
    UnitDisk d1 = left_outer ? left_disk(a) : right_disk(a);
    UnitDisk d2 = left_outer ? left_disk(b) : right_disk(b);
    Vec2 D = d2.center - d1.center;
    double d = norm(D);
    if (d < 1e-9 || d > 4.0) return;
    Vec2 u = D * (1.0 / d);
    double h = std::sqrt(std::max(4.0 - d * d / 4.0, 0.0));
    Turn touter = left_outer ? Turn::Left : Turn::Right;
    Turn tmid = left_outer ? Turn::Right : Turn::Left;
    for (double side : {1.0, -1.0}) {
        Point c3 = d1.center + u * (d / 2.0) + perp_ccw(u) * (side * h);
        Point m1 = d1.center + (c3 - d1.center) * 0.5;
        Point m2 = d2.center + (c3 - d2.center) * 0.5;
        double s1 = left_outer ? ccw_sweep(angle_of(a.point - d1.center), angle_of(m1 - d1.center))
                               : cw_sweep(angle_of(a.point - d1.center), angle_of(m1 - d1.center));
        double s2 = left_outer ? cw_sweep(angle_of(m1 - c3), angle_of(m2 - c3))
                               : ccw_sweep(angle_of(m1 - c3), angle_of(m2 - c3));
        double s3 = left_outer ? ccw_sweep(angle_of(m2 - d2.center), angle_of(b.point - d2.center))
                               : cw_sweep(angle_of(m2 - d2.center), angle_of(b.point - d2.center));
        if (s2 <= kPi) continue;  // shortest CCC paths have a long middle arc
        consider(best, {PathPrimitive::arc(touter, s1), PathPrimitive::arc(tmid, s2),
                        PathPrimitive::arc(touter, s3)});
    }
}

}  // namespace

CurvaturePath dubins_shortest(const Configuration& a, const Configuration& b) {
    CurvaturePath out;
    out.start = a;
    if (distance(a.point, b.point) < 1e-12 &&
        std::abs(normalize_angle(b.dir.angle() - a.dir.angle())) < 1e-12) {
        return out;  // zero-length path
    }
    DubinsCandidate best;
    csc_family(best, a, b, true, true);    // LSL
    csc_family(best, a, b, false, false);  // RSR
    csc_family(best, a, b, true, false);   // LSR
    csc_family(best, a, b, false, true);   // RSL
    ccc_family(best, a, b, true);          // LRL
    ccc_family(best, a, b, false);         // RLR
    out.primitives = best.prims;
    return out;
}

// ---------------------------------------------------------------------------
// CCSCS witness construction
// ---------------------------------------------------------------------------

namespace {

struct WitnessTry {
    CurvaturePath world_path;  // in machinery coordinates
};

double tangency_angle_ccw(Point center, Point t) {
    Vec2 rel = t - center;
    double m = std::max(norm(rel), 1.0);
    return std::atan2(rel.y, rel.x) - std::acos(std::clamp(1.0 / m, -1.0, 1.0));
}

// From a counterclockwise boundary configuration `e` (in world coordinates),
// continue on DL(e) to the outer tangent of the target disk, roll along the
// disk and leave tangentially toward t. Fills arc/straight amounts; returns
// false when the segment between the disks leaves the polygon.
bool connect_through_disk(const ConvexPolygon& poly, const BoundaryConfiguration& e,
                          const UnitDisk& target_disk, double target_entry_angle_hint,
                          bool via_hint, Point t, double& dA, double& s1, double& dB,
                          double& s2) {
    UnitDisk d2 = left_disk(e.config());
    double end_angle = angle_of(e.point - d2.center);
    Vec2 rel = t - target_disk.center;
    double m = std::max(norm(rel), 1.0);
    double theta_t = tangency_angle_ccw(target_disk.center, t);
    s2 = std::sqrt(std::max(m * m - 1.0, 0.0));
    if (distance(target_disk.center, d2.center) <= 1e-9) {
        dA = ccw_sweep(end_angle, theta_t);
        s1 = 0.0;
        dB = 0.0;
        return true;
    }
    Vec2 u = normalized(target_disk.center - d2.center);
    Point q2 = d2.center + perp_cw(u);
    Point qf = target_disk.center + perp_cw(u);
    if (poly.min_signed_dist(q2) < -1e-9 || poly.min_signed_dist(qf) < -1e-9) return false;
    dA = ccw_sweep(end_angle, angle_of(q2 - d2.center));
    s1 = distance(q2, qf);
    double entry = angle_of(qf - target_disk.center);
    if (via_hint) {
        dB = ccw_sweep(entry, target_entry_angle_hint) +
             ccw_sweep(target_entry_angle_hint, theta_t);
    } else {
        dB = ccw_sweep(entry, theta_t);
    }
    return true;
}

}  // namespace

std::optional<CurvaturePath> witness_path(const ReachSet& rs, Point t) {
    const ConvexPolygon& poly = rs.polygon();
    const Tolerance& tol = rs.tolerance();
    if (poly.classify(t, tol) == Side::Outside)
        throw Error("TargetOutsidePolygon", "query point lies outside the polygon");

    auto try_path = [&](CurvaturePath world_path, bool mirrored) -> std::optional<CurvaturePath> {
        CurvaturePath path = mirrored ? mirror_path(world_path) : world_path;
        PathValidation v = validate_path(poly, path, t);
        if (v.max_polygon_violation <= tol.band && v.endpoint_error <= tol.band) return path;
        return std::nullopt;
    };

    // Directly accessible points need one arc and one segment.
    if (rs.da()) {
        for (const LdaRegion* l : {&rs.da()->left, &rs.da()->right}) {
            if (l->classify(poly, t, tol.band) == Side::Outside) continue;
            double delta = l->sweep_to(t);
            if (!l->full_sweep() && delta > l->sweep + tol.band) continue;
            double m = std::max(norm(t - l->disk.center), 1.0);
            CurvaturePath p;
            p.start = rs.start();
            p.primitives = {PathPrimitive::arc(l->left ? Turn::Left : Turn::Right, delta),
                            PathPrimitive::straight(std::sqrt(std::max(m * m - 1.0, 0.0)))};
            if (auto ok = try_path(p, false)) return ok;
        }
    }

    for (const ReachBundle& bundle : rs.bundles()) {
        const ConvexPolygon& world = bundle.mirrored ? rs.mirrored_polygon() : poly;
        Point tw = bundle.mirrored ? mirror_point(t) : t;
        Configuration wstart = bundle.mirrored ? mirror_config(rs.start()) : rs.start();

        auto compose = [&](double dA, double s1, double dB, double s2)
            -> std::optional<CurvaturePath> {
            CurvaturePath wp;
            wp.start = wstart;
            if (bundle.canonical) {
                wp.primitives.push_back(PathPrimitive::arc(Turn::Right, bundle.canonical->sweep1));
                wp.primitives.push_back(
                    PathPrimitive::arc(Turn::Left, bundle.canonical->sweep2 + dA));
            } else {
                wp.primitives.push_back(PathPrimitive::arc(Turn::Left, dA));
            }
            wp.primitives.push_back(PathPrimitive::straight(s1));
            wp.primitives.push_back(PathPrimitive::arc(Turn::Left, dB));
            wp.primitives.push_back(PathPrimitive::straight(s2));
            return try_path(wp, bundle.mirrored);
        };

        // Pocket case and candidate disks: aim through the accessible region
        // of each bfil entry that t belongs to.
        for (const LdaRegion& l : bundle.parts.ldas) {
            if (l.classify(world, tw, tol.band) == Side::Outside) continue;
            double dA, s1, dB, s2;
            for (bool via : {false, true}) {
                if (!connect_through_disk(world, bundle.end, l.disk, l.start_angle, via, tw, dA,
                                          s1, dB, s2))
                    break;
                if (auto ok = compose(dA, s1, dB, s2)) return ok;
                if (distance(l.disk.center, left_disk(bundle.end.config()).center) <= 1e-9)
                    break;  // merged-arc route has no alternative
            }
        }
        // Disks of the filling: reachable tangentially, and their accessible
        // region is the polygon minus the disk interior.
        if (bundle.parts.fil_complement) {
            for (const BfilEntry& e : bundle.parts.set.entries) {
                if (e.kind != BfilEntryKind::FilExtreme) continue;
                if (norm(tw - e.disk.center) < 1.0 - tol.band) continue;
                double dA, s1, dB, s2;
                if (!connect_through_disk(world, bundle.end, e.disk, 0.0, false, tw, dA, s1, dB,
                                          s2))
                    continue;
                if (auto ok = compose(dA, s1, dB, s2)) return ok;
            }
        }
    }

    if (rs.classify(t) == Side::Inside)
        throw Error("NoWitnessFound",
                    "point is classified reachable but no witness composition validated");
    return std::nullopt;
}

}  // namespace curvereach
