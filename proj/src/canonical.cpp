#include "curvereach/canonical.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace curvereach {

namespace {
constexpr double kSnap = 1e-7;
constexpr double kArcSample = 1e-3;  // rad, prefix-in-polygon verification step

// Samples an arc (center o, from angle a0, signed sweep) against the edges of
// P whose supporting lines come within 1 of the center.
bool arc_inside_polygon_sampled(const ConvexPolygon& poly, Point o, double a0, double sweep,
                                bool ccw) {
    std::vector<int> near_edges;
    for (int i = 0; i < poly.size(); ++i) {
        if (poly.signed_dist(o, i) < 1.0 + 1e-6) near_edges.push_back(i);
    }
    if (near_edges.empty()) return true;
    int steps = std::max(1, static_cast<int>(std::ceil(sweep / kArcSample)));
    double sign = ccw ? 1.0 : -1.0;
    for (int k = 0; k <= steps; ++k) {
        double ang = a0 + sign * sweep * k / steps;
        Point p{o.x + std::cos(ang), o.y + std::sin(ang)};
        for (int i : near_edges) {
            if (poly.signed_dist(p, i) < -1e-9) return false;
        }
    }
    return true;
}

}  // namespace

DaRegion direct_access(const ConvexPolygon& poly, const Configuration& s, const Tolerance& tol) {
    DaRegion da{lda(poly, s, true, tol), lda(poly, s, false, tol), {}};
    da.union_region = region_union({da.left.region, da.right.region}, tol);
    return da;
}

std::vector<CanonicalStart> canonical_starts(const ConvexPolygon& poly, const Configuration& s,
                                             const Tolerance& tol) {
    if (poly.classify(s.point, tol) == Side::Outside)
        throw Error("StartOutsidePolygon", "configuration is outside the polygon");
    std::vector<CanonicalStart> out;
    for (int kind = 0; kind < 2; ++kind) {
        bool rl = (kind == 0);
        UnitDisk first = rl ? right_disk(s) : left_disk(s);
        Point c1 = first.center;
        double a_start = std::atan2(s.point.y - c1.y, s.point.x - c1.x);
        for (int f = 0; f < poly.size(); ++f) {
            Segment edge = poly.edge(f);
            Vec2 u = poly.edge_dir(f).vec();
            Vec2 n = poly.inward_normal(f);
            // Second disk: tangent to the first disk, tangent to edge f from
            // inside. Its center sits on the inward offset line at distance 2
            // from c1.
            double c_off = dot(n, Vec2(edge.a)) + 1.0;
            double dd = c_off - dot(n, Vec2(c1));
            if (std::abs(dd) > 2.0 + kSnap) continue;
            double h = std::sqrt(std::max(4.0 - dd * dd, 0.0));
            for (double side : {-1.0, 1.0}) {
                if (h < kSnap && side > 0.0) continue;  // tangent line: single solution
                Point c2 = c1 + n * dd + u * (side * h);
                Point end_pt = c2 - n;
                double te = dot(end_pt - edge.a, u);
                if (te < kSnap || te > edge.length() - kSnap) continue;
                Point m = c1 + (c2 - c1) * 0.5;
                double a_m1 = std::atan2(m.y - c1.y, m.x - c1.x);
                double a_m2 = std::atan2(m.y - c2.y, m.x - c2.x);
                double a_end = std::atan2(end_pt.y - c2.y, end_pt.x - c2.x);
                double sweep1 = rl ? cw_sweep(a_start, a_m1) : ccw_sweep(a_start, a_m1);
                double sweep2 = rl ? ccw_sweep(a_m2, a_end) : cw_sweep(a_m2, a_end);
                if (sweep1 < 1e-9) sweep1 = 0.0;
                if (sweep2 < 1e-9) sweep2 = 0.0;
                if (!arc_inside_polygon_sampled(poly, c1, a_start, sweep1, !rl)) continue;
                if (!arc_inside_polygon_sampled(poly, c2, a_m2, sweep2, rl)) continue;
                CanonicalStart cs;
                cs.rl = rl;
                cs.edge_index = f;
                cs.first_disk = first;
                cs.second_disk = UnitDisk{c2};
                cs.sweep1 = sweep1;
                cs.sweep2 = sweep2;
                Vec2 switch_dir = rl ? perp_cw(normalized(m - c1)) : perp_ccw(normalized(m - c1));
                cs.switch_config = Configuration{m, Direction(switch_dir)};
                Direction ed = poly.edge_dir(f);
                cs.end = BoundaryConfiguration{f, end_pt, rl ? ed : ed.reversed(), rl};
                out.push_back(cs);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CanonicalStart& a, const CanonicalStart& b) {
        if (a.edge_index != b.edge_index) return a.edge_index < b.edge_index;
        if (a.rl != b.rl) return a.rl && !b.rl;
        return a.sweep1 < b.sweep1;
    });
    return out;
}

const ConvexPolygon& ReachSet::mirrored_polygon() const {
    if (!poly_mirror_) throw Error("Internal", "mirrored polygon was not built");
    return *poly_mirror_;
}

ReachSet ReachSet::compute(const ConvexPolygon& poly, const Configuration& s,
                           const Tolerance& tol) {
    auto t0 = std::chrono::steady_clock::now();
    ReachSet rs(poly, s, tol);

    auto bc = as_boundary_config(poly, s, tol);
    std::vector<ArcPolygon> pieces;
    bool fil_complement = false;

    if (bc) {
        rs.stats_.boundary_start = true;
        ReachBundle bundle;
        bundle.mirrored = !bc->forward;
        const ConvexPolygon* world = &rs.poly_;
        if (bundle.mirrored) {
            rs.poly_mirror_ = poly.mirrored();
            world = &*rs.poly_mirror_;
            auto em = as_boundary_config(*world, mirror_config(s), tol);
            if (!em || !em->forward)
                throw Error("Internal", "mirroring did not yield a forward configuration");
            bundle.end = *em;
        } else {
            bundle.end = *bc;
        }
        Filling fil = compute_filling(*world, tol);
        bundle.parts = boundary_reach_parts(*world, bundle.end, fil, tol);
        if (bundle.parts.fil_complement) {
            ArcPolygon comp = polygon_minus_core(*world, core_intersection(fil, tol));
            pieces.push_back(bundle.mirrored ? mirror_region(comp) : comp);
            fil_complement = true;
        }
        for (const LdaRegion& l : bundle.parts.ldas)
            pieces.push_back(bundle.mirrored ? mirror_region(l.region) : l.region);
        rs.bundles_.push_back(std::move(bundle));
    } else {
        Side ps = poly.classify(s.point, tol);
        if (ps == Side::Outside)
            throw Error("StartOutsidePolygon", "configuration is outside the polygon");
        if (ps == Side::Boundary) {
            // Non-tangent boundary start: the heading must point inward.
            int e = poly.nearest_edge(s.point);
            if (dot(s.dir.vec(), poly.inward_normal(e)) < 0.0)
                throw Error("StartOutsidePolygon", "boundary start heading out of the polygon");
        }
        UnitDisk dl = left_disk(s);
        UnitDisk dr = right_disk(s);
        bool dl_in = poly.contains_disk(dl, kSnap);
        bool dr_in = poly.contains_disk(dr, kSnap);
        if (dl_in && dr_in) {
            // Both side disks fit: everything is directly accessible.
            rs.stats_.da_covers = true;
            rs.da_ = DaRegion{lda(poly, s, true, tol), lda(poly, s, false, tol),
                              region_from_polygon(poly)};
            rs.region_ = region_from_polygon(poly);
            rs.stats_.area = region_area(rs.region_);
            rs.stats_.wall_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
            return rs;
        }

        rs.da_ = direct_access(poly, s, tol);
        std::vector<CanonicalStart> starts = canonical_starts(poly, s, tol);
        rs.stats_.canonical_start_count = static_cast<int>(starts.size());

        Filling fil = compute_filling(poly, tol);
        std::optional<Filling> fil_mirror;
        for (const CanonicalStart& cs : starts) {
            if (!cs.rl && !rs.poly_mirror_) {
                rs.poly_mirror_ = poly.mirrored();
                fil_mirror = compute_filling(*rs.poly_mirror_, tol);
            }
        }

        pieces.push_back(rs.da_->left.region);
        pieces.push_back(rs.da_->right.region);

        // Dedupe accessible regions across bundles by their generating disk
        // and tangency point in original coordinates.
        std::vector<std::pair<Point, Point>> seen;
        auto fresh = [&](Point center, Point src) {
            for (const auto& [c, p] : seen) {
                if (distance(c, center) <= 1e-6 && distance(p, src) <= 1e-6) return false;
            }
            seen.push_back({center, src});
            return true;
        };

        for (const CanonicalStart& cs : starts) {
            ReachBundle bundle;
            bundle.canonical = cs;
            bundle.mirrored = !cs.rl;
            const ConvexPolygon& world = cs.rl ? rs.poly_ : *rs.poly_mirror_;
            const Filling& wfil = cs.rl ? fil : *fil_mirror;
            if (cs.rl) {
                bundle.end = cs.end;
            } else {
                auto em = as_boundary_config(world, mirror_config(cs.end.config()), tol);
                if (!em || !em->forward) continue;  // grazing vertex after mirroring
                bundle.end = *em;
            }
            bundle.parts = boundary_reach_parts(world, bundle.end, wfil, tol);
            if (bundle.parts.fil_complement && !fil_complement) {
                pieces.push_back(polygon_minus_core(poly, core_intersection(fil, tol)));
                fil_complement = true;
            }
            for (const LdaRegion& l : bundle.parts.ldas) {
                Point c = bundle.mirrored ? mirror_point(l.disk.center) : l.disk.center;
                Point p = bundle.mirrored ? mirror_point(l.source.point) : l.source.point;
                if (!fresh(c, p)) continue;
                pieces.push_back(bundle.mirrored ? mirror_region(l.region) : l.region);
            }
            rs.bundles_.push_back(std::move(bundle));
        }
    }

    rs.region_ = region_union(pieces, tol);

    std::vector<Point> disks_seen;
    for (const ReachBundle& b : rs.bundles_) {
        for (const BfilEntry& e : b.parts.set.entries) {
            Point c = b.mirrored ? mirror_point(e.disk.center) : e.disk.center;
            bool dup = false;
            for (const Point& q : disks_seen)
                if (distance(q, c) <= 1e-6) dup = true;
            if (!dup) disks_seen.push_back(c);
        }
    }
    rs.stats_.bfil_size = static_cast<int>(disks_seen.size());
    rs.stats_.arc_count = region_arc_count(rs.region_);
    rs.stats_.area = region_area(rs.region_);
    rs.stats_.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rs;
}

}  // namespace curvereach
