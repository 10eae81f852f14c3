#include "curvereach/boundary_reach.hpp"

#include <algorithm>
#include <limits>

namespace curvereach {

namespace {
constexpr double kSnap = 1e-7;
}

double LdaRegion::sweep_to(Point p) const {
    Vec2 rel = p - disk.center;
    double m = std::max(norm(rel), 1.0);
    double beta = std::atan2(rel.y, rel.x);
    double alpha = std::acos(std::clamp(1.0 / m, -1.0, 1.0));
    double theta = left ? beta - alpha : beta + alpha;
    return left ? ccw_sweep(start_angle, theta) : cw_sweep(start_angle, theta);
}

Side LdaRegion::classify(const ConvexPolygon& poly, Point p, double band) const {
    Tolerance tol;
    tol.band = band;
    Side ps = poly.classify(p, tol);
    if (ps == Side::Outside) return Side::Outside;
    if (region_boundary_distance(region, p) <= band) return Side::Boundary;
    double m = norm(p - disk.center);
    if (m < 1.0) return Side::Outside;
    if (ps != Side::Inside) return Side::Outside;
    if (full_sweep()) return Side::Inside;
    return sweep_to(p) <= sweep ? Side::Inside : Side::Outside;
}

LdaRegion lda(const ConvexPolygon& poly, const Configuration& c, bool left,
              const Tolerance& tol) {
    if (poly.classify(c.point, tol) == Side::Outside)
        throw Error("StartOutsidePolygon", "configuration is outside the polygon");
    if (!left) {
        LdaRegion m = lda(poly.mirrored(), mirror_config(c), true, tol);
        LdaRegion out;
        out.source = c;
        out.left = false;
        out.disk = right_disk(c);
        Vec2 rel = c.point - out.disk.center;
        out.start_angle = std::atan2(rel.y, rel.x);
        out.sweep = m.sweep;
        out.exit_arc_end =
            m.full_sweep() ? out.start_angle : normalize_angle(out.start_angle - m.sweep);
        out.region = mirror_region(m.region);
        return out;
    }

    LdaRegion out;
    out.source = c;
    out.left = true;
    out.disk = left_disk(c);
    Point o = out.disk.center;
    Vec2 rel = c.point - o;
    double a0 = std::atan2(rel.y, rel.x);
    out.start_angle = a0;

    // Advance along the circle from the source until it first leaves P.
    double sweep = kTwoPi;
    Point exit_pt;
    if (poly.min_signed_dist(o) < 1.0 - 10.0 * tol.len) {
        struct Crossing {
            double phi;
            Point p;
        };
        std::vector<Crossing> crossings;
        for (int i = 0; i < poly.size(); ++i) {
            for (Point p : intersect_circle_segment(out.disk, poly.edge(i), tol)) {
                double phi = ccw_sweep(a0, std::atan2(p.y - o.y, p.x - o.x));
                crossings.push_back({phi, p});
            }
        }
        std::sort(crossings.begin(), crossings.end(),
                  [](const Crossing& a, const Crossing& b) { return a.phi < b.phi; });
        for (size_t i = 0; i < crossings.size(); ++i) {
            if (i > 0 && crossings[i].phi - crossings[i - 1].phi < 1e-9) continue;
            double gap = (i + 1 < crossings.size() ? crossings[i + 1].phi : kTwoPi) -
                         crossings[i].phi;
            double probe = std::min(1e-6, std::max(gap / 2.0, 1e-12));
            Point q = o + Vec2{std::cos(a0 + crossings[i].phi + probe),
                               std::sin(a0 + crossings[i].phi + probe)};
            if (poly.min_signed_dist(q) < -1e-9) {
                sweep = crossings[i].phi;
                exit_pt = crossings[i].p;
                break;
            }
        }
    }
    out.sweep = sweep;

    if (out.full_sweep()) {
        out.exit_arc_end = a0;
        ArcPolygon region = region_from_polygon(poly);
        double mid = normalize_angle(a0 + kPi);
        region.cycles.push_back({Arc{o, a0, mid, false}, Arc{o, mid, a0, false}});
        out.region = std::move(region);
        return out;
    }

    out.exit_arc_end = normalize_angle(a0 + sweep);
    double t_ray = poly.clip_ray(c.point, c.dir.vec(), tol);
    Point e0 = c.point + c.dir.vec() * t_ray;
    std::vector<Element> cycle;
    if (distance(c.point, e0) > 10.0 * tol.len) cycle.push_back(Segment{c.point, e0});
    for (const Segment& seg : boundary_chain(poly, e0, exit_pt, tol)) cycle.push_back(seg);
    cycle.push_back(Arc{o, normalize_angle(a0 + sweep), a0, false});
    out.region = ArcPolygon{{std::move(cycle)}};
    return out;
}

bool chain_hits_disk_interior(const ForwardChain& chain, const UnitDisk& disk,
                              const Tolerance&) {
    for (const Segment& e : chain.elements) {
        if (distance_to_segment(disk.center, e) < 1.0 - kSnap) return true;
    }
    return false;
}

bool contained_in_polygon_or_disk(const ConvexPolygon& poly, Point c, const UnitDisk& dome,
                                  const Tolerance&) {
    if (distance(c, dome.center) <= 1e-9) return true;
    for (int i = 0; i < poly.size(); ++i) {
        double a = poly.signed_dist(c, i);
        if (a >= 1.0 - kSnap) continue;
        if (a <= -1.0 + kSnap) return false;
        // Cap of the disk beyond this edge line: contained in the dome iff
        // both chord corners are, and the farthest circle point stays inside P.
        Vec2 n = poly.inward_normal(i);
        Point foot = c - n * a;
        double h = std::sqrt(std::max(1.0 - a * a, 0.0));
        Vec2 t = poly.edge_dir(i).vec();
        if (distance(foot + t * h, dome.center) > 1.0 + kSnap) return false;
        if (distance(foot - t * h, dome.center) > 1.0 + kSnap) return false;
        Point far = c + normalized(c - dome.center);
        if (poly.signed_dist(far, i) < -1e-9) return false;
    }
    return true;
}

BlockingConfig blocking_config(const ConvexPolygon& poly, const BoundaryConfiguration& s1,
                               const Tolerance& tol) {
    ForwardChain chain = forward_chain(poly, s1, tol);
    Segment f = poly.edge(s1.edge_index);
    Point A = f.a;
    Vec2 u = poly.edge_dir(s1.edge_index).vec();
    Vec2 n = poly.inward_normal(s1.edge_index);
    double t1 = dot(s1.point - A, u);
    double L = f.length();

    double best = std::numeric_limits<double>::infinity();
    for (size_t k = 1; k < chain.elements.size(); ++k) {
        const Segment& e = chain.elements[k];
        auto g = [&](double t) { return distance_to_segment(A + u * t + n, e) - 1.0; };
        if (g(t1) <= 1e-9) {
            best = std::min(best, t1);
            continue;
        }
        // g is convex in t (distance to a convex set along a line); locate the
        // minimum, then the first crossing of zero.
        double lo = t1, hi = L;
        for (int it = 0; it < 100; ++it) {
            double m1 = lo + (hi - lo) / 3.0;
            double m2 = hi - (hi - lo) / 3.0;
            if (g(m1) <= g(m2)) hi = m2; else lo = m1;
        }
        double tm = (lo + hi) / 2.0;
        if (g(tm) > 1e-12) continue;
        double a = t1, b = tm;
        for (int it = 0; it < 100; ++it) {
            double m = (a + b) / 2.0;
            if (g(m) > 0.0) a = m; else b = m;
        }
        best = std::min(best, b);
    }

    if (best <= L + 1e-9) {
        double t = std::clamp(best, 0.0, L);
        return {BoundaryConfiguration{s1.edge_index, A + u * t, poly.edge_dir(s1.edge_index),
                                      true},
                false};
    }
    return {BoundaryConfiguration{s1.edge_index, f.b, poly.edge_dir(s1.edge_index), true}, true};
}

namespace {

struct RawCandidate {
    double t;
    CandidateKind kind;
};

std::vector<CandidateConfiguration> candidates_impl(const ConvexPolygon& poly,
                                                    const BoundaryConfiguration& s,
                                                    const ForwardChain& chain,
                                                    const UnitDisk& dl, const Tolerance& tol,
                                                    const std::vector<int>* edge_filter = nullptr) {
    // Contact points of the start disk with the polygon boundary (the point d
    // of the construction is the first of these along the boundary).
    std::vector<Point> corner_pts;
    for (int i = 0; i < poly.size(); ++i) {
        for (Point p : intersect_circle_segment(dl, poly.edge(i), tol)) {
            if (distance(p, s.point) <= kSnap) continue;
            corner_pts.push_back(p);
        }
    }
    std::vector<Point> chain_verts;
    chain_verts.push_back(chain.elements.front().a);
    for (const Segment& e : chain.elements) chain_verts.push_back(e.b);

    std::vector<CandidateConfiguration> out;
    int n = poly.size();
    for (int rel_edge = 0; rel_edge < n; ++rel_edge) {
        int fi = poly.wrap(s.edge_index + rel_edge);
        if (edge_filter &&
            std::find(edge_filter->begin(), edge_filter->end(), fi) == edge_filter->end())
            continue;
        Segment f = poly.edge(fi);
        Point A = f.a;
        Vec2 u = poly.edge_dir(fi).vec();
        Vec2 nin = poly.inward_normal(fi);
        double L = f.length();
        bool f_on_chain = std::find(chain.edge_indices.begin(), chain.edge_indices.end(), fi) !=
                          chain.edge_indices.end();
        double t_s = (fi == s.edge_index) ? dot(s.point - A, u) : 0.0;

        std::vector<RawCandidate> raw;
        // Tangency to a second chain edge: center on both inward offset lines.
        for (size_t k = 0; k < chain.elements.size(); ++k) {
            int gi = chain.edge_indices[k];
            if (gi == fi) continue;
            Vec2 ng = poly.inward_normal(gi);
            double denom = dot(ng, u);
            if (std::abs(denom) < 1e-12) continue;
            double cg = dot(ng, Vec2(poly.edge(gi).a)) + 1.0;
            double t = (cg - dot(ng, A + nin)) / denom;
            Point center = A + nin + u * t;
            Point foot = center - ng;
            double fp = dot(foot - chain.elements[k].a, chain.elements[k].delta()) /
                        std::max(sq_norm(chain.elements[k].delta()), 1e-30);
            if (fp < -kSnap || fp > 1.0 + kSnap) continue;
            raw.push_back({t, CandidateKind::TwoEdgeTangent});
        }
        // Disk through a chain vertex or through a boundary contact of DL(s).
        auto quad_hits = [&](Point w, CandidateKind kind) {
            Vec2 v0 = A + nin - w;
            double b = dot(v0, u);
            double c = sq_norm(v0) - 1.0;
            double disc = b * b - c;
            if (disc < 0.0) return;
            double r = std::sqrt(disc);
            raw.push_back({-b - r, kind});
            raw.push_back({-b + r, kind});
        };
        for (Point w : chain_verts) quad_hits(w, CandidateKind::TwoEdgeTangent);
        for (Point q : corner_pts) quad_hits(q, CandidateKind::OneEdgeThroughD);
        if (fi == s.edge_index) raw.push_back({t_s, CandidateKind::OneEdgeThroughD});

        std::sort(raw.begin(), raw.end(), [](const RawCandidate& a, const RawCandidate& b) {
            if (std::abs(a.t - b.t) > kSnap) return a.t < b.t;
            return a.kind < b.kind;
        });
        double last_t = std::numeric_limits<double>::quiet_NaN();
        for (const RawCandidate& rc : raw) {
            if (rc.t < -kSnap || rc.t > L + kSnap) continue;
            if (!std::isnan(last_t) && std::abs(rc.t - last_t) <= kSnap) continue;
            double t = std::clamp(rc.t, 0.0, L);
            Point center = A + nin + u * t;
            if (!contained_in_polygon_or_disk(poly, center, dl, tol)) continue;
            bool touching = f_on_chain && (fi != s.edge_index || t >= t_s - kSnap);
            if (!touching) touching = std::abs(chain.distance(center) - 1.0) <= 1e-6;
            if (!touching) continue;
            last_t = rc.t;
            out.push_back({BoundaryConfiguration{fi, A + u * t, poly.edge_dir(fi), true},
                           UnitDisk{center}, rc.kind});
        }
    }
    return out;
}

}  // namespace

std::vector<CandidateConfiguration> candidate_configurations(const ConvexPolygon& poly,
                                                             const BoundaryConfiguration& s,
                                                             const Tolerance& tol) {
    ForwardChain chain = forward_chain(poly, s, tol);
    UnitDisk dl = left_disk(s.config());
    if (chain_hits_disk_interior(chain, dl, tol))
        throw Error("PreconditionViolated", "forward chain enters the interior of the left disk");
    return candidates_impl(poly, s, chain, dl, tol);
}

Bfil bfil(const ConvexPolygon& poly, const BoundaryConfiguration& s, const Filling& fil,
          const Tolerance& tol) {
    Bfil out;
    ForwardChain chain = forward_chain(poly, s, tol);
    UnitDisk dl = left_disk(s.config());
    if (chain_hits_disk_interior(chain, dl, tol)) {
        out.pocket_case = true;
        out.entries.push_back({dl, s, BfilEntryKind::Start});
        return out;
    }

    auto extreme_config = [&](const UnitDisk& d) {
        for (int i = 0; i < poly.size(); ++i) {
            if (std::abs(poly.signed_dist(d.center, i) - 1.0) > 1e-6) continue;
            return BoundaryConfiguration{i, d.center - poly.inward_normal(i),
                                         poly.edge_dir(i), true};
        }
        return BoundaryConfiguration{0, d.center, poly.edge_dir(0), true};
    };

    if (!fil.empty() && fil.center_contains(dl.center, kSnap)) {
        out.start_disk_in_fil = true;
        for (const UnitDisk& d : fil.extreme_disks)
            out.entries.push_back({d, extreme_config(d), BfilEntryKind::FilExtreme});
        return out;
    }

    out.entries.push_back({dl, s, BfilEntryKind::Start});
    for (const UnitDisk& d : fil.extreme_disks)
        out.entries.push_back({d, extreme_config(d), BfilEntryKind::FilExtreme});

    // Tangent disks whose centers stay 2 or more away from the start disk can
    // never use it; they are contained in P outright and their accessible
    // regions are dominated by the complement of the core. Only edges whose
    // inward offset passes near DL(s) can contribute new disks.
    std::vector<int> near_edges;
    for (int i = 0; i < poly.size(); ++i) {
        Segment f = poly.edge(i);
        Vec2 nin = poly.inward_normal(i);
        Segment offset{f.a + nin, f.b + nin};
        if (i == s.edge_index || fil.empty() ||
            distance_to_segment(dl.center, offset) < 2.0 + kSnap)
            near_edges.push_back(i);
    }

    std::vector<CandidateConfiguration> cands =
        candidates_impl(poly, s, chain, dl, tol, &near_edges);
    int prev_edge = -1;
    for (const CandidateConfiguration& c : cands) {
        bool first_on_edge = c.config.edge_index != prev_edge;
        prev_edge = c.config.edge_index;
        out.entries.push_back({c.disk, c.config,
                               first_on_edge ? BfilEntryKind::EdgeFirst
                                             : BfilEntryKind::EdgeCandidate});
        if (first_on_edge) {
            BlockingConfig h1 = blocking_config(poly, c.config, tol);
            UnitDisk hd = left_disk(h1.config.config());
            if (contained_in_polygon_or_disk(poly, hd.center, dl, tol))
                out.entries.push_back({hd, h1.config, BfilEntryKind::EdgeBlocking});
        }
    }

    // Dedupe by disk center and generating point.
    std::vector<BfilEntry> unique;
    for (const BfilEntry& e : out.entries) {
        bool dup = false;
        for (const BfilEntry& u : unique) {
            if (distance(e.disk.center, u.disk.center) <= 1e-6 &&
                distance(e.config.point, u.config.point) <= 1e-6) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(e);
    }
    out.entries = std::move(unique);
    return out;
}

BoundaryReachParts boundary_reach_parts(const ConvexPolygon& poly,
                                        const BoundaryConfiguration& s, const Filling& fil,
                                        const Tolerance& tol) {
    BoundaryReachParts parts;
    parts.set = bfil(poly, s, fil, tol);
    if (parts.set.pocket_case) {
        parts.ldas.push_back(lda(poly, s.config(), true, tol));
        return parts;
    }
    parts.fil_complement = !fil.empty();
    for (const BfilEntry& e : parts.set.entries) {
        if (e.kind == BfilEntryKind::FilExtreme) continue;
        // Disks fully inside P are dominated by the complement of the core.
        if (!fil.empty() && fil.center_contains(e.disk.center, -kSnap)) continue;
        parts.ldas.push_back(lda(poly, e.config.config(), true, tol));
    }
    return parts;
}

ArcPolygon reach_from_boundary(const ConvexPolygon& poly, const BoundaryConfiguration& s,
                               const Tolerance& tol) {
    if (!s.forward) {
        ConvexPolygon pm = poly.mirrored();
        auto sm = as_boundary_config(pm, mirror_config(s.config()), tol);
        if (!sm || !sm->forward)
            throw Error("ClockwiseStart", "mirroring did not produce a forward configuration");
        return mirror_region(reach_from_boundary(pm, *sm, tol));
    }
    Filling fil = compute_filling(poly, tol);
    BoundaryReachParts parts = boundary_reach_parts(poly, s, fil, tol);
    std::vector<ArcPolygon> pieces;
    if (parts.fil_complement)
        pieces.push_back(polygon_minus_core(poly, core_intersection(fil, tol)));
    for (const LdaRegion& l : parts.ldas) pieces.push_back(l.region);
    return region_union(pieces, tol);
}

}  // namespace curvereach
